#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgt/error.hpp"

namespace sgt {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

namespace nt {

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// distinct prime factors, increasing
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return (unsigned __int128)a * b % m; }

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

// Legendre symbol for an odd prime p via Euler's criterion.
inline int legendre(i64 a, u64 p) {
  u64 r = ((a % (i64)p) + (i64)p) % p;
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// If q = p^d for a prime p, returns (p, d).
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  unsigned d = 0;
  while (q > 1) {
    q /= f[0];
    ++d;
  }
  return std::make_pair(f[0], d);
}

}  // namespace nt

// Dense polynomials over Z_p, constant term first.
namespace poly {

using Poly = std::vector<u64>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = nt::powmod(f.back(), p - 2, p);
  while (a.size() > df) {
    u64 c = nt::mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + p - nt::mulmod(c, f[i], p)) % p;
    trim(a);
  }
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + nt::mulmod(a[i], b[j], p)) % p;
  return mod(std::move(r), f, p);
}

inline Poly powmod(Poly b, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  b = mod(std::move(b), f, p);
  while (e) {
    if (e & 1) r = mulmod(r, b, f, p);
    b = mulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's irreducibility test.
inline bool irreducible(const Poly& f, u64 p) {
  const std::size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  auto frob_iter = [&](std::size_t k) {
    Poly r = x;
    for (std::size_t i = 0; i < k; ++i) r = powmod(r, p, f, p);
    return r;
  };
  if (!sub(frob_iter(d), x, p).empty()) return false;
  for (u64 r : nt::prime_factors(d)) {
    Poly g = gcd(f, sub(frob_iter(d / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

class FieldElement;

// GF(p^d) as Z_p[X]/(modulus). Elements are coded as integers
// sum c_i p^i over their coefficient vectors; code 0 is zero, code 1 is one.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  static constexpr u64 kMaxQ = u64(1) << 31;
  static constexpr u64 kTableQ = u64(1) << 22;
  static constexpr u64 kExhaustiveQ = 2048;

  static Field make(u64 p, unsigned d) {
    if (!nt::is_prime(p)) fail(Errc::NotPrime, std::to_string(p));
    if (d == 0) fail(Errc::BadParameters, "extension degree must be positive");
    check_size(p, d);
    poly::Poly f;
    if (d == 1) {
      f = {0, 1};
    } else {
      // Low-degree coefficients compared first: the constant term is the most
      // significant digit of the counter.
      const u64 count = nt::ipow(p, d);
      for (u64 t = 0; t < count; ++t) {
        poly::Poly cand(d + 1, 0);
        u64 r = t;
        for (unsigned i = d; i-- > 0;) {
          cand[i] = r % p;
          r /= p;
        }
        cand[d] = 1;
        if (cand[0] == 0) continue;
        if (poly::irreducible(cand, p)) {
          f = std::move(cand);
          break;
        }
      }
    }
    return Field(new FieldSpec(p, d, std::move(f)));
  }

  static Field make_with_modulus(u64 p, poly::Poly modulus) {
    if (!nt::is_prime(p)) fail(Errc::NotPrime, std::to_string(p));
    poly::trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) fail(Errc::BadParameters, "modulus must be monic of degree >= 1");
    for (auto& c : modulus) c %= p;
    unsigned d = modulus.size() - 1;
    check_size(p, d);
    if (!poly::irreducible(modulus, p)) fail(Errc::NotIrreducible, "modulus is reducible");
    return Field(new FieldSpec(p, d, std::move(modulus)));
  }

  // Field with q elements (q a prime power).
  static Field make_q(u64 q) {
    auto pp = nt::prime_power(q);
    if (!pp) fail(Errc::BadParameters, std::to_string(q) + " is not a prime power");
    return make(pp->first, pp->second);
  }

  u64 p() const { return p_; }
  unsigned d() const { return d_; }
  u64 q() const { return q_; }
  const poly::Poly& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }
  bool exhaustive() const { return q_ <= kExhaustiveQ; }
  bool odd() const { return p_ != 2; }

  u32 zero() const { return 0; }
  u32 one() const { return 1; }
  u32 generator() const { return gen_; }

  std::vector<u64> coeffs(u32 x) const {
    std::vector<u64> c(d_, 0);
    for (unsigned i = 0; i < d_; ++i) {
      c[i] = x % p_;
      x /= p_;
    }
    return c;
  }

  u32 from_coeffs(const std::vector<u64>& c) const {
    if (c.size() > d_) fail(Errc::IndexOutOfRange, "too many coefficients");
    u64 x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p_ + (c[i] % p_);
    return (u32)x;
  }

  u32 from_int(i64 a) const { return (u32)(((a % (i64)p_) + (i64)p_) % (i64)p_); }

  bool valid(u64 x) const { return x < q_; }

  u32 add(u32 a, u32 b) const {
    if (p_ == 2) return a ^ b;
    if (d_ == 1) {
      u64 s = (u64)a + b;
      return (u32)(s >= p_ ? s - p_ : s);
    }
    u32 r = 0, m = 1;
    for (unsigned i = 0; i < d_; ++i) {
      u32 s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * m;
      m *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  u32 neg(u32 a) const {
    if (p_ == 2) return a;
    if (d_ == 1) return a ? (u32)(p_ - a) : 0;
    u32 r = 0, m = 1;
    for (unsigned i = 0; i < d_; ++i) {
      u32 c = a % p_;
      r += (c ? p_ - c : 0) * m;
      m *= p_;
      a /= p_;
    }
    return r;
  }

  u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }

  u32 mul(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
      u64 s = (u64)log_[a] + log_[b];
      if (s >= q_ - 1) s -= q_ - 1;
      return exp_[s];
    }
    return mul_slow(a, b);
  }

  u32 pow(u32 a, i64 e) const {
    if (e < 0) return pow(inv(a), -e);
    if (a == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) return exp_[(u64)(((unsigned __int128)log_[a] * (u64)e) % (q_ - 1))];
    u32 r = 1, b = a;
    u64 k = (u64)e;
    while (k) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  u32 inv(u32 a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return exp_[log_[a] == 0 ? 0 : q_ - 1 - log_[a]];
    return pow(a, (i64)(q_ - 2));
  }

  u32 div(u32 a, u32 b) const { return mul(a, inv(b)); }

  // discrete log base the canonical generator
  u64 log(u32 a) const {
    if (a == 0) fail(Errc::ZeroElement, "log of zero");
    if (exp_.empty()) fail(Errc::CapExceeded, "discrete log needs tables (q <= 2^22)");
    return log_[a];
  }

  u32 exp(i64 j) const {
    i64 m = (i64)(q_ - 1);
    j %= m;
    if (j < 0) j += m;
    if (!exp_.empty()) return exp_[j];
    return pow(gen_, j);
  }

  u64 order(u32 a) const {
    if (a == 0) fail(Errc::ZeroElement, "order of zero");
    u64 n = q_ - 1;
    for (u64 r : nt::prime_factors(q_ - 1))
      while (n % r == 0 && pow(a, (i64)(n / r)) == 1) n /= r;
    return n;
  }

  // Absolute trace GF(q) -> Z_p.
  u64 abs_trace(u32 x) const {
    u64 t = 0;
    for (unsigned i = 0; i < d_; ++i) {
      t = (t + (x % p_) * trace_basis_[i]) % p_;
      x /= p_;
    }
    return t;
  }

  // Euler's formula: sigma(a) = a^((q-1)/2).
  int sigma(u32 a) const {
    if (p_ == 2) fail(Errc::EvenCharacteristic, "quadratic signature needs odd q");
    if (a == 0) return 0;
    if (!exp_.empty()) return (log_[a] & 1) ? -1 : 1;
    return pow(a, (i64)((q_ - 1) / 2)) == 1 ? 1 : -1;
  }

  FieldElement elem(u32 x) const;
  FieldElement elem_int(i64 a) const;

 private:
  FieldSpec(u64 p, unsigned d, poly::Poly f) : p_(p), d_(d), q_(nt::ipow(p, d)), modulus_(std::move(f)) {
    find_generator();
    build_tables();
    trace_basis_.resize(d_);
    for (unsigned i = 0; i < d_; ++i) {
      std::vector<u64> c(d_, 0);
      c[i] = 1;
      u32 xi = d_ == 1 ? 1 : from_coeffs(c);
      u32 acc = 0, cur = xi;
      for (unsigned k = 0; k < d_; ++k) {
        acc = add(acc, cur);
        cur = pow(cur, (i64)p_);
      }
      trace_basis_[i] = acc;  // lies in the prime field, so its code is < p
    }
  }

  static void check_size(u64 p, unsigned d) {
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < d; ++i) {
      q *= p;
      if (q > kMaxQ) fail(Errc::SizeOverflow, "p^d exceeds 2^31");
    }
  }

  u32 mul_slow(u32 a, u32 b) const {
    if (d_ == 1) return (u32)nt::mulmod(a, b, p_);
    poly::Poly pa = coeffs(a), pb = coeffs(b);
    poly::trim(pa);
    poly::trim(pb);
    poly::Poly r = poly::mulmod(pa, pb, modulus_, p_);
    r.resize(d_, 0);
    return from_coeffs(r);
  }

  void find_generator() {
    if (q_ == 2) {
      gen_ = 1;
      return;
    }
    auto fs = nt::prime_factors(q_ - 1);
    for (u64 x = 1; x < q_; ++x) {
      bool ok = true;
      for (u64 r : fs) {
        u32 acc = 1, b = (u32)x;
        u64 e = (q_ - 1) / r;
        while (e) {
          if (e & 1) acc = mul_slow(acc, b);
          b = mul_slow(b, b);
          e >>= 1;
        }
        if (acc == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen_ = (u32)x;
        return;
      }
    }
    fail(Errc::NotIrreducible, "no multiplicative generator found");
  }

  void build_tables() {
    if (q_ > kTableQ) return;
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    u32 cur = 1;
    for (u64 j = 0; j + 1 < q_; ++j) {
      exp_[j] = cur;
      log_[cur] = (u32)j;
      cur = mul_slow(cur, gen_);
    }
  }

  u64 p_;
  unsigned d_;
  u64 q_;
  poly::Poly modulus_;
  u32 gen_ = 1;
  std::vector<u32> exp_, log_;
  std::vector<u64> trace_basis_;
};

// Element handle carrying its field; arithmetic between different fields throws.
class FieldElement {
 public:
  FieldElement(const FieldSpec* s, u32 v) : spec_(s), v_(v) {}
  const FieldSpec* spec() const { return spec_; }
  u32 value() const { return v_; }
  std::vector<u64> coeffs() const { return spec_->coeffs(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return {spec_, spec_->add(v_, check(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {spec_, spec_->sub(v_, check(o))}; }
  FieldElement operator-() const { return {spec_, spec_->neg(v_)}; }
  FieldElement operator*(const FieldElement& o) const { return {spec_, spec_->mul(v_, check(o))}; }
  FieldElement operator/(const FieldElement& o) const { return {spec_, spec_->div(v_, check(o))}; }
  FieldElement inv() const { return {spec_, spec_->inv(v_)}; }
  FieldElement pow(i64 e) const { return {spec_, spec_->pow(v_, e)}; }
  bool operator==(const FieldElement& o) const { return spec_ == o.spec_ && v_ == o.v_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  u32 check(const FieldElement& o) const {
    if (o.spec_ != spec_) fail(Errc::SpecMismatch, "operands live in different fields");
    return o.v_;
  }
  const FieldSpec* spec_;
  u32 v_;
};

inline FieldElement FieldSpec::elem(u32 x) const {
  if (x >= q_) fail(Errc::IndexOutOfRange, "element code out of range");
  return {this, x};
}
inline FieldElement FieldSpec::elem_int(i64 a) const { return {this, from_int(a)}; }

// K/F with |F| = q, [K:F] = n; F is realized inside K by sending the canonical
// generator of F to the enumeration-least element of K sharing its minimal polynomial.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(Field big, Field base) : big_(std::move(big)), base_(std::move(base)) {
    if (big_->p() != base_->p() || big_->d() % base_->d() != 0)
      fail(Errc::SpecMismatch, "base field is not a subfield");
    if (!big_->has_tables()) fail(Errc::CapExceeded, "embedding needs a tabulated big field");
    n_ = big_->d() / base_->d();
    const FieldSpec& K = *big_;
    const FieldSpec& F = *base_;
    const u64 q = F.q(), Q = K.q();
    // minimal polynomial of g_F over Z_p: prod (X - g^(p^k)), computed in F
    std::vector<u32> mp{1};
    u32 c = F.generator();
    for (unsigned k = 0; k < F.d(); ++k) {
      std::vector<u32> nxt(mp.size() + 1, 0);
      for (std::size_t i = 0; i < mp.size(); ++i) {
        nxt[i + 1] = F.add(nxt[i + 1], mp[i]);
        nxt[i] = F.sub(nxt[i], F.mul(mp[i], c));
      }
      mp = std::move(nxt);
      c = F.pow(c, (i64)F.p());
    }
    // candidates of order dividing q-1 in K, in enumeration order
    std::vector<u32> cand;
    const u64 step = (Q - 1) / (q - 1);
    for (u64 j = 0; j < q - 1; ++j) cand.push_back(K.exp((i64)(j * step)));
    std::sort(cand.begin(), cand.end());
    std::optional<u32> h;
    for (u32 x : cand) {
      u32 acc = 0;
      for (std::size_t i = mp.size(); i-- > 0;) acc = K.add(K.mul(acc, x), mp[i]);  // prime-field codes agree
      if (acc == 0) {
        h = x;
        break;
      }
    }
    if (!h) fail(Errc::SpecMismatch, "no image for the base generator");
    lift_.assign(q, 0);
    unlift_.assign(Q, -1);
    u32 cur = 1;
    for (u64 j = 0; j + 1 < q; ++j) {
      lift_[F.exp((i64)j)] = cur;
      cur = K.mul(cur, *h);
    }
    for (u64 a = 0; a < q; ++a) unlift_[lift_[a]] = (i64)a;
  }

  const Field& big() const { return big_; }
  const Field& base() const { return base_; }
  unsigned degree() const { return n_; }

  u32 lift(u32 a) const {
    if (a >= lift_.size()) fail(Errc::SpecMismatch, "not a base element");
    return lift_[a];
  }
  bool in_base(u32 x) const { return x < unlift_.size() && unlift_[x] >= 0; }
  u32 unlift(u32 x) const {
    if (!in_base(x)) fail(Errc::SpecMismatch, "element not in the embedded base field");
    return (u32)unlift_[x];
  }

  u32 frobenius(u32 x) const {
    check_big(x);
    return big_->pow(x, (i64)base_->q());
  }
  // Tr and N as elements of K (they lie in the image of F)
  u32 trace_big(u32 x) const {
    check_big(x);
    u32 acc = 0, cur = x;
    for (unsigned k = 0; k < n_; ++k) {
      acc = big_->add(acc, cur);
      cur = big_->pow(cur, (i64)base_->q());
    }
    return acc;
  }
  u32 norm_big(u32 x) const {
    check_big(x);
    return big_->pow(x, (i64)((big_->q() - 1) / (base_->q() - 1)));
  }
  u32 trace(u32 x) const { return unlift(trace_big(x)); }
  u32 norm(u32 x) const { return unlift(norm_big(x)); }

 private:
  void check_big(u32 x) const {
    if (x >= big_->q()) fail(Errc::SpecMismatch, "not an element of the big field");
  }
  Field big_, base_;
  unsigned n_;
  std::vector<u32> lift_;
  std::vector<i64> unlift_;
};

// ---- squares ----

inline int quadratic_signature(const FieldSpec& F, u32 a) { return F.sigma(a); }

// J_c = sum over a+b=c of sigma(a) sigma(b)
inline i64 convolution_J(const FieldSpec& F, u32 c) {
  if (!F.odd()) fail(Errc::EvenCharacteristic, "J_c needs odd q");
  i64 s = 0;
  for (u32 a = 0; a < F.q(); ++a) s += F.sigma(a) * F.sigma(F.sub(c, a));
  return s;
}

// #{(x,y) : a x^2 + b y^2 = 1}, by exhaustion
inline i64 count_conic(const FieldSpec& F, u32 a, u32 b) {
  if (!F.odd()) fail(Errc::EvenCharacteristic, "conic count needs odd q");
  if (a == 0 || b == 0) fail(Errc::ZeroCoefficient, "a and b must be non-zero");
  std::vector<u32> sq(F.q());
  for (u32 x = 0; x < F.q(); ++x) sq[x] = F.mul(x, x);
  std::vector<i64> cnt_by(F.q(), 0);
  for (u32 y = 0; y < F.q(); ++y) cnt_by[F.mul(b, sq[y])]++;
  i64 total = 0;
  for (u32 x = 0; x < F.q(); ++x) total += cnt_by[F.sub(1, F.mul(a, sq[x]))];
  return total;
}

inline i64 conic_formula(const FieldSpec& F, u32 a, u32 b) {
  return (i64)F.q() - F.sigma(F.neg(F.mul(a, b)));
}

// S(a) = sum_x sigma(x^3 + a x)
inline i64 jacobsthal_sum(const FieldSpec& F, u32 a) {
  if (!F.odd()) fail(Errc::EvenCharacteristic, "needs odd q");
  i64 s = 0;
  for (u32 x = 0; x < F.q(); ++x) s += F.sigma(F.add(F.pow(x, 3), F.mul(a, x)));
  return s;
}

struct JacobsthalResult {
  i64 A, B;        // |S| / 2 on squares, on non-squares
  i64 S_square, S_nonsquare;
};

inline JacobsthalResult jacobsthal(const FieldSpec& F) {
  if (F.q() % 4 != 1) fail(Errc::BadResidueClass, "needs q = 1 mod 4");
  i64 s1 = jacobsthal_sum(F, 1);
  i64 s2 = jacobsthal_sum(F, F.generator());
  return {std::abs(s1) / 2, std::abs(s2) / 2, s1, s2};
}

// (p/l)(l/p) == (-1)^((p-1)(l-1)/4)
inline bool reciprocity_check(u64 p, u64 l) {
  if (!nt::is_prime(p) || p == 2) fail(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  if (!nt::is_prime(l) || l == 2) fail(Errc::NotPrime, std::to_string(l) + " is not an odd prime");
  if (p == l) fail(Errc::BadParameters, "primes must be distinct");
  int lhs = nt::legendre((i64)p, l) * nt::legendre((i64)l, p);
  int rhs = (((p - 1) / 2) * ((l - 1) / 2)) % 2 ? -1 : 1;
  return lhs == rhs;
}

// Gaussian binomial: number of k-dimensional subspaces of GF(q)^n
inline BigInt q_binomial(i64 n, i64 k, u64 q) {
  if (n < 0 || k < 0 || k > n) fail(Errc::IndexOutOfRange, "need 0 <= k <= n");
  BigInt num = 1, den = 1, Q = q;
  for (i64 i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(Q, (unsigned)(n - i)) - 1;
    den *= boost::multiprecision::pow(Q, (unsigned)(i + 1)) - 1;
  }
  return num / den;
}

}  // namespace sgt
