#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "sgt/finite_field.hpp"

namespace sgt {

using ComplexValue = std::complex<double>;

namespace detail {
// exp(2 pi i r / m) with r reduced exactly first
inline ComplexValue root_of_unity(i64 r, i64 m) {
  r %= m;
  if (r < 0) r += m;
  if (r == 0) return {1.0, 0.0};
  double th = 2.0 * std::numbers::pi * (double)r / (double)m;
  return {std::cos(th), std::sin(th)};
}
}  // namespace detail

// psi_t(x) = exp(2 pi i AbsTr(t x) / p)
class AdditiveCharacter {
 public:
  AdditiveCharacter(Field F, u32 t) : F_(std::move(F)), t_(t) {
    if (t_ >= F_->q()) fail(Errc::IndexOutOfRange, "twist outside the field");
  }
  const Field& field() const { return F_; }
  u32 twist() const { return t_; }
  bool trivial() const { return t_ == 0; }
  ComplexValue operator()(u32 x) const {
    if (t_ == 0) return {1.0, 0.0};
    return detail::root_of_unity((i64)F_->abs_trace(F_->mul(t_, x)), (i64)F_->p());
  }
  ComplexValue operator()(const FieldElement& x) const {
    if (x.spec() != F_.get()) fail(Errc::SpecMismatch, "argument from another field");
    return (*this)(x.value());
  }
  AdditiveCharacter conj() const { return {F_, F_->neg(t_)}; }

 private:
  Field F_;
  u32 t_;
};

// chi_k(g^j) = exp(2 pi i k j / (q-1)); chi(0) = 0 unless chi is trivial.
class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter(Field F, i64 k) : F_(std::move(F)) {
    i64 m = (i64)F_->q() - 1;
    k_ = ((k % m) + m) % m;
  }
  const Field& field() const { return F_; }
  i64 index() const { return k_; }
  i64 modulus() const { return (i64)F_->q() - 1; }
  bool trivial() const { return k_ == 0; }
  // order of chi in the dual group
  i64 order() const { return modulus() / std::gcd(k_, modulus()); }
  ComplexValue operator()(u32 x) const {
    if (x == 0) return k_ == 0 ? ComplexValue{1.0, 0.0} : ComplexValue{0.0, 0.0};
    if (k_ == 0) return {1.0, 0.0};
    i64 m = modulus();
    return detail::root_of_unity((i64)(((unsigned __int128)k_ * F_->log(x)) % (u64)m), m);
  }
  ComplexValue operator()(const FieldElement& x) const {
    if (x.spec() != F_.get()) fail(Errc::SpecMismatch, "argument from another field");
    return (*this)(x.value());
  }
  MultiplicativeCharacter conj() const { return {F_, -k_}; }
  MultiplicativeCharacter operator*(const MultiplicativeCharacter& o) const {
    if (o.F_.get() != F_.get()) fail(Errc::SpecMismatch, "characters of different fields");
    return {F_, k_ + o.k_};
  }
  MultiplicativeCharacter power(i64 e) const { return {F_, (i64)(((__int128)k_ * e) % modulus())}; }

 private:
  Field F_;
  i64 k_;
};

inline MultiplicativeCharacter quadratic_character(const Field& F) {
  if (!F->odd()) fail(Errc::EvenCharacteristic, "needs odd q");
  return {F, (i64)(F->q() - 1) / 2};
}

namespace detail {
inline void same(const Field& a, const Field& b) {
  if (a.get() != b.get()) fail(Errc::SpecMismatch, "characters live on different fields");
}
}  // namespace detail

// G(psi, chi) = sum over s != 0 of psi(s) chi(s)
inline ComplexValue gauss_sum(const AdditiveCharacter& psi, const MultiplicativeCharacter& chi) {
  detail::same(psi.field(), chi.field());
  ComplexValue s = 0;
  for (u32 x = 1; x < psi.field()->q(); ++x) s += psi(x) * chi(x);
  return s;
}

// J(chi1, chi2) = sum over s + t = 1 of chi1(s) chi2(t)
inline ComplexValue jacobi_sum(const MultiplicativeCharacter& c1, const MultiplicativeCharacter& c2) {
  detail::same(c1.field(), c2.field());
  const FieldSpec& F = *c1.field();
  ComplexValue s = 0;
  for (u32 x = 0; x < F.q(); ++x) s += c1(x) * c2(F.sub(1, x));
  return s;
}

// E(chi) over Tr(s) = 1, or the singular E_0(chi) over Tr(s) = 0, s != 0
inline ComplexValue eisenstein_sum(const SubfieldEmbedding& emb, const MultiplicativeCharacter& chi, bool singular) {
  detail::same(emb.big(), chi.field());
  const u32 target = singular ? 0 : emb.lift(1);
  ComplexValue s = 0;
  for (u32 x = 1; x < emb.big()->q(); ++x)
    if (emb.trace_big(x) == target) s += chi(x);
  return s;
}

// chi restricted to the embedded base field, as a character of F
inline MultiplicativeCharacter restrict_character(const SubfieldEmbedding& emb, const MultiplicativeCharacter& chi) {
  detail::same(emb.big(), chi.field());
  const FieldSpec& K = *emb.big();
  const FieldSpec& F = *emb.base();
  u64 L = K.log(emb.lift(F.generator()));
  u64 step = (K.q() - 1) / (F.q() - 1);
  return {emb.base(), (i64)(((unsigned __int128)chi.index() * (L / step)) % (F.q() - 1))};
}

inline bool trivial_on_base(const SubfieldEmbedding& emb, const MultiplicativeCharacter& chi) {
  return restrict_character(emb, chi).trivial();
}

// psi of F composed with the trace, as a character of K
inline AdditiveCharacter induced_character(const SubfieldEmbedding& emb, const AdditiveCharacter& psi) {
  detail::same(emb.base(), psi.field());
  return {emb.big(), emb.lift(psi.twist())};
}

// K(psi1, psi2) = sum over s t = 1 of psi1(s) psi2(t)
inline ComplexValue kloosterman_sum(const AdditiveCharacter& p1, const AdditiveCharacter& p2) {
  detail::same(p1.field(), p2.field());
  const FieldSpec& F = *p1.field();
  ComplexValue s = 0;
  for (u32 x = 1; x < F.q(); ++x) s += p1(x) * p2(F.inv(x));
  return s;
}

// S(psi) = sum over N(s) = 1 of psi(s), psi additive on K
inline ComplexValue norm_restricted_sum(const SubfieldEmbedding& emb, const AdditiveCharacter& psi) {
  detail::same(emb.big(), psi.field());
  ComplexValue s = 0;
  for (u32 x = 1; x < emb.big()->q(); ++x)
    if (emb.norm_big(x) == 1) s += psi(x);
  return s;
}

inline double deligne_bound(const SubfieldEmbedding& emb) {
  return emb.degree() * std::pow((double)emb.base()->q(), (emb.degree() - 1) / 2.0);
}

// ---- polynomial character sums ----

// polynomial over F, constant term first
using FieldPoly = std::vector<u32>;

inline u32 eval_poly(const FieldSpec& F, const FieldPoly& f, u32 x) {
  u32 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

namespace detail {
inline FieldPoly poly_mul(const FieldSpec& F, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return r;
}
}  // namespace detail

// Whether monic f equals g^m for some polynomial g; exhaustive over monic g.
inline bool is_mth_power(const FieldSpec& F, const FieldPoly& f, i64 m) {
  const std::size_t d = f.size() - 1;
  if (m <= 1) return true;
  if (d % (std::size_t)m) return false;
  const std::size_t e = d / m;
  u64 count = 1;
  for (std::size_t i = 0; i < e; ++i) count *= F.q();
  for (u64 t = 0; t < count; ++t) {
    FieldPoly g(e + 1, 0);
    u64 r = t;
    for (std::size_t i = 0; i < e; ++i) {
      g[i] = (u32)(r % F.q());
      r /= F.q();
    }
    g[e] = 1;
    FieldPoly acc{1};
    for (i64 k = 0; k < m; ++k) acc = detail::poly_mul(F, acc, g);
    if (acc == f) return true;
  }
  return false;
}

struct WeilCheck {
  double magnitude;
  double bound;
  bool pass;
  bool hypothesis_verified;  // false means the caller was trusted
  ComplexValue sum;
};

inline ComplexValue poly_character_sum(const MultiplicativeCharacter& chi, const FieldPoly& f) {
  const FieldSpec& F = *chi.field();
  ComplexValue s = 0;
  for (u32 x = 0; x < F.q(); ++x) s += chi(eval_poly(F, f, x));
  return s;
}

inline ComplexValue poly_character_sum(const AdditiveCharacter& psi, const FieldPoly& f) {
  const FieldSpec& F = *psi.field();
  ComplexValue s = 0;
  for (u32 x = 0; x < F.q(); ++x) s += psi(eval_poly(F, f, x));
  return s;
}

namespace detail {
inline void check_monic(const FieldPoly& f) {
  if (f.size() < 2 || f.back() != 1) fail(Errc::BadParameters, "f must be monic of degree >= 1");
}
}  // namespace detail

// |sum chi(f(s))| <= (deg f - 1) sqrt(q) when f is not an m-th power, m = ord(chi)
inline WeilCheck weil_poly_check(const MultiplicativeCharacter& chi, const FieldPoly& f) {
  detail::check_monic(f);
  if (chi.trivial()) fail(Errc::HypothesisViolated, "character must be non-trivial");
  const FieldSpec& F = *chi.field();
  const std::size_t d = f.size() - 1;
  bool verified = false;
  if (F.q() <= 169 && d <= 4) {
    if (is_mth_power(F, f, chi.order())) fail(Errc::HypothesisViolated, "f is an m-th power");
    verified = true;
  }
  ComplexValue s = poly_character_sum(chi, f);
  double bound = (double)(d - 1) * std::sqrt((double)F.q());
  return {std::abs(s), bound, std::abs(s) <= bound + 1e-9, verified, s};
}

// |sum psi(f(s))| <= (deg f - 1) sqrt(q) when gcd(deg f, q) = 1
inline WeilCheck weil_poly_check(const AdditiveCharacter& psi, const FieldPoly& f) {
  detail::check_monic(f);
  if (psi.trivial()) fail(Errc::HypothesisViolated, "character must be non-trivial");
  const FieldSpec& F = *psi.field();
  const std::size_t d = f.size() - 1;
  if (std::gcd((u64)d, F.q()) != 1) fail(Errc::HypothesisViolated, "deg f shares a factor with q");
  ComplexValue s = poly_character_sum(psi, f);
  double bound = (double)(d - 1) * std::sqrt((double)F.q());
  return {std::abs(s), bound, std::abs(s) <= bound + 1e-9, true, s};
}

struct PowerCount {
  i64 by_characters;
  i64 exhaustive;
};

// #{h : h^d = a}, as sum over chi^d = 1 of chi(a), and by counting
inline PowerCount dth_power_count(const Field& F, i64 d, u32 a) {
  if (a == 0) fail(Errc::ZeroElement, "a must be non-zero");
  if (d <= 0) fail(Errc::BadParameters, "d must be positive");
  const i64 m = (i64)F->q() - 1;
  const i64 step = m / std::gcd(d % m == 0 ? m : d % m, m);
  ComplexValue s = 0;
  for (i64 k = 0; k < m; k += step) s += MultiplicativeCharacter(F, k)(a);
  i64 ex = 0;
  for (u32 h = 1; h < F->q(); ++h)
    if (F->pow(h, d) == a) ++ex;
  return {(i64)std::llround(s.real()), ex};
}

}  // namespace sgt
