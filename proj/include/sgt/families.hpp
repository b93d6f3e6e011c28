#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgt/finite_field.hpp"
#include "sgt/graph.hpp"
#include "sgt/invariants.hpp"

namespace sgt {

// ---- finite abelian groups as products of cyclic factors ----

// Elements are coordinate tuples; the vertex id is the mixed-radix index with
// the last coordinate varying fastest.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<i64> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) fail(Errc::BadParameters, "group needs at least one cyclic factor");
    size_ = 1;
    for (i64 o : orders_) {
      if (o < 1) fail(Errc::BadParameters, "cyclic factor order must be positive");
      size_ *= (std::size_t)o;
      if (size_ > (1u << 24)) fail(Errc::SizeOverflow, "group too large");
    }
  }
  const std::vector<i64>& orders() const { return orders_; }
  std::size_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }

  std::vector<i64> reduce(std::vector<i64> x) const {
    if (x.size() != rank()) fail(Errc::BadParameters, "element has wrong number of coordinates");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ((x[i] % orders_[i]) + orders_[i]) % orders_[i];
    return x;
  }
  Vertex encode(const std::vector<i64>& x) const {
    auto r = reduce(x);
    u64 id = 0;
    for (std::size_t i = 0; i < r.size(); ++i) id = id * (u64)orders_[i] + (u64)r[i];
    return (Vertex)id;
  }
  std::vector<i64> decode(Vertex id) const {
    std::vector<i64> x(rank());
    for (std::size_t i = rank(); i-- > 0;) {
      x[i] = (i64)(id % orders_[i]);
      id /= (Vertex)orders_[i];
    }
    return x;
  }
  Vertex add(Vertex a, Vertex b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return encode(x);
  }
  Vertex neg(Vertex a) const {
    auto x = decode(a);
    for (auto& c : x) c = -c;
    return encode(x);
  }
  Vertex sub(Vertex a, Vertex b) const { return add(a, neg(b)); }
  std::string label(Vertex a) const {
    auto x = decode(a);
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  }
  // elements x != 0 with 2x = 0
  std::size_t order_two_count() const {
    std::size_t c = 1;
    for (i64 o : orders_) c *= (o % 2 == 0) ? 2 : 1;
    return c - 1;
  }

 private:
  std::vector<i64> orders_;
  std::size_t size_ = 0;
};

inline Graph cayley(const AbelianGroup& G, const std::vector<std::vector<i64>>& S, std::string name = "Cay") {
  std::set<Vertex> s;
  for (auto& x : S) s.insert(G.encode(x));
  if (s.count(0)) fail(Errc::ContainsIdentity, "connection set contains the identity");
  for (Vertex x : s)
    if (!s.count(G.neg(x))) fail(Errc::NotSymmetric, "connection set is not symmetric: " + G.label(x));
  std::vector<Edge> e;
  for (Vertex g = 0; g < G.size(); ++g)
    for (Vertex x : s) {
      Vertex h = G.add(g, x);
      if (g < h) e.emplace_back(g, h);
    }
  Graph out(G.size(), e, std::move(name));
  if (!is_connected(out)) fail(Errc::NotGenerating, "connection set does not generate the group");
  std::vector<std::string> lab;
  for (Vertex g = 0; g < G.size(); ++g) lab.push_back(G.label(g));
  out.set_labels(std::move(lab));
  return out;
}

// g_black ~ h_white iff h - g in S; black vertices first
inline Graph bi_cayley(const AbelianGroup& G, const std::vector<std::vector<i64>>& S, std::string name = "BiCay") {
  std::set<Vertex> s;
  for (auto& x : S) s.insert(G.encode(x));
  const Vertex N = (Vertex)G.size();
  std::vector<Edge> e;
  for (Vertex g = 0; g < N; ++g)
    for (Vertex x : s) e.emplace_back(g, N + G.add(g, x));
  Graph out(2 * N, e, std::move(name));
  if (!is_connected(out)) fail(Errc::NotGenerating, "S S^-1 does not generate the group");
  std::vector<std::string> lab;
  for (int c = 0; c < 2; ++c)
    for (Vertex g = 0; g < N; ++g) lab.push_back(G.label(g) + (c ? "w" : "b"));
  out.set_labels(std::move(lab));
  return out;
}

// ---- elementary families ----

inline Graph complete_graph(std::size_t n) {
  if (n < 1) fail(Errc::BadParameters, "K_n needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e, "K" + std::to_string(n));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(Errc::BadParameters, "C_n needs n >= 3");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (Vertex)((u + 1) % n));
  return Graph(n, e, "C" + std::to_string(n));
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) fail(Errc::BadParameters, "P_n needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e, "P" + std::to_string(n));
}

// binary strings of length n, vertex id = the string read as an integer
inline Graph cube_graph(std::size_t n) {
  if (n < 1 || n > 20) fail(Errc::BadParameters, "Q_n needs 1 <= n <= 20");
  std::vector<Edge> e;
  for (Vertex u = 0; u < (1u << n); ++u)
    for (std::size_t i = 0; i < n; ++i)
      if (!(u >> i & 1)) e.emplace_back(u, u | (1u << i));
  return Graph(std::size_t(1) << n, e, "Q" + std::to_string(n));
}

// even-weight strings, adjacent when they differ in exactly two slots
inline Graph halved_cube(std::size_t n) {
  if (n < 2 || n > 21) fail(Errc::BadParameters, "halved cube needs 2 <= n <= 21");
  std::vector<Vertex> ids;
  std::vector<long> pos(1u << n, -1);
  for (Vertex u = 0; u < (1u << n); ++u)
    if (std::popcount(u) % 2 == 0) pos[u] = (long)ids.size(), ids.push_back(u);
  std::vector<Edge> e;
  for (Vertex u : ids)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vertex v = u ^ (1u << i) ^ (1u << j);
        if (u < v) e.emplace_back((Vertex)pos[u], (Vertex)pos[v]);
      }
  return Graph(ids.size(), e, "HalfQ" + std::to_string(n));
}

// Cayley graph of (Z_2)^n on the unit vectors plus a, weight(a) > 1
inline Graph decked_cube(std::size_t n, u64 a) {
  if (n < 2 || n > 20) fail(Errc::BadParameters, "decked cube needs 2 <= n <= 20");
  if (a >> n) fail(Errc::BadParameters, "deck vector longer than n");
  if (std::popcount(a) < 2) fail(Errc::BadParameters, "deck vector must have weight > 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < (1u << n); ++u) {
    for (std::size_t i = 0; i < n; ++i)
      if (!(u >> i & 1)) e.emplace_back(u, u | (1u << i));
    if (u < (u ^ a)) e.emplace_back(u, (Vertex)(u ^ a));
  }
  return Graph(std::size_t(1) << n, e, "DQ" + std::to_string(n));
}

// black 0..m-1, white m..m+n-1
inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) fail(Errc::BadParameters, "K_{m,n} needs m, n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < n; ++v) e.emplace_back(u, (Vertex)(m + v));
  return Graph(m + n, e, "K" + std::to_string(m) + "," + std::to_string(n));
}

// K_{1,n}: centre 0 and n leaves
inline Graph star_graph(std::size_t n) {
  if (n < 1) fail(Errc::BadParameters, "star needs at least one leaf");
  std::vector<Edge> e;
  for (Vertex v = 1; v <= n; ++v) e.emplace_back(0, v);
  return Graph(n + 1, e, "Star" + std::to_string(n));
}

// C_n plus a hub, which is the last vertex
inline Graph wheel_graph(std::size_t n) {
  Graph w = cone(cycle_graph(n));
  return w.set_name("W" + std::to_string(n));
}

// k triangles sharing vertex 0
inline Graph windmill_graph(std::size_t k) {
  if (k < 1) fail(Errc::BadParameters, "windmill needs k >= 1");
  std::vector<Edge> e;
  for (Vertex b = 0; b < k; ++b) {
    Vertex x = 1 + 2 * b, y = 2 + 2 * b;
    e.insert(e.end(), {{0, x}, {0, y}, {x, y}});
  }
  return Graph(2 * k + 1, e, "Wd" + std::to_string(k));
}

// outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e, "Petersen");
}

// radial trees: root of degree d-1 (T) or d (tilde T), leaves at depth R
inline Graph radial_tree(std::size_t d, std::size_t R, bool tilde) {
  if (d < 2 || R < 1) fail(Errc::BadParameters, "tree needs d >= 2, R >= 1");
  std::vector<Edge> e;
  std::vector<Vertex> level{0};
  Vertex next = 1;
  for (std::size_t r = 0; r < R; ++r) {
    std::vector<Vertex> nl;
    const std::size_t kids = (r == 0 && tilde) ? d : d - 1;
    for (Vertex v : level)
      for (std::size_t c = 0; c < kids; ++c) {
        e.emplace_back(v, next);
        nl.push_back(next++);
        if (next > (1u << 22)) fail(Errc::SizeOverflow, "tree too large");
      }
    level = std::move(nl);
  }
  return Graph(next, e, std::string(tilde ? "Tt" : "T") + std::to_string(d) + "," + std::to_string(R));
}

namespace detail {
// centre 0 with arms of the given lengths
inline Graph star_like(const std::vector<std::size_t>& arms, std::string name) {
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t len : arms) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, e, std::move(name));
}

inline std::pair<char, std::size_t> parse_ade(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'A' && name[0] != 'D' && name[0] != 'E'))
    fail(Errc::BadParameters, "ADE name must be A<n>, D<n> or E<n>: " + name);
  std::size_t n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit((unsigned char)name[i])) fail(Errc::BadParameters, "bad ADE index: " + name);
    n = n * 10 + (std::size_t)(name[i] - '0');
  }
  return {name[0], n};
}
}  // namespace detail

// Dynkin diagrams with alpha_max < 2
inline Graph ade_graph(const std::string& name) {
  auto [t, n] = detail::parse_ade(name);
  if (t == 'A') {
    if (n < 1) fail(Errc::BadParameters, "A_n needs n >= 1");
    return path_graph(n).set_name(name);
  }
  if (t == 'D') {
    if (n < 4) fail(Errc::BadParameters, "D_n needs n >= 4");
    return detail::star_like({1, 1, n - 3}, name);
  }
  if (n == 6) return detail::star_like({1, 2, 2}, name);
  if (n == 7) return detail::star_like({1, 2, 3}, name);
  if (n == 8) return detail::star_like({1, 2, 4}, name);
  fail(Errc::BadParameters, "E_n only for n = 6, 7, 8");
}

// extended diagrams on n+1 vertices with alpha_max = 2
inline Graph extended_ade_graph(const std::string& name) {
  auto [t, n] = detail::parse_ade(name);
  std::string nm = std::string(1, t) + "~" + std::to_string(n);
  if (t == 'A') {
    if (n < 2) fail(Errc::BadParameters, "extended A_n needs n >= 2");
    return cycle_graph(n + 1).set_name(nm);
  }
  if (t == 'D') {
    if (n < 4) fail(Errc::BadParameters, "extended D_n needs n >= 4");
    // spine of n-3 vertices, two leaves at each end
    std::vector<Edge> e;
    const Vertex L = (Vertex)(n - 3);
    for (Vertex i = 0; i + 1 < L; ++i) e.emplace_back(i, i + 1);
    e.insert(e.end(), {{0, L}, {0, L + 1}, {L - 1, L + 2}, {L - 1, L + 3}});
    return Graph(n + 1, e, nm);
  }
  if (n == 6) return detail::star_like({2, 2, 2}, nm);
  if (n == 7) return detail::star_like({1, 3, 3}, nm);
  if (n == 8) return detail::star_like({1, 2, 5}, nm);
  fail(Errc::BadParameters, "extended E_n only for n = 6, 7, 8");
}

// ---- field-based families ----

inline Field field_of_order(u64 q) {
  auto pp = nt::prime_power(q);
  if (!pp) fail(Errc::BadParameters, std::to_string(q) + " is not a prime power");
  return FieldSpec::make(pp->first, pp->second);
}

namespace detail {
inline std::vector<std::string> field_labels(const FieldSpec& F) {
  std::vector<std::string> l;
  for (u32 x = 0; x < F.q(); ++x) l.push_back(std::to_string(x));
  return l;
}
inline std::vector<u32> nonzero_squares(const FieldSpec& F) {
  std::set<u32> s;
  for (u32 x = 1; x < F.q(); ++x) s.insert(F.mul(x, x));
  return {s.begin(), s.end()};
}
}  // namespace detail

// Cayley graph of (F,+) on the non-zero squares, q = 1 mod 4
inline Graph paley_graph(u64 q) {
  if (q % 4 != 1) fail(Errc::BadParameters, "Paley graph needs q = 1 mod 4");
  Field F = field_of_order(q);
  auto sq = detail::nonzero_squares(*F);
  std::vector<Edge> e;
  for (u32 x = 0; x < q; ++x)
    for (u32 s : sq) {
      u32 y = F->add(x, s);
      if (x < y) e.emplace_back(x, y);
    }
  Graph g(q, e, "P" + std::to_string(q));
  return g.set_labels(detail::field_labels(*F));
}

// x_black ~ y_white iff y - x is a non-zero square, q = 3 mod 4
inline Graph bi_paley_graph(u64 q) {
  if (q % 4 != 3) fail(Errc::BadParameters, "bi-Paley graph needs q = 3 mod 4");
  Field F = field_of_order(q);
  auto sq = detail::nonzero_squares(*F);
  std::vector<Edge> e;
  for (u32 x = 0; x < q; ++x)
    for (u32 s : sq) e.emplace_back(x, (Vertex)q + F->add(x, s));
  return Graph(2 * q, e, "BP" + std::to_string(q));
}

// incidence data for K*/F*, |F| = q, [K:F] = n
struct IncidenceModel {
  Field K, F;
  u64 m;                    // (q^n - 1)/(q - 1)
  std::vector<u64> coset;   // coset[i] = exponent j of the i-th vertex (cosets g^j F*)
  std::vector<u32> rep;     // enumeration-least member of each coset
  std::vector<u64> S;       // exponents j mod m with Tr(g^j) = 0
};

inline IncidenceModel incidence_model(std::size_t n, u64 q) {
  if (n < 3) fail(Errc::BadParameters, "incidence graph needs n >= 3");
  auto pp = nt::prime_power(q);
  if (!pp) fail(Errc::BadParameters, std::to_string(q) + " is not a prime power");
  IncidenceModel M;
  M.F = FieldSpec::make(pp->first, pp->second);
  if ((u64)pp->second * n > 64 || std::pow((double)q, (double)n) > (double)FieldSpec::kTableQ)
    fail(Errc::SizeOverflow, "q^n too large for an incidence graph");
  M.K = FieldSpec::make(pp->first, (unsigned)(pp->second * n));
  SubfieldEmbedding emb(M.K, M.F);
  const FieldSpec& K = *M.K;
  M.m = (K.q() - 1) / (q - 1);
  std::vector<std::pair<u32, u64>> reps;
  for (u64 j = 0; j < M.m; ++j) {
    u32 best = ~u32(0);
    for (u64 k = 0; k < q - 1; ++k) best = std::min(best, K.exp((i64)(j + k * M.m)));
    reps.emplace_back(best, j);
    if (emb.trace_big(K.exp((i64)j)) == 0) M.S.push_back(j);
  }
  std::sort(reps.begin(), reps.end());
  for (auto [r, j] : reps) M.rep.push_back(r), M.coset.push_back(j);
  return M;
}

// bi-Cayley graph of K*/F* on {[s] : Tr(s) = 0}; black points first
inline Graph incidence_graph(std::size_t n, u64 q) {
  auto M = incidence_model(n, q);
  std::vector<Vertex> pos(M.m);
  for (std::size_t i = 0; i < M.m; ++i) pos[M.coset[i]] = (Vertex)i;
  std::vector<Edge> e;
  for (std::size_t i = 0; i < M.m; ++i)
    for (u64 s : M.S) e.emplace_back((Vertex)i, (Vertex)(M.m + pos[(M.coset[i] + s) % M.m]));
  Graph g(2 * M.m, e, "I" + std::to_string(n) + "(" + std::to_string(q) + ")");
  std::vector<std::string> lab;
  for (int c = 0; c < 2; ++c)
    for (auto r : M.rep) lab.push_back("[" + std::to_string(r) + "]" + (c ? "w" : "b"));
  return g.set_labels(std::move(lab));
}

// projective points of F^n: the first non-zero coordinate is 1
struct ProjectiveSpace {
  Field F;
  std::size_t n;
  std::vector<std::vector<u32>> points;
  std::map<std::vector<u32>, Vertex> index;

  std::vector<u32> normalize(std::vector<u32> v) const {
    auto it = std::find_if(v.begin(), v.end(), [](u32 c) { return c != 0; });
    if (it == v.end()) fail(Errc::ZeroElement, "zero vector has no projective class");
    u32 s = F->inv(*it);
    for (auto& c : v) c = F->mul(c, s);
    return v;
  }
  Vertex point(const std::vector<u32>& v) const { return index.at(normalize(v)); }
  u32 dot(const std::vector<u32>& a, const std::vector<u32>& b) const {
    u32 s = 0;
    for (std::size_t i = 0; i < n; ++i) s = F->add(s, F->mul(a[i], b[i]));
    return s;
  }
};

inline ProjectiveSpace projective_space(std::size_t n, u64 q) {
  ProjectiveSpace P{field_of_order(q), n, {}, {}};
  u64 total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  if (total > (1u << 22)) fail(Errc::SizeOverflow, "projective space too large");
  for (u64 t = 1; t < total; ++t) {
    std::vector<u32> v(n);
    u64 r = t;
    for (std::size_t i = n; i-- > 0;) v[i] = (u32)(r % q), r /= q;
    if (P.normalize(v) == v) {
      P.index[v] = (Vertex)P.points.size();
      P.points.push_back(v);
    }
  }
  return P;
}

// points vs hyperplanes: [v]_black ~ [w]_white iff v . w = 0
inline Graph incidence_projective(std::size_t n, u64 q) {
  if (n < 3) fail(Errc::BadParameters, "incidence graph needs n >= 3");
  auto P = projective_space(n, q);
  const Vertex m = (Vertex)P.points.size();
  std::vector<Edge> e;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < m; ++j)
      if (P.dot(P.points[i], P.points[j]) == 0) e.emplace_back(i, m + j);
  return Graph(2 * m, e, "Iproj" + std::to_string(n) + "(" + std::to_string(q) + ")");
}

// (a,x)_black ~ (b,y)_white iff a + b = x y; x, y non-zero unless full
inline Graph sum_product_graph(u64 q, bool full) {
  if (q < 3) fail(Errc::BadParameters, "sum-product graph needs q >= 3");
  Field F = field_of_order(q);
  const u32 lo = full ? 0 : 1;
  const u64 w = q - lo;  // size of the second coordinate range
  const Vertex m = (Vertex)(q * w);
  auto id = [&](u32 a, u32 x) { return (Vertex)(a * w + (x - lo)); };
  std::vector<Edge> e;
  for (u32 a = 0; a < q; ++a)
    for (u32 x = lo; x < q; ++x)
      for (u32 y = lo; y < q; ++y) e.emplace_back(id(a, x), m + id(F->sub(F->mul(x, y), a), y));
  return Graph(2 * m, e, (full ? "FSP" : "SP") + std::to_string(q));
}

// ---- sporadic graphs ----

inline Graph shrikhande_graph() {
  return cayley(AbelianGroup({4, 4}), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}, "Shrikhande");
}

// K_4 x K_4 as a Cayley graph of Z_4 x Z_4
inline Graph rook_twin_graph() {
  return cayley(AbelianGroup({4, 4}), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 0}, {0, 2}}, "K4xK4");
}

inline Graph andrasfai_graph(std::size_t n) {
  if (n < 1) fail(Errc::BadParameters, "Andrasfai graph needs n >= 1");
  std::vector<std::vector<i64>> S;
  for (std::size_t k = 0; k < n; ++k) S.push_back({(i64)(3 * k + 1)});
  return cayley(AbelianGroup({(i64)(3 * n - 1)}), S, "And" + std::to_string(n));
}

inline Graph heawood_graph() { return bi_cayley(AbelianGroup({7}), {{1}, {2}, {4}}, "Heawood"); }

// edges of K_6 (black) versus perfect matchings of K_6 (white)
inline Graph tutte_coxeter_graph() {
  std::vector<std::pair<int, int>> ed;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) ed.emplace_back(i, j);
  std::vector<std::vector<int>> matchings;
  for (int a = 1; a < 6; ++a) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != a) rest.push_back(x);
    for (int b = 1; b < 4; ++b) {
      std::vector<int> r2;
      for (int i = 1; i < 4; ++i)
        if (i != b) r2.push_back(rest[i]);
      std::vector<std::pair<int, int>> M{{0, a}, {rest[0], rest[b]}, {r2[0], r2[1]}};
      std::vector<int> ids;
      for (auto pr : M) {
        if (pr.first > pr.second) std::swap(pr.first, pr.second);
        ids.push_back((int)(std::find(ed.begin(), ed.end(), pr) - ed.begin()));
      }
      matchings.push_back(ids);
    }
  }
  std::vector<Edge> e;
  for (Vertex m = 0; m < matchings.size(); ++m)
    for (int i : matchings[m]) e.emplace_back((Vertex)i, 15 + m);
  return Graph(30, e, "TutteCoxeter");
}

inline Graph frucht_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 12; ++i) e.emplace_back(i, (i + 1) % 12);
  e.insert(e.end(), {{0, 2}, {4, 6}, {7, 9}, {3, 11}, {5, 10}, {1, 8}});
  return Graph(12, e, "Frucht");
}

// three mutually non-isomorphic cubic graphs on 8 vertices: C_8 plus chords
inline Graph cubic8_graph(int which) {
  static const std::vector<std::vector<Edge>> chords = {
      {{0, 3}, {1, 4}, {2, 6}, {5, 7}}, {{0, 2}, {4, 6}, {7, 5}, {3, 1}}, {{2, 6}, {7, 5}, {3, 1}, {4, 0}}};
  if (which < 0 || which > 2) fail(Errc::IndexOutOfRange, "cubic8 index is 0, 1 or 2");
  std::vector<Edge> e;
  for (Vertex i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
  e.insert(e.end(), chords[which].begin(), chords[which].end());
  return Graph(8, e, "Cubic8_" + std::to_string(which));
}

// Cayley graph of G x G on (s,0), (0,s), (s,s), s != 0: SRG(n^2, 3n-3, n, 6)
inline Graph machine_graph(const AbelianGroup& G) {
  std::vector<i64> orders = G.orders();
  orders.insert(orders.end(), G.orders().begin(), G.orders().end());
  AbelianGroup GG(orders);
  const std::size_t r = G.rank();
  std::vector<std::vector<i64>> S;
  for (Vertex s = 1; s < G.size(); ++s) {
    auto x = G.decode(s);
    std::vector<i64> zero(r, 0), a = x, b = zero, c = x;
    a.insert(a.end(), zero.begin(), zero.end());
    b.insert(b.end(), x.begin(), x.end());
    c.insert(c.end(), x.begin(), x.end());
    S.push_back(a), S.push_back(b), S.push_back(c);
  }
  std::string name = "X(";
  for (std::size_t i = 0; i < r; ++i) name += (i ? "x" : "") + ("Z" + std::to_string(G.orders()[i]));
  return cayley(GG, S, name + ")");
}

// tilde T_{3,k} with each pendant 4-tuple below a common grandparent closed into a 4-cycle
inline Graph small_diameter_graph(std::size_t k) {
  if (k < 3) fail(Errc::BadParameters, "small-diameter graph needs k >= 3");
  Graph t = radial_tree(3, k, true);
  auto e = t.edges();
  auto dist = bfs_distances(t, 0);
  for (Vertex g = 0; g < t.n(); ++g) {
    if (dist[g] != (int)k - 2) continue;
    std::vector<Vertex> parents;
    for (Vertex w : t.neighbors(g))
      if (dist[w] == (int)k - 1) parents.push_back(w);
    std::vector<std::vector<Vertex>> leaves;
    for (Vertex p : parents) {
      leaves.emplace_back();
      for (Vertex w : t.neighbors(p))
        if (dist[w] == (int)k) leaves.back().push_back(w);
    }
    // a1 - b1 - a2 - b2 - a1, never joining siblings
    auto &A = leaves[0], &B = leaves[1];
    e.insert(e.end(), {{A[0], B[0]}, {B[0], A[1]}, {A[1], B[1]}, {B[1], A[0]}});
  }
  return Graph(t.n(), e, "SD" + std::to_string(k));
}

// line graph: vertices are edges, adjacent when sharing an endpoint
inline Graph line_graph(const Graph& g) {
  auto ed = g.edges();
  std::vector<Edge> e;
  for (Vertex i = 0; i < ed.size(); ++i)
    for (Vertex j = i + 1; j < ed.size(); ++j) {
      auto [a, b] = ed[i];
      auto [c, d] = ed[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
    }
  return Graph(ed.size(), e, "L(" + g.name() + ")");
}

// ---- family specs ----

enum class Family {
  Complete, Cycle, Cube, HalvedCube, DeckedCube, CompleteBipartite, Path, Star, Wheel, Windmill, Petersen,
  Tree, ADE, ExtendedADE, Cayley, BiCayley, Paley, BiPaley, Incidence, SumProduct, FullSumProduct,
  Shrikhande, RookTwin, Andrasfai, Heawood, TutteCoxeter, Frucht, Machine, SmallDiameterX
};

struct FamilySpec {
  Family family;
  std::vector<i64> params;                // integer parameters in the order of the family's signature
  std::string tag;                        // ADE name, or "T" / "Tt" for trees
  std::vector<i64> group;                 // cyclic factor orders for Cayley, BiCayley, Machine
  std::vector<std::vector<i64>> elements; // connection set for Cayley, BiCayley

  std::string id() const;
};

inline const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> v = {
      {Family::Complete, "complete"}, {Family::Cycle, "cycle"}, {Family::Cube, "cube"},
      {Family::HalvedCube, "halved-cube"}, {Family::DeckedCube, "decked-cube"},
      {Family::CompleteBipartite, "complete-bipartite"}, {Family::Path, "path"}, {Family::Star, "star"},
      {Family::Wheel, "wheel"}, {Family::Windmill, "windmill"}, {Family::Petersen, "petersen"},
      {Family::Tree, "tree"}, {Family::ADE, "ade"}, {Family::ExtendedADE, "extended-ade"},
      {Family::Cayley, "cayley"}, {Family::BiCayley, "bi-cayley"}, {Family::Paley, "paley"},
      {Family::BiPaley, "bi-paley"}, {Family::Incidence, "incidence"}, {Family::SumProduct, "sum-product"},
      {Family::FullSumProduct, "full-sum-product"}, {Family::Shrikhande, "shrikhande"},
      {Family::RookTwin, "rook-twin"}, {Family::Andrasfai, "andrasfai"}, {Family::Heawood, "heawood"},
      {Family::TutteCoxeter, "tutte-coxeter"}, {Family::Frucht, "frucht"}, {Family::Machine, "machine"},
      {Family::SmallDiameterX, "small-diameter"}};
  return v;
}

inline std::string family_name(Family f) {
  for (auto& [k, s] : family_names())
    if (k == f) return s;
  return "?";
}

inline std::string FamilySpec::id() const {
  std::string s = family_name(family);
  if (!tag.empty()) s += ":" + tag;
  for (i64 p : params) s += ":" + std::to_string(p);
  if (!group.empty()) {
    s += ":Z";
    for (std::size_t i = 0; i < group.size(); ++i) s += (i ? "x" : "") + std::to_string(group[i]);
  }
  return s;
}

namespace detail {
inline void need(const FamilySpec& s, std::size_t k) {
  if (s.params.size() != k)
    fail(Errc::BadParameters, family_name(s.family) + " takes " + std::to_string(k) + " integer parameter(s)");
}
}  // namespace detail

inline Graph build(const FamilySpec& s) {
  using detail::need;
  const auto& p = s.params;
  auto P = [&](std::size_t i) {
    if (p[i] < 0) fail(Errc::BadParameters, "parameters must be non-negative");
    return (std::size_t)p[i];
  };
  switch (s.family) {
    case Family::Complete: need(s, 1); return complete_graph(P(0));
    case Family::Cycle: need(s, 1); return cycle_graph(P(0));
    case Family::Cube: need(s, 1); return cube_graph(P(0));
    case Family::HalvedCube: need(s, 1); return halved_cube(P(0));
    case Family::DeckedCube: need(s, 2); return decked_cube(P(0), (u64)P(1));
    case Family::CompleteBipartite: need(s, 2); return complete_bipartite(P(0), P(1));
    case Family::Path: need(s, 1); return path_graph(P(0));
    case Family::Star: need(s, 1); return star_graph(P(0));
    case Family::Wheel: need(s, 1); return wheel_graph(P(0));
    case Family::Windmill: need(s, 1); return windmill_graph(P(0));
    case Family::Petersen: need(s, 0); return petersen_graph();
    case Family::Tree:
      need(s, 2);
      if (s.tag != "T" && s.tag != "Tt") fail(Errc::BadParameters, "tree kind must be T or Tt");
      return radial_tree(P(0), P(1), s.tag == "Tt");
    case Family::ADE: return ade_graph(s.tag);
    case Family::ExtendedADE: return extended_ade_graph(s.tag);
    case Family::Cayley: return cayley(AbelianGroup(s.group), s.elements);
    case Family::BiCayley: return bi_cayley(AbelianGroup(s.group), s.elements);
    case Family::Paley: need(s, 1); return paley_graph(P(0));
    case Family::BiPaley: need(s, 1); return bi_paley_graph(P(0));
    case Family::Incidence: need(s, 2); return incidence_graph(P(0), P(1));
    case Family::SumProduct: need(s, 1); return sum_product_graph(P(0), false);
    case Family::FullSumProduct: need(s, 1); return sum_product_graph(P(0), true);
    case Family::Shrikhande: return shrikhande_graph();
    case Family::RookTwin: return rook_twin_graph();
    case Family::Andrasfai: need(s, 1); return andrasfai_graph(P(0));
    case Family::Heawood: return heawood_graph();
    case Family::TutteCoxeter: return tutte_coxeter_graph();
    case Family::Frucht: return frucht_graph();
    case Family::Machine: return machine_graph(AbelianGroup(s.group));
    case Family::SmallDiameterX: need(s, 1); return small_diameter_graph(P(0));
  }
  fail(Errc::BadParameters, "unknown family");
}

// "<family> [args...]"; groups are written like 4x4, connection sets like 1,0;-1,0
inline FamilySpec parse_family(const std::vector<std::string>& args) {
  if (args.empty()) fail(Errc::BadParameters, "missing family name");
  std::optional<Family> f;
  for (auto& [k, n] : family_names())
    if (n == args[0]) f = k;
  if (!f) fail(Errc::BadParameters, "unknown family '" + args[0] + "'");
  FamilySpec s{*f, {}, {}, {}, {}};
  auto num = [](const std::string& t) {
    try {
      std::size_t used = 0;
      i64 v = std::stoll(t, &used, 0);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(Errc::BadParameters, "not an integer: '" + t + "'");
    }
  };
  auto split = [](const std::string& t, char c) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : t) {
      if (ch == c) out.push_back(cur), cur.clear();
      else cur += ch;
    }
    out.push_back(cur);
    return out;
  };
  std::size_t i = 1;
  if (*f == Family::ADE || *f == Family::ExtendedADE || *f == Family::Tree) {
    if (args.size() < 2) fail(Errc::BadParameters, "missing kind/name");
    s.tag = args[1];
    i = 2;
  }
  if (*f == Family::Cayley || *f == Family::BiCayley || *f == Family::Machine) {
    if (args.size() < 2) fail(Errc::BadParameters, "missing group, e.g. 4x4");
    for (auto& t : split(args[1], 'x')) s.group.push_back(num(t));
    if (*f != Family::Machine) {
      if (args.size() < 3) fail(Errc::BadParameters, "missing connection set, e.g. '1,0;-1,0'");
      for (auto& el : split(args[2], ';')) {
        std::vector<i64> x;
        for (auto& c : split(el, ',')) x.push_back(num(c));
        s.elements.push_back(x);
      }
    }
    i = args.size();
  }
  for (; i < args.size(); ++i) s.params.push_back(num(args[i]));
  return s;
}

// ---- strongly regular / design classification ----

struct SrgParams {
  i64 n, d, a, c;
  bool operator==(const SrgParams&) const = default;
};
struct DesignParams {
  i64 m, d, c1, c2;  // c1 == c2 for designs; otherwise c1 < c2
  bool operator==(const DesignParams&) const = default;
};

enum class RegularKind { NotSR, StronglyRegular, Design, PartialDesign };

struct RegularClass {
  RegularKind kind = RegularKind::NotSR;
  std::optional<SrgParams> srg;
  std::optional<DesignParams> design;
  std::string note;
};

inline bool srg_identity(const SrgParams& s) { return s.d * (s.d - s.a - 1) == (s.n - s.d - 1) * s.c; }

inline RegularClass classify_regular(const Graph& g) {
  if (!g.is_regular() || g.n() == 0) fail(Errc::NotRegular, "graph is not regular");
  RegularClass r;
  const i64 d = (i64)g.degree_max();
  auto bp = bipartition(g);
  if (bp && is_connected(g)) {
    std::set<i64> counts;
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v = u + 1; v < g.n(); ++v)
        if ((*bp)[u] == (*bp)[v]) counts.insert((i64)common_neighbours(g, u, v));
    const i64 m = (i64)g.n() / 2;
    if (counts.size() == 1) {
      i64 c = *counts.begin();
      if (c * (m - 1) != d * (d - 1)) fail(Errc::IdentityViolated, "design identity c(m-1) = d(d-1) fails");
      r.kind = RegularKind::Design;
      r.design = DesignParams{m, d, c, c};
    } else if (counts.size() == 2) {
      i64 c1 = *counts.begin(), c2 = *counts.rbegin();
      if ((d * (d - 1) - (m - 1) * c2) % (c1 - c2) != 0) fail(Errc::IdentityViolated, "c1-graph degree not integral");
      r.kind = RegularKind::PartialDesign;
      r.design = DesignParams{m, d, c1, c2};
    } else {
      r.note = std::to_string(counts.size()) + " distinct same-colour counts";
    }
    return r;
  }
  std::set<i64> adj, non;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) (g.has_edge(u, v) ? adj : non).insert((i64)common_neighbours(g, u, v));
  if (adj.size() == 1 && non.size() == 1 && *non.begin() > 0) {
    SrgParams s{(i64)g.n(), d, *adj.begin(), *non.begin()};
    if (!srg_identity(s)) fail(Errc::IdentityViolated, "d(d-a-1) = (n-d-1)c fails");
    r.kind = RegularKind::StronglyRegular;
    r.srg = s;
  } else {
    r.note = non.empty() ? "complete graph" : "common-neighbour counts not constant";
  }
  return r;
}

namespace detail {
inline std::vector<Vertex> colour_class(const Graph& g, int colour) {
  auto bp = bipartition(g);
  if (!bp) fail(Errc::InvalidOperation, "graph is not bipartite");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.n(); ++v)
    if ((*bp)[v] == (*bp)[0] ? colour == 0 : colour == 1) out.push_back(v);
  return out;
}
}  // namespace detail

// pairs of black vertices (the colour class of vertex 0) with exactly c common neighbours
inline Graph c_graph(const Graph& g, i64 c) {
  auto black = detail::colour_class(g, 0);
  std::vector<Edge> e;
  for (Vertex i = 0; i < black.size(); ++i)
    for (Vertex j = i + 1; j < black.size(); ++j)
      if ((i64)common_neighbours(g, black[i], black[j]) == c) e.emplace_back(i, j);
  return Graph(black.size(), e, "c" + std::to_string(c) + "(" + g.name() + ")");
}

inline Graph c1_graph(const Graph& g) {
  auto r = classify_regular(g);
  if (r.kind != RegularKind::PartialDesign) fail(Errc::NotPartialDesign, "graph is not a partial design graph");
  return c_graph(g, r.design->c1);
}

// degree of the c1-graph predicted from the parameters
inline i64 c1_graph_degree(const DesignParams& p) { return (p.d * (p.d - 1) - (p.m - 1) * p.c2) / (p.c1 - p.c2); }

// every same-colour pair is recovered from its common neighbourhood
inline bool bp_determination(const Graph& g) {
  auto r = classify_regular(g);
  if (r.kind != RegularKind::Design) fail(Errc::NotDesign, "graph is not a design graph");
  for (int colour = 0; colour < 2; ++colour) {
    auto cls = detail::colour_class(g, colour);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        std::vector<Vertex> common;
        std::set_intersection(g.neighbors(cls[i]).begin(), g.neighbors(cls[i]).end(), g.neighbors(cls[j]).begin(),
                              g.neighbors(cls[j]).end(), std::back_inserter(common));
        for (std::size_t k = 0; k < cls.size(); ++k) {
          if (k == i || k == j) continue;
          const auto& nk = g.neighbors(cls[k]);
          if (std::includes(nk.begin(), nk.end(), common.begin(), common.end())) return false;
        }
      }
  }
  return true;
}

// design parameters (m, d, c) of BP(q) and I_n(2)
inline DesignParams bi_paley_params(i64 q) { return {q, (q - 1) / 2, (q - 3) / 4, (q - 3) / 4}; }
inline DesignParams incidence_params(i64 n, i64 q) {
  auto sum = [&](i64 k) {  // 1 + q + ... + q^(k-1)
    i64 s = 0, t = 1;
    for (i64 i = 0; i < k; ++i) s += t, t *= q;
    return s;
  };
  i64 c = sum(n - 2);
  return {sum(n), sum(n - 1), c, c};
}

// all (q, n) with q = 3 mod 4 a prime power, 3 <= n <= nmax, and matching parameters
inline std::vector<std::pair<i64, i64>> mersenne_gate_scan(i64 nmax) {
  std::vector<std::pair<i64, i64>> hits;
  const i64 qmax = (i64(1) << nmax);
  for (i64 q = 3; q <= qmax; q += 4) {
    if (!nt::prime_power((u64)q)) continue;
    for (i64 n = 3; n <= nmax; ++n)
      if (bi_paley_params(q) == incidence_params(n, 2)) hits.emplace_back(q, n);
  }
  return hits;
}

}  // namespace sgt
