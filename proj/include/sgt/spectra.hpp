#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sgt/expr.hpp"
#include "sgt/families.hpp"
#include "sgt/graph.hpp"

namespace sgt {

using Matrix = Eigen::MatrixXd;

enum class MatrixKind { Adjacency, Laplacian };

inline std::string kind_name(MatrixKind k) { return k == MatrixKind::Adjacency ? "adjacency" : "laplacian"; }

inline Matrix adjacency_matrix(const Graph& g) {
  Matrix A = Matrix::Zero((Eigen::Index)g.n(), (Eigen::Index)g.n());
  for (auto [u, v] : g.edges()) A(u, v) = A(v, u) = 1;
  return A;
}

// L = diag(deg) - A
inline Matrix laplacian_matrix(const Graph& g) {
  Matrix L = -adjacency_matrix(g);
  for (Vertex v = 0; v < g.n(); ++v) L(v, v) = (double)g.degree(v);
  return L;
}

inline Matrix graph_matrix(const Graph& g, MatrixKind k) {
  return k == MatrixKind::Adjacency ? adjacency_matrix(g) : laplacian_matrix(g);
}

using Cluster = std::pair<double, std::size_t>;  // (value, multiplicity)

// Consecutive values closer than tol join one cluster; values sorted descending.
inline std::vector<Cluster> cluster_values(const std::vector<double>& desc, double tol) {
  std::vector<Cluster> out;
  std::size_t i = 0;
  while (i < desc.size()) {
    std::size_t j = i + 1;
    double sum = desc[i];
    while (j < desc.size() && desc[j - 1] - desc[j] <= tol) sum += desc[j++];
    out.emplace_back(sum / (double)(j - i), j - i);
    i = j;
  }
  return out;
}

inline double cluster_tolerance(double rho) { return 1e-6 * std::max(1.0, rho); }

struct Spectrum {
  MatrixKind kind = MatrixKind::Adjacency;
  double cluster_tol = 1e-6;
  std::vector<double> values;    // descending, with repetition
  std::vector<Cluster> entries;  // descending, clustered
  std::optional<Matrix> vectors; // column i belongs to values[i]

  std::size_t n() const { return values.size(); }
  double max() const { return values.front(); }
  double min() const { return values.back(); }
  // k-th largest, 1-based: alpha_k for adjacency
  double desc(std::size_t k) const { return values.at(k - 1); }
  // k-th smallest, 1-based: lambda_k for laplacian
  double asc(std::size_t k) const { return values.at(n() - k); }
  std::size_t distinct() const { return entries.size(); }
  double radius() const { return values.empty() ? 0 : std::max(std::abs(max()), std::abs(min())); }
  // multiplicity of the cluster containing x, 0 if none
  std::size_t multiplicity(double x) const {
    for (auto& [v, m] : entries)
      if (std::abs(v - x) <= cluster_tol) return m;
    return 0;
  }
};

inline Spectrum make_spectrum(std::vector<double> v, MatrixKind kind) {
  std::sort(v.begin(), v.end(), std::greater<>());
  Spectrum s;
  s.kind = kind;
  s.values = std::move(v);
  s.cluster_tol = cluster_tolerance(s.radius());
  s.entries = cluster_values(s.values, s.cluster_tol);
  return s;
}

inline Spectrum eig_symmetric(const Matrix& M, MatrixKind kind = MatrixKind::Adjacency, bool with_vectors = false) {
  if (M.rows() != M.cols()) fail(Errc::NotSymmetric, "matrix is not square");
  if (M.rows() > 4096) fail(Errc::SizeOverflow, "eigensolver capped at n = 4096");
  if (M.rows() == 0) return make_spectrum({}, kind);
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) fail(Errc::NotSymmetric, "matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> es(M, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) fail(Errc::Mismatch, "eigensolver did not converge");
  const Eigen::Index n = M.rows();
  std::vector<double> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = es.eigenvalues()[n - 1 - i];  // Eigen sorts ascending
  Spectrum s = make_spectrum(v, kind);
  if (with_vectors) s.vectors = es.eigenvectors().rowwise().reverse();
  return s;
}

inline Spectrum spectrum(const Graph& g, MatrixKind kind = MatrixKind::Adjacency, bool with_vectors = false) {
  return eig_symmetric(graph_matrix(g, kind), kind, with_vectors);
}

// ---- closed forms ----

struct ClosedForm {
  std::string source;
  MatrixKind kind = MatrixKind::Adjacency;
  std::vector<std::pair<Expr, std::size_t>> entries;

  std::size_t size() const {
    std::size_t s = 0;
    for (auto& e : entries) s += e.second;
    return s;
  }
  std::vector<double> values() const {
    std::vector<double> v;
    for (auto& [x, m] : entries) v.insert(v.end(), m, x.eval());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }
  ClosedForm& add(Expr x, std::size_t m) {
    if (m > 0) entries.emplace_back(std::move(x), m);
    return *this;
  }
};

namespace cf {

using E = Expr;
inline E R(long long a, long long b = 1) { return E::rat(a, b); }
inline E sq(long long a) { return E::sqrt(R(a)); }

inline ClosedForm complete(std::size_t n) {
  return ClosedForm{"K" + std::to_string(n)}.add(R((long long)n - 1), 1).add(R(-1), n - 1);
}

inline ClosedForm cycle(std::size_t n) {
  ClosedForm c{"C" + std::to_string(n)};
  for (std::size_t k = 0; k < n; ++k) c.add(R(2) * E::cos_pi(2 * (long long)k, (long long)n), 1);
  return c;
}

inline long long binom(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline ClosedForm cube(std::size_t n) {
  ClosedForm c{"Q" + std::to_string(n)};
  for (long long k = 0; k <= (long long)n; ++k) c.add(R((long long)n - 2 * k), binom((long long)n, k));
  return c;
}

inline ClosedForm complete_bipartite(std::size_t m, std::size_t n) {
  ClosedForm c{"K" + std::to_string(m) + "," + std::to_string(n)};
  c.add(sq((long long)(m * n)), 1).add(-sq((long long)(m * n)), 1).add(R(0), m + n - 2);
  return c;
}

inline ClosedForm path(std::size_t n) {
  ClosedForm c{"P" + std::to_string(n)};
  for (std::size_t k = 1; k <= n; ++k) c.add(R(2) * E::cos_pi((long long)k, (long long)n + 1), 1);
  return c;
}

// eigenvalues of a product are all pairwise sums
inline ClosedForm product(const ClosedForm& a, const ClosedForm& b) {
  ClosedForm c{a.source + "x" + b.source, a.kind};
  for (auto& [x, m] : a.entries)
    for (auto& [y, k] : b.entries) c.add(x + y, m * k);
  return c;
}

// bipartite double: the adjacency spectrum symmetrized
inline ClosedForm bipartite_double(const ClosedForm& a) {
  ClosedForm c{"double(" + a.source + ")"};
  for (auto& [x, m] : a.entries) c.add(x, m).add(-x, m);
  return c;
}

inline ClosedForm srg(const SrgParams& p) {
  const long long n = p.n, d = p.d, a = p.a, c = p.c;
  const long long disc = (a - c) * (a - c) + 4 * (d - c);
  const double root = std::sqrt((double)disc);
  const double t = (double)(2 * d + (n - 1) * (a - c)) / root;
  const double fr = 0.5 * ((double)(n - 1) - t), fs = 0.5 * ((double)(n - 1) + t);
  auto mr = std::llround(fr), ms = std::llround(fs);
  if (std::abs(fr - (double)mr) > 1e-9 || std::abs(fs - (double)ms) > 1e-9 || mr < 0 || ms < 0)
    fail(Errc::NoClosedForm, "SRG multiplicities are not integers");
  ClosedForm f{"SRG(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(a) + "," + std::to_string(c) + ")"};
  f.add(R(d), 1);
  f.add((R(a - c) + sq(disc)) * R(1, 2), (std::size_t)mr);
  f.add((R(a - c) - sq(disc)) * R(1, 2), (std::size_t)ms);
  return f;
}

inline ClosedForm design(const DesignParams& p) {
  ClosedForm f{"Design(" + std::to_string(p.m) + "," + std::to_string(p.d) + "," + std::to_string(p.c1) + ")"};
  f.add(R(p.d), 1).add(R(-p.d), 1).add(sq(p.d - p.c1), p.m - 1).add(-sq(p.d - p.c1), p.m - 1);
  return f;
}

// from the spectrum of the c1-graph
inline ClosedForm partial_design(const DesignParams& p, const ClosedForm& c1) {
  ClosedForm f{"PartialDesign(" + std::to_string(p.m) + "," + std::to_string(p.d) + "," + std::to_string(p.c1) + "," +
               std::to_string(p.c2) + ")"};
  f.add(R(p.d), 1).add(R(-p.d), 1);
  const double top = (double)c1_graph_degree(p);
  bool skipped = false;
  for (auto& [x, m] : c1.entries) {
    std::size_t mm = m;
    if (!skipped && std::abs(x.eval() - top) < 1e-9) {
      skipped = true;
      if (--mm == 0) continue;
    }
    E r = E::sqrt(R(p.d - p.c2) + R(p.c1 - p.c2) * x);
    f.add(r, mm).add(-r, mm);
  }
  if (!skipped) fail(Errc::NoClosedForm, "c1-graph spectrum misses its degree");
  return f;
}

// adjacency of the cone over a d-regular graph on n vertices
inline ClosedForm cone_regular(const ClosedForm& base, long long d, long long n) {
  ClosedForm f{"cone(" + base.source + ")"};
  bool skipped = false;
  for (auto& [x, m] : base.entries) {
    std::size_t mm = m;
    if (!skipped && std::abs(x.eval() - (double)d) < 1e-9) skipped = true, --mm;
    f.add(x, mm);
  }
  f.add((R(d) + sq(d * d + 4 * n)) * R(1, 2), 1).add((R(d) - sq(d * d + 4 * n)) * R(1, 2), 1);
  return f;
}

// laplacian of the cone over a graph on n vertices: {0} u {lambda_k + 1 : k >= 2} u {n + 1}
inline ClosedForm cone_laplacian(const ClosedForm& base_lap, long long n) {
  ClosedForm f{"cone(" + base_lap.source + ")", MatrixKind::Laplacian};
  f.add(R(0), 1);
  bool skipped = false;
  for (auto& [x, m] : base_lap.entries) {
    std::size_t mm = m;
    if (!skipped && std::abs(x.eval()) < 1e-9) skipped = true, --mm;
    f.add(x + R(1), mm);
  }
  return f.add(R(n + 1), 1);
}

// laplacian of the complement: {0} u {n - lambda_k : k >= 2}
inline ClosedForm complement_laplacian(const ClosedForm& base_lap, long long n) {
  ClosedForm f{"co(" + base_lap.source + ")", MatrixKind::Laplacian};
  f.add(R(0), 1);
  bool skipped = false;
  for (auto& [x, m] : base_lap.entries) {
    std::size_t mm = m;
    if (!skipped && std::abs(x.eval()) < 1e-9) skipped = true, --mm;
    f.add(R(n) - x, mm);
  }
  return f;
}

// lambda = d - alpha for a d-regular graph
inline ClosedForm to_laplacian(const ClosedForm& adj, long long d) {
  ClosedForm f{adj.source, MatrixKind::Laplacian};
  for (auto& [x, m] : adj.entries) f.add(R(d) - x, m);
  return f;
}

// Cayley graph of an abelian group: one eigenvalue sum_s chi(s) per character chi
inline ClosedForm cayley(const AbelianGroup& G, const std::vector<std::vector<i64>>& S, bool bipartite) {
  ClosedForm f{bipartite ? "BiCayley" : "Cayley"};
  std::set<Vertex> s;
  for (auto& x : S) s.insert(G.encode(x));
  for (Vertex k = 0; k < G.size(); ++k) {
    auto kk = G.decode(k);
    std::complex<double> sum = 0;
    for (Vertex x : s) {
      auto xx = G.decode(x);
      double ph = 0;
      for (std::size_t i = 0; i < kk.size(); ++i) ph += (double)((kk[i] * xx[i]) % G.orders()[i]) / (double)G.orders()[i];
      sum += std::polar(1.0, 2 * std::numbers::pi * ph);
    }
    if (bipartite) {
      f.add(E::value(std::abs(sum), "|chi" + std::to_string(k) + "(S)|"), 1);
      f.add(-E::value(std::abs(sum), "|chi" + std::to_string(k) + "(S)|"), 1);
    } else {
      f.add(E::value(sum.real(), "chi" + std::to_string(k) + "(S)"), 1);
    }
  }
  return f;
}

inline ClosedForm paley(long long q) {
  ClosedForm f{"P" + std::to_string(q)};
  f.add(R((q - 1), 2), 1);
  f.add((R(-1) + sq(q)) * R(1, 2), (std::size_t)(q - 1) / 2);
  f.add((R(-1) - sq(q)) * R(1, 2), (std::size_t)(q - 1) / 2);
  return f;
}

inline ClosedForm bi_paley(long long q) {
  ClosedForm f{"BP" + std::to_string(q)};
  f.add(R(q - 1, 2), 1).add(R(-(q - 1), 2), 1);
  f.add(sq(q + 1) * R(1, 2), (std::size_t)(q - 1)).add(-sq(q + 1) * R(1, 2), (std::size_t)(q - 1));
  return f;
}

// I_n(q): +-d once, +-q^(n/2-1) with multiplicity m-1
inline ClosedForm incidence(long long n, long long q) {
  auto dp = incidence_params(n, q);
  long long qn2 = 1;
  for (long long i = 0; i < n - 2; ++i) qn2 *= q;
  ClosedForm f{"I" + std::to_string(n) + "(" + std::to_string(q) + ")"};
  f.add(R(dp.d), 1).add(R(-dp.d), 1).add(sq(qn2), (std::size_t)dp.m - 1).add(-sq(qn2), (std::size_t)dp.m - 1);
  return f;
}

inline ClosedForm sum_product(long long q) {
  ClosedForm f{"SP" + std::to_string(q)};
  f.add(R(q - 1), 1).add(R(1 - q), 1);
  f.add(sq(q), (q - 1) * (q - 2)).add(-sq(q), (q - 1) * (q - 2));
  f.add(R(1), q - 1).add(R(-1), q - 1).add(R(0), 2 * (q - 2));
  return f;
}

inline ClosedForm full_sum_product(long long q) {
  ClosedForm f{"FSP" + std::to_string(q)};
  f.add(R(q), 1).add(R(-q), 1).add(sq(q), q * (q - 1)).add(-sq(q), q * (q - 1)).add(R(0), 2 * (q - 1));
  return f;
}

// even-weight subgroup of Z_2^n: characters are x mod the all-ones word,
// eigenvalue ((n - 2w)^2 - n)/2 for weight w
inline ClosedForm halved_cube(long long n) {
  ClosedForm f{"HalfQ" + std::to_string(n)};
  for (long long w = 0; 2 * w <= n; ++w) {
    long long mult = binom(n, w);
    if (2 * w == n) mult /= 2;
    f.add(R(((n - 2 * w) * (n - 2 * w) - n), 2), (std::size_t)mult);
  }
  return f;
}

// eigenvalue n - 2 wt(x) + (-1)^(x.a) for each x in Z_2^n
inline ClosedForm decked_cube(long long n, u64 a) {
  ClosedForm f{"DQ" + std::to_string(n)};
  std::map<long long, std::size_t> acc;
  for (u64 x = 0; x < (u64(1) << n); ++x) acc[n - 2 * std::popcount(x) + (std::popcount(x & a) % 2 ? -1 : 1)]++;
  for (auto [v, m] : acc) f.add(R(v), m);
  return f;
}

}  // namespace cf

// ClosedForm for a family, or NoClosedForm where the sources give none
inline ClosedForm closed_form_spectrum(const FamilySpec& s, MatrixKind kind = MatrixKind::Adjacency) {
  const auto& p = s.params;
  auto P = [&](std::size_t i) -> long long {
    if (i >= p.size()) fail(Errc::BadParameters, "missing parameter");
    return p[i];
  };
  auto regular = [&](ClosedForm adj, long long d) { return kind == MatrixKind::Adjacency ? adj : cf::to_laplacian(adj, d); };
  const std::string id = s.id();
  auto tagged = [&](ClosedForm c) {
    c.source = id;
    return c;
  };
  switch (s.family) {
    case Family::Complete: return tagged(regular(cf::complete(P(0)), P(0) - 1));
    case Family::Cycle: return tagged(regular(cf::cycle(P(0)), 2));
    case Family::Cube: return tagged(regular(cf::cube(P(0)), P(0)));
    case Family::HalvedCube: return tagged(regular(cf::halved_cube(P(0)), P(0) * (P(0) - 1) / 2));
    case Family::DeckedCube: return tagged(regular(cf::decked_cube(P(0), (u64)P(1)), P(0) + 1));
    case Family::CompleteBipartite: {
      long long m = P(0), n = P(1);
      if (kind == MatrixKind::Adjacency) return tagged(cf::complete_bipartite(m, n));
      ClosedForm f{id, MatrixKind::Laplacian};
      f.add(cf::R(0), 1).add(cf::R(m), n - 1).add(cf::R(n), m - 1).add(cf::R(m + n), 1);
      return f;
    }
    case Family::Path: {
      if (kind == MatrixKind::Adjacency) return tagged(cf::path(P(0)));
      ClosedForm f{id, MatrixKind::Laplacian};
      for (long long k = 0; k < P(0); ++k) f.add(cf::R(2) - cf::R(2) * Expr::cos_pi(k, P(0)), 1);
      return f;
    }
    case Family::Star: {
      long long n = P(0);
      if (kind == MatrixKind::Adjacency) return tagged(cf::complete_bipartite(1, n));
      ClosedForm empty{"empty", MatrixKind::Laplacian};
      empty.add(cf::R(0), n);
      return tagged(cf::cone_laplacian(empty, n));
    }
    case Family::Wheel: {
      long long n = P(0);
      if (kind == MatrixKind::Adjacency) return tagged(cf::cone_regular(cf::cycle(n), 2, n));
      return tagged(cf::cone_laplacian(cf::to_laplacian(cf::cycle(n), 2), n));
    }
    case Family::Petersen: return tagged(regular(cf::srg({10, 3, 0, 1}), 3));
    case Family::Cayley: {
      AbelianGroup G(s.group);
      std::set<Vertex> S;
      for (auto& x : s.elements) S.insert(G.encode(x));
      return tagged(regular(cf::cayley(G, s.elements, false), (long long)S.size()));
    }
    case Family::BiCayley: {
      AbelianGroup G(s.group);
      std::set<Vertex> S;
      for (auto& x : s.elements) S.insert(G.encode(x));
      return tagged(regular(cf::cayley(G, s.elements, true), (long long)S.size()));
    }
    case Family::Paley: return tagged(regular(cf::paley(P(0)), (P(0) - 1) / 2));
    case Family::BiPaley: return tagged(regular(cf::bi_paley(P(0)), (P(0) - 1) / 2));
    case Family::Incidence: return tagged(regular(cf::incidence(P(0), P(1)), incidence_params(P(0), P(1)).d));
    case Family::SumProduct: return tagged(regular(cf::sum_product(P(0)), P(0) - 1));
    case Family::FullSumProduct: return tagged(regular(cf::full_sum_product(P(0)), P(0)));
    case Family::Shrikhande:
    case Family::RookTwin: return tagged(regular(cf::srg({16, 6, 2, 2}), 6));
    case Family::Heawood: return tagged(regular(cf::design({7, 3, 1, 1}), 3));
    case Family::TutteCoxeter:
      return tagged(regular(cf::partial_design({15, 3, 0, 1}, cf::srg({15, 8, 4, 4})), 3));
    case Family::Machine: {
      long long n = (long long)AbelianGroup(s.group).size();
      return tagged(regular(cf::srg({n * n, 3 * n - 3, n, 6}), 3 * n - 3));
    }
    default: break;
  }
  fail(Errc::NoClosedForm, "no closed-form spectrum for " + id);
}

struct ClosedFormReport {
  bool pass = false;
  double max_error = 0;
  std::string message;
};

// value-by-value within tol and cluster-by-cluster multiplicities
inline ClosedFormReport check_closed_form(const Spectrum& num, const ClosedForm& cf, double tol = 1e-7) {
  ClosedFormReport r;
  if (cf.size() != num.n()) {
    r.message = "size " + std::to_string(cf.size()) + " vs " + std::to_string(num.n());
    return r;
  }
  auto v = cf.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    double e = std::abs(v[i] - num.values[i]);
    r.max_error = std::max(r.max_error, e);
    if (e > tol && r.message.empty())
      r.message = "eigenvalue #" + std::to_string(i + 1) + ": closed form " + std::to_string(v[i]) + " vs numeric " +
                  std::to_string(num.values[i]);
  }
  if (!r.message.empty()) return r;
  auto cl = cluster_values(v, num.cluster_tol);
  if (cl.size() != num.entries.size()) {
    r.message = std::to_string(cl.size()) + " distinct closed-form values vs " + std::to_string(num.entries.size());
    return r;
  }
  for (std::size_t i = 0; i < cl.size(); ++i)
    if (cl[i].second != num.entries[i].second) {
      r.message = "multiplicity of " + std::to_string(cl[i].first) + ": " + std::to_string(cl[i].second) + " vs " +
                  std::to_string(num.entries[i].second);
      return r;
    }
  r.pass = true;
  return r;
}

inline ClosedFormReport verify_closed_form(const Graph& g, const ClosedForm& cf) {
  if (cf.size() != g.n()) fail(Errc::Mismatch, "closed form has " + std::to_string(cf.size()) + " eigenvalues for n=" + std::to_string(g.n()));
  auto r = check_closed_form(spectrum(g, cf.kind), cf);
  if (!r.pass) fail(Errc::Mismatch, cf.source + ": " + r.message);
  return r;
}

// eigenvalues of T_{d,R} with radial eigenfunctions
inline std::vector<double> radial_tree_eigenvalues(long long d, long long R, MatrixKind kind) {
  std::vector<double> v;
  const double s = 2 * std::sqrt((double)(d - 1));
  if (kind == MatrixKind::Adjacency) {
    for (long long k = 1; k <= R + 1; ++k) v.push_back(s * std::cos(std::numbers::pi * k / (R + 2)));
  } else {
    v.push_back(0);
    for (long long k = 1; k <= R; ++k) v.push_back(d - s * std::cos(std::numbers::pi * k / (R + 1)));
  }
  return v;
}

// ---- reading structure off the spectrum ----

struct SpectrumClass {
  bool bipartite = false;
  bool regular = false;
  std::optional<int> components;        // from the laplacian spectrum, if given
  std::optional<SrgParams> srg;         // regular, connected, three distinct eigenvalues
  std::optional<DesignParams> design;   // regular bipartite, eigenvalues +-d and +-theta
  bool extremal_design = false;         // +-d and +-sqrt(d-1)
};

inline SpectrumClass spectrum_classifiers(const Spectrum& adj, std::optional<Spectrum> lap = std::nullopt) {
  SpectrumClass c;
  const std::size_t n = adj.n();
  const double tol = std::max(1e-7, adj.cluster_tol);
  c.bipartite = true;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(adj.values[i] + adj.values[n - 1 - i]) > tol) c.bipartite = false;
  double sum2 = 0;
  for (double a : adj.values) sum2 += a * a;
  c.regular = std::abs(sum2 - (double)n * adj.max()) <= 1e-7 * std::max(1.0, sum2);
  if (lap) {
    int z = 0;
    for (double x : lap->values)
      if (std::abs(x) <= lap->cluster_tol) ++z;
    c.components = z;
  }
  if (!c.regular || n == 0) return c;
  const double d = adj.max();
  const long long di = std::llround(d);
  // connected iff d is a simple eigenvalue
  if (adj.entries.front().second != 1) return c;
  auto near_int = [](double x, long long& out) {
    out = std::llround(x);
    return std::abs(x - (double)out) < 1e-6;
  };
  if (!c.bipartite && adj.entries.size() == 3) {
    double r = adj.entries[1].first, s = adj.entries[2].first;
    long long cc, aa;
    if (near_int(d + r * s, cc) && near_int(d + r * s + r + s, aa)) c.srg = SrgParams{(long long)n, di, aa, cc};
  }
  if (c.bipartite && adj.entries.size() <= 4 && adj.entries.size() >= 2) {
    double theta = adj.entries.size() == 2 ? 0.0 : std::abs(adj.entries[1].first);
    long long cc;
    if (adj.entries.size() == 2 && n != 2) return c;
    if (near_int(d - theta * theta, cc)) {
      c.design = DesignParams{(long long)n / 2, di, cc, cc};
      c.extremal_design = cc == 1 && adj.entries.size() == 4;
    }
  }
  return c;
}

// ---- SRG feasibility ----

enum class SrgType { Quadratic, Integral, Infeasible };

struct SrgFeasibility {
  SrgType type = SrgType::Infeasible;
  long long t = 0;  // sqrt of the discriminant in the integral case
  long long mult_r = 0, mult_s = 0;
  std::string reason;
};

inline SrgFeasibility srg_feasibility(const SrgParams& p) {
  if (!srg_identity(p)) fail(Errc::IdentityViolated, "d(d-a-1) != (n-d-1)c");
  if (!(p.a < p.d - 1) || p.c <= 0) fail(Errc::BadParameters, "need a < d-1 and c > 0");
  SrgFeasibility f;
  const long long disc = (p.a - p.c) * (p.a - p.c) + 4 * (p.d - p.c);
  const long long num = 2 * p.d + (p.n - 1) * (p.a - p.c);
  if (num == 0) {
    if ((p.n - 1) % 2) {
      f.reason = "n-1 odd for equal multiplicities";
      return f;
    }
    f.type = SrgType::Quadratic;
    f.mult_r = f.mult_s = (p.n - 1) / 2;
    return f;
  }
  long long t = std::llround(std::sqrt((double)disc));
  while (t * t > disc) --t;
  while ((t + 1) * (t + 1) <= disc) ++t;
  if (t * t != disc) {
    f.reason = "discriminant not a square and multiplicities unequal";
    return f;
  }
  if (num % t != 0 || ((p.n - 1) - num / t) % 2 != 0) {
    f.reason = "multiplicities not integral";
    return f;
  }
  f.mult_r = ((p.n - 1) - num / t) / 2;
  f.mult_s = ((p.n - 1) + num / t) / 2;
  if (f.mult_r <= 0 || f.mult_s <= 0) {
    f.reason = "multiplicities not positive";
    return f;
  }
  f.type = SrgType::Integral;
  f.t = t;
  return f;
}

}  // namespace sgt
