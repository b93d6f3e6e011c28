#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgt/families.hpp"
#include "sgt/invariants.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

inline constexpr double kRelTol = 1e-7;
inline constexpr double kAbsTol = 1e-9;

inline double tolerance(double a, double b) { return std::max(kAbsTol, kRelTol * std::max(std::abs(a), std::abs(b))); }

enum class Relation { LE, GE, EQ, LT, GT };

inline const char* relation_str(Relation r) {
  switch (r) {
    case Relation::LE: return "<=";
    case Relation::GE: return ">=";
    case Relation::EQ: return "==";
    case Relation::LT: return "<";
    case Relation::GT: return ">";
  }
  return "?";
}

struct BoundRecord {
  std::string name;
  std::string statement;  // the inequality in words
  double lhs = 0, rhs = 0;
  Relation relation = Relation::LE;
  double slack = 0;  // >= 0 when the relation holds with room
  bool pass = true;
  bool skipped = false;
  std::string inputs;  // which eigenvalues / invariants were used, or the skip reason
};

inline BoundRecord judge(std::string name, std::string statement, double lhs, Relation rel, double rhs, std::string inputs) {
  BoundRecord r{std::move(name), std::move(statement), lhs, rhs, rel, 0, true, false, std::move(inputs)};
  const double t = tolerance(lhs, rhs);
  switch (rel) {
    case Relation::LE: r.slack = rhs - lhs; r.pass = lhs <= rhs + t; break;
    case Relation::GE: r.slack = lhs - rhs; r.pass = lhs + t >= rhs; break;
    case Relation::EQ: r.slack = -std::abs(lhs - rhs); r.pass = std::abs(lhs - rhs) <= t; break;
    // strict relations are decided without tolerance
    case Relation::LT: r.slack = rhs - lhs; r.pass = lhs < rhs; break;
    case Relation::GT: r.slack = lhs - rhs; r.pass = lhs > rhs; break;
  }
  return r;
}

inline BoundRecord skip(std::string name, std::string statement, std::string why) {
  BoundRecord r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  r.skipped = true;
  r.inputs = std::move(why);
  return r;
}

struct AuditReport {
  std::string graph;
  std::uint64_t seed = 0;
  std::vector<BoundRecord> records;

  std::size_t failures() const {
    std::size_t f = 0;
    for (auto& r : records) f += (!r.skipped && !r.pass);
    return f;
  }
  std::size_t skipped() const {
    std::size_t s = 0;
    for (auto& r : records) s += r.skipped;
    return s;
  }
  const BoundRecord* find(const std::string& name) const {
    for (auto& r : records)
      if (r.name == name) return &r;
    return nullptr;
  }
};

namespace detail {
inline bool is_tree(const Graph& g) { return g.n() >= 2 && is_connected(g) && g.m() + 1 == g.n(); }
inline bool is_complete(const Graph& g) { return g.m() == g.n() * (g.n() - 1) / 2; }
inline std::string fmt(double x) {
  char b[48];
  std::snprintf(b, sizeof b, "%.10g", x);
  return b;
}

// <Lf,f>/<f,f> against n|dS|/(|S||S^c|) for the step function |S^c| on S, -|S| off S
inline double step_rayleigh_deviation(const Graph& g, std::mt19937_64& rng, int samples) {
  const std::size_t n = g.n();
  double worst = 0;
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < samples; ++t) {
    std::vector<char> in(n);
    std::size_t s = 0;
    for (auto& c : in) s += (c = coin(rng));
    if (s == 0 || s == n) continue;
    std::vector<double> f(n);
    for (std::size_t v = 0; v < n; ++v) f[v] = in[v] ? (double)(n - s) : -(double)s;
    double num = 0, den = 0;
    std::size_t boundary = 0;
    for (auto [u, v] : g.edges()) {
      num += (f[u] - f[v]) * (f[u] - f[v]);
      boundary += in[u] != in[v];
    }
    for (double x : f) den += x * x;
    double expect = (double)n * (double)boundary / ((double)s * (double)(n - s));
    worst = std::max(worst, std::abs(num / den - expect) / std::max(1.0, expect));
  }
  return worst;
}
}  // namespace detail

inline AuditReport audit_bounds(const Graph& g, const InvariantReport& inv, const Spectrum& adj, const Spectrum& lap,
                                std::uint64_t seed = 0x5eed) {
  AuditReport rep;
  rep.graph = g.name();
  rep.seed = seed;
  auto& R = rep.records;
  const double n = (double)g.n();
  const double d = (double)inv.degree_max, dmin = (double)inv.degree_min, dave = inv.degree_avg.value();
  const bool regular = g.is_regular();
  const bool connected = inv.connected;
  const bool bip = inv.bipartition.has_value();
  const double amax = adj.max(), amin = adj.min();
  const double lmax = lap.max();
  const double l2 = g.n() >= 2 ? lap.asc(2) : 0.0;
  const double a2 = g.n() >= 2 ? adj.desc(2) : 0.0;
  using detail::fmt;

  auto need = [&](bool ok, const char* nm, const char* st, const char* why) {
    if (!ok) R.push_back(skip(nm, st, why));
    return ok;
  };

  R.push_back(judge("handshake", "sum deg = 2|E|", dave * n, Relation::EQ, 2.0 * (double)g.m(), "degrees"));
  {
    double s1 = 0, s2 = 0, s3 = 0;
    for (double a : adj.values) s1 += a, s2 += a * a, s3 += a * a * a;
    R.push_back(judge("trace_A", "sum alpha = 0", s1, Relation::EQ, 0.0, "adjacency spectrum"));
    R.push_back(judge("trace_A2", "sum alpha^2 = 2|E|", s2, Relation::EQ, 2.0 * (double)g.m(), "adjacency spectrum"));
    R.push_back(judge("trace_A3", "sum alpha^3 = 6 triangles", s3, Relation::EQ, 6.0 * (double)triangle_count(g),
                      "adjacency spectrum, triangle count"));
  }
  R.push_back(judge("alpha_location_upper", "alpha_max <= d", amax, Relation::LE, d, "alpha_max, d"));
  R.push_back(judge("alpha_location_lower", "alpha_min >= -d", amin, Relation::GE, -d, "alpha_min, d"));
  R.push_back(judge("lambda_location_lower", "lambda_min >= 0", lap.min(), Relation::GE, 0.0, "lambda_min"));
  R.push_back(judge("lambda_location_upper", "lambda_max <= 2d", lmax, Relation::LE, 2 * d, "lambda_max, d"));
  R.push_back(judge("average_degree", "d_ave <= alpha_max", dave, Relation::LE, amax, "alpha_max, d_ave"));
  R.push_back(judge("alpha_min_vs_max", "alpha_min >= -alpha_max", amin, Relation::GE, -amax, "alpha_min, alpha_max"));
  if (need(connected, "bipartite_iff_symmetric", "alpha_min = -alpha_max iff bipartite", "disconnected"))
    R.push_back(judge("bipartite_iff_symmetric", "alpha_min = -alpha_max iff bipartite",
                      std::abs(amin + amax) <= tolerance(amin, amax) ? 1.0 : 0.0, Relation::EQ, bip ? 1.0 : 0.0,
                      "alpha_min, alpha_max, bipartition"));
  {
    double lo = 1e300, hi = -1e300;
    for (std::size_t k = 1; k <= g.n(); ++k) {
      double s = adj.desc(k) + lap.asc(k);
      lo = std::min(lo, s), hi = std::max(hi, s);
    }
    R.push_back(judge("degree_sandwich_lower", "d_min <= alpha_k + lambda_k", lo, Relation::GE, dmin, "both spectra"));
    R.push_back(judge("degree_sandwich_upper", "alpha_k + lambda_k <= d", hi, Relation::LE, d, "both spectra"));
  }
  if (g.m() > 0) {
    R.push_back(judge("lambda_max_lower", "lambda_max >= d + 1", lmax, Relation::GE, d + 1, "lambda_max, d"));
    R.push_back(judge("alpha_max_lower", "alpha_max >= sqrt(d)", amax, Relation::GE, std::sqrt(d), "alpha_max, d"));
  }
  if (!detail::is_complete(g) && g.n() >= 2) {
    R.push_back(judge("second_laplacian", "lambda_2 <= d (not complete)", l2, Relation::LE, d, "lambda_2, d"));
    R.push_back(judge("second_adjacency", "alpha_2 >= 0 (not complete)", a2, Relation::GE, 0.0, "alpha_2"));
  }
  if (connected) {
    const double diam = (double)*inv.diameter;
    R.push_back(judge("distinct_eigenvalues", "#distinct alpha >= diameter + 1", (double)adj.distinct(), Relation::GE,
                      diam + 1, "adjacency clusters, diameter"));
    bool top = std::abs(lmax - 2 * d) <= tolerance(lmax, 2 * d);
    R.push_back(judge("lambda_max_2d", "lambda_max = 2d iff regular and bipartite", top ? 1.0 : 0.0, Relation::EQ,
                      (regular && bip) ? 1.0 : 0.0, "lambda_max, d, structure"));
    // growth of laplacian eigenvalues and its adjacency corollary
    for (int k = 1; 2 * k <= (int)diam && k + 1 <= (int)g.n(); ++k) {
      double c = 2 * std::sqrt(std::max(0.0, d - 1)) * std::cos(2 * std::numbers::pi * k / diam);
      R.push_back(judge("laplacian_growth_k" + std::to_string(k), "lambda_{k+1} <= d - 2 sqrt(d-1) cos(2 pi k/diam)",
                        lap.asc(k + 1), Relation::LE, d - c, "lambda, d, diameter"));
      if (regular)
        R.push_back(judge("alon_boppana_k" + std::to_string(k), "alpha_{k+1} >= 2 sqrt(d-1) cos(2 pi k/diam)",
                          adj.desc(k + 1), Relation::GE, c, "alpha, d, diameter"));
    }
    if (d >= 3)
      R.push_back(judge("diameter_logarithmic", "diameter > log n / log(d-1) - 2", diam, Relation::GT,
                        std::log(n) / std::log(d - 1) - 2, "n, d, diameter"));
    if (regular && d >= 3 && inv.girth != kInfinity)
      R.push_back(judge("girth_logarithmic", "girth < 2 log n / log(d-1) + 2", (double)inv.girth, Relation::LT,
                        2 * std::log(n) / std::log(d - 1) + 2, "n, d, girth"));
    if (inv.girth != kInfinity) {
      R.push_back(judge("girth_diameter", "girth <= 2 diameter + 1", (double)inv.girth, Relation::LE, 2 * diam + 1,
                        "girth, diameter"));
      if (inv.girth % 2 == 0)
        R.push_back(judge("girth_diameter_even", "even girth <= 2 diameter", (double)inv.girth, Relation::LE, 2 * diam,
                          "girth, diameter"));
    }
    if (regular && g.n() >= 3) {
      if (!bip) {
        double al = std::max(a2, -amin);
        if (al > 1e-9 && al < d - 1e-9)
          R.push_back(judge("chung_diameter", "diameter <= log(n-1)/log(d/alpha) + 1", diam, Relation::LE,
                            std::log(n - 1) / std::log(d / al) + 1, "alpha_2, alpha_n, d, n"));
      } else {
        const double m = n / 2;
        if (a2 > 1e-9 && m > 1 && a2 < d - 1e-9)
          R.push_back(judge("chung_diameter_bipartite", "diameter <= log(m-1)/log(d/alpha_2) + 2", diam, Relation::LE,
                            std::log(m - 1) / std::log(d / a2) + 2, "alpha_2, d, m"));
      }
    }
    if (detail::is_tree(g) && d >= 2) {
      const double s = 2 * std::sqrt(std::max(0.0, d - 1));
      R.push_back(judge("tree_alpha_max", "tree: alpha_max <= 2 sqrt(d-1) cos(pi/(diam+2))", amax, Relation::LE,
                        s * std::cos(std::numbers::pi / (diam + 2)), "alpha_max, d, diameter"));
      R.push_back(judge("tree_lambda_max", "tree: lambda_max <= d + 2 sqrt(d-1) cos(pi/(diam+1))", lmax, Relation::LE,
                        d + s * std::cos(std::numbers::pi / (diam + 1)), "lambda_max, d, diameter"));
      R.push_back(judge("tree_alpha_strict", "tree: alpha_max < 2 sqrt(d-1)", amax, Relation::LT, s,
                        "alpha_max, d"));
      R.push_back(judge("tree_pendant", "tree: lambda_2 <= 2 - 2 cos(pi/(diam+1))", l2, Relation::LE,
                        2 - 2 * std::cos(std::numbers::pi / (diam + 1)), "lambda_2, diameter"));
    }
  }
  // exact invariants, skipped past caps
  if (inv.chi) {
    const double chi = *inv.chi;
    R.push_back(judge("wilf_chromatic", "chi <= 1 + alpha_max", chi, Relation::LE, 1 + amax, "chi, alpha_max"));
    if (g.m() > 0)
      R.push_back(judge("hoffman_chromatic", "chi >= 1 + alpha_max / (-alpha_min)", chi, Relation::GE, 1 + amax / -amin,
                        "chi, alpha_max, alpha_min"));
    R.push_back(judge("chromatic_degree", "chi <= d + 1", chi, Relation::LE, d + 1, "chi, d"));
    bool odd_cycle = regular && d == 2 && connected && g.n() % 2 == 1;
    if (connected && !detail::is_complete(g) && !odd_cycle && g.n() >= 3)
      R.push_back(judge("brooks", "chi <= d unless complete or odd cycle", chi, Relation::LE, d, "chi, d"));
    if (inv.iota)
      R.push_back(judge("chi_iota", "chi * iota >= n", chi * *inv.iota, Relation::GE, n, "chi, iota"));
  } else {
    R.push_back(skip("wilf_chromatic", "chi <= 1 + alpha_max", "chi not computed"));
    R.push_back(skip("hoffman_chromatic", "chi >= 1 + alpha_max / (-alpha_min)", "chi not computed"));
  }
  if (inv.iota) {
    if (g.m() > 0)
      R.push_back(judge("hoffman_independence", "iota <= n (1 - d_min / lambda_max)", (double)*inv.iota, Relation::LE,
                        n * (1 - dmin / lmax), "iota, d_min, lambda_max"));
  } else {
    R.push_back(skip("hoffman_independence", "iota <= n (1 - d_min / lambda_max)", "iota not computed"));
  }
  if (inv.omega) {
    const double w = *inv.omega;
    R.push_back(judge("spectral_turan", "alpha_max <= (1 - 1/omega) n", amax, Relation::LE, (1 - 1 / w) * n,
                      "alpha_max, omega"));
    R.push_back(judge("turan_edges", "|E| <= (1 - 1/omega) n^2 / 2", (double)g.m(), Relation::LE,
                      0.5 * (1 - 1 / w) * n * n, "omega"));
  } else {
    R.push_back(skip("spectral_turan", "alpha_max <= (1 - 1/omega) n", "omega not computed"));
  }
  if (triangle_count(g) == 0)
    R.push_back(judge("mantel", "triangle-free: |E| <= n^2/4", (double)g.m(), Relation::LE, std::floor(n * n / 4),
                      "edge count"));
  if (inv.beta) {
    const double beta = inv.beta->beta.value();
    R.push_back(judge("alon_milman", "beta >= lambda_2 / 2", beta, Relation::GE, l2 / 2, "beta, lambda_2"));
    R.push_back(judge("dodziuk", "beta <= sqrt(2 d lambda_2)", beta, Relation::LE, std::sqrt(2 * d * l2), "beta, lambda_2, d"));
    R.push_back(judge("mohar_beta", "beta <= (d/2)(n+1)/(n-1)", beta, Relation::LE, d / 2 * (n + 1) / (n - 1), "beta, d, n"));
    if (beta > 0 && inv.diameter)
      R.push_back(judge("upper_logarithmic", "diameter <= 2 log(n/2)/log(1 + beta/d) + 2", (double)*inv.diameter,
                        Relation::LE, 2 * std::log(n / 2) / std::log(1 + beta / d) + 2, "beta, d, diameter"));
  } else {
    R.push_back(skip("alon_milman", "beta >= lambda_2 / 2", "beta not computed"));
    R.push_back(skip("dodziuk", "beta <= sqrt(2 d lambda_2)", "beta not computed"));
  }
  if (g.n() >= 2) {
    std::mt19937_64 rng(seed);
    R.push_back(judge("step_rayleigh", "<Lf,f>/<f,f> = n|dS|/(|S||S^c|)", detail::step_rayleigh_deviation(g, rng, 100),
                      Relation::LE, 1e-8, "random sets, seeded"));
  }
  return rep;
}

inline AuditReport audit_graph(const Graph& g, const Caps& caps = {}, std::uint64_t seed = 0x5eed) {
  return audit_bounds(g, compute_invariants(g, caps), spectrum(g, MatrixKind::Adjacency), spectrum(g, MatrixKind::Laplacian),
                      seed);
}

// ---- the +-1 eigenfunction certificate ----

struct CheegerCertificate {
  bool found = false;
  double lambda2 = 0;
  std::optional<Rational> beta;  // |dS|/|S| for S = {f = +1}, equal to lambda_2/2
  std::vector<int> f;
};

namespace detail {
inline bool pm1_eigen(const Graph& g, const std::vector<double>& f, double lam, std::vector<int>& out) {
  double scale = 0;
  for (double x : f) scale = std::max(scale, std::abs(x));
  if (scale < 1e-9) return false;
  out.assign(g.n(), 0);
  long long s = 0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    double x = f[v] / scale;
    if (std::abs(std::abs(x) - 1) > 1e-6) return false;
    out[v] = x > 0 ? 1 : -1;
    s += out[v];
  }
  if (s != 0) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    long long lf = (long long)g.degree(v) * out[v];
    for (Vertex w : g.neighbors(v)) lf -= out[w];
    if (std::abs((double)lf - lam * out[v]) > 1e-6 * std::max(1.0, lam)) return false;
  }
  return true;
}
}  // namespace detail

// Extra candidate functions for graphs with known group structure: real and
// imaginary parts of characters (and their sum and difference).
inline std::vector<std::vector<double>> character_candidates(const FamilySpec& s) {
  std::vector<std::vector<double>> out;
  auto push_complex = [&](const std::vector<std::complex<double>>& z) {
    std::vector<double> re(z.size()), im(z.size()), p(z.size()), m(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
      re[i] = z[i].real(), im[i] = z[i].imag(), p[i] = re[i] + im[i], m[i] = re[i] - im[i];
    out.push_back(re), out.push_back(im), out.push_back(p), out.push_back(m);
  };
  auto group_chars = [&](const AbelianGroup& G, const std::vector<Vertex>& ids) {
    for (Vertex k = 1; k < G.size(); ++k) {
      auto kk = G.decode(k);
      std::vector<std::complex<double>> z;
      for (Vertex id : ids) {
        auto x = G.decode(id);
        double ph = 0;
        for (std::size_t i = 0; i < x.size(); ++i) ph += (double)((kk[i] * x[i]) % G.orders()[i]) / (double)G.orders()[i];
        z.push_back(std::polar(1.0, 2 * std::numbers::pi * ph));
      }
      push_complex(z);
    }
  };
  auto iota = [](std::size_t n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  switch (s.family) {
    case Family::Cube: group_chars(AbelianGroup(std::vector<i64>(s.params.at(0), 2)), iota(std::size_t(1) << s.params[0])); break;
    case Family::HalvedCube: {
      std::vector<Vertex> ids;
      for (Vertex u = 0; u < (1u << s.params.at(0)); ++u)
        if (std::popcount(u) % 2 == 0) ids.push_back(u);
      group_chars(AbelianGroup(std::vector<i64>(s.params[0], 2)), ids);
      break;
    }
    case Family::Shrikhande:
    case Family::RookTwin: group_chars(AbelianGroup({4, 4}), iota(16)); break;
    case Family::Cayley: group_chars(AbelianGroup(s.group), iota(AbelianGroup(s.group).size())); break;
    case Family::Incidence: {
      // chi on black cosets, c * chi on white, c = +-conj(chi(S))/|chi(S)|
      auto M = incidence_model((std::size_t)s.params.at(0), (u64)s.params.at(1));
      for (u64 k = 1; k < M.m; ++k) {
        std::complex<double> cs = 0;
        for (u64 j : M.S) cs += std::polar(1.0, 2 * std::numbers::pi * (double)((k * j) % M.m) / (double)M.m);
        if (std::abs(cs) < 1e-9) continue;
        for (int sign : {1, -1}) {
          std::complex<double> c = (double)sign * std::conj(cs) / std::abs(cs);
          std::vector<std::complex<double>> z(2 * M.m);
          for (std::size_t i = 0; i < M.m; ++i) {
            auto chi = std::polar(1.0, 2 * std::numbers::pi * (double)((k * M.coset[i]) % M.m) / (double)M.m);
            z[i] = chi;
            z[M.m + i] = c * chi;
          }
          push_complex(z);
        }
      }
      break;
    }
    default: break;
  }
  return out;
}

// Looks for a +-1 valued function in the lambda_2 eigenspace.
inline CheegerCertificate cheeger_pm1(const Graph& g, const Spectrum& lap,
                                      const std::vector<std::vector<double>>& extra = {}) {
  CheegerCertificate c;
  if (g.n() < 2 || !lap.vectors || lap.kind != MatrixKind::Laplacian) return c;
  c.lambda2 = lap.asc(2);
  const std::size_t n = g.n();
  if (n % 2) return c;
  auto accept = [&](const std::vector<double>& f) {
    std::vector<int> s;
    if (!detail::pm1_eigen(g, f, c.lambda2, s)) return false;
    std::vector<Vertex> S;
    for (Vertex v = 0; v < n; ++v)
      if (s[v] > 0) S.push_back(v);
    c.found = true;
    c.f = s;
    c.beta = Rational(boundary_size(g, S), (std::int64_t)S.size());
    return true;
  };
  for (auto& f : extra)
    if (f.size() == n && accept(f)) return c;
  // orthonormal basis of the eigenspace
  std::vector<Eigen::Index> cols;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(lap.values[i] - c.lambda2) <= lap.cluster_tol) cols.push_back((Eigen::Index)i);
  Matrix B(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) B.col(j) = lap.vectors->col(cols[j]);
  auto try_vec = [&](const Eigen::VectorXd& x) {
    std::vector<double> f(n);
    for (std::size_t v = 0; v < n; ++v) f[v] = x[v] > 0 ? 1.0 : (x[v] < 0 ? -1.0 : 0.0);
    return accept(f);
  };
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (try_vec(B.col(j))) return c;
  // projections of e_u - e_v onto the eigenspace
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      Eigen::VectorXd x = B * (B.row(u) - B.row(v)).transpose();
      if (try_vec(x)) return c;
    }
  // exhaustive over balanced sign vectors for small n
  if (n <= 20) {
    std::vector<double> f(n);
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      if (std::popcount(mask) != (int)n / 2) continue;
      for (std::size_t v = 0; v < n; ++v) f[v] = (v + 1 < n && (mask >> v & 1)) ? 1.0 : -1.0;
      if (accept(f)) return c;
    }
  }
  return c;
}

// ---- mixing lemma and path counting ----

struct MixingResult {
  double count = 0, main = 0, error = 0;
  bool pass = false;
};

namespace detail {
// 1_S^T A^l 1_T
inline double walk_count(const Graph& g, const std::vector<Vertex>& S, const std::vector<Vertex>& T, int l) {
  std::vector<double> x(g.n(), 0), y(g.n());
  for (Vertex t : T) x[t] += 1;
  for (int i = 0; i < l; ++i) {
    std::fill(y.begin(), y.end(), 0.0);
    for (Vertex v = 0; v < g.n(); ++v)
      for (Vertex w : g.neighbors(v)) y[v] += x[w];
    std::swap(x, y);
  }
  double s = 0;
  for (Vertex v : S) s += x[v];
  return s;
}
inline void check_set(const Graph& g, const std::vector<Vertex>& S) {
  std::vector<char> seen(g.n(), 0);
  for (Vertex v : S) {
    if (v >= g.n()) fail(Errc::IndexOutOfRange, "vertex out of range");
    if (seen[v]++) fail(Errc::BadParameters, "repeated vertex in set");
  }
}
}  // namespace detail

// e(S,T) (l = 1) or p_l(S,T); bipartite graphs need the colour constraint of the theorem
inline MixingResult mixing_lemma(const Graph& g, const Spectrum& adj, const std::vector<Vertex>& S,
                                 const std::vector<Vertex>& T, int l = 1) {
  if (!g.is_regular()) fail(Errc::NotRegular, "mixing lemma needs a regular graph");
  if (l < 1) fail(Errc::BadParameters, "path length must be >= 1");
  detail::check_set(g, S);
  detail::check_set(g, T);
  const double d = (double)g.degree_max();
  const double s = (double)S.size(), t = (double)T.size();
  MixingResult r;
  r.count = detail::walk_count(g, S, T, l);
  auto bp = bipartition(g);
  if (bp) {
    for (auto* X : {&S, &T})
      for (std::size_t i = 1; i < X->size(); ++i)
        if ((*bp)[(*X)[i]] != (*bp)[(*X)[0]]) fail(Errc::ColorViolation, "set mixes both colours");
    if (!S.empty() && !T.empty()) {
      bool same = (*bp)[S[0]] == (*bp)[T[0]];
      if (same == (l % 2 == 1)) fail(Errc::ColorViolation, "colours of S and T do not fit the path length");
    }
    const double m = (double)g.n() / 2;
    r.main = std::pow(d, l) / m * s * t;
    r.error = std::pow(adj.desc(2), l) / m * std::sqrt(s * t * (m - s) * (m - t));
  } else {
    const double n = (double)g.n();
    const double al = std::max(adj.desc(2), -adj.min());
    r.main = std::pow(d, l) / n * s * t;
    r.error = std::pow(al, l) / n * std::sqrt(s * t * (n - s) * (n - t));
  }
  r.pass = std::abs(r.count - r.main) <= r.error + tolerance(r.error, r.count);
  return r;
}

// solutions in A x B x C x D of a + b = cd (which = 0) or ab + cd = 1 (which = 1),
// counted as e(S,T) in the projective incidence graph of F^3
struct SumProductWindow {
  double count = 0;   // N_W
  double direct = 0;  // brute-force count over the window
  double expected = 0, bound = 0;
  bool pass = false;
};

inline SumProductWindow sum_product_window(const ProjectiveSpace& P, const Graph& inc, int which,
                                           const std::vector<u32>& A, const std::vector<u32>& B,
                                           const std::vector<u32>& C, const std::vector<u32>& D) {
  const FieldSpec& F = *P.F;
  const Vertex m = (Vertex)P.points.size();
  const u32 m1 = F.neg(1);
  std::vector<Vertex> S, T;
  for (u32 a : A)
    for (u32 c : C) S.push_back(P.point(which == 0 ? std::vector<u32>{a, m1, c} : std::vector<u32>{1, a, c}));
  for (u32 b : B)
    for (u32 d : D) T.push_back(m + P.point({m1, b, d}));
  SumProductWindow w;
  std::vector<char> inT(inc.n(), 0);
  for (Vertex t : T) inT[t] = 1;
  for (Vertex s : S)
    for (Vertex x : inc.neighbors(s)) w.count += inT[x];
  for (u32 a : A)
    for (u32 b : B)
      for (u32 c : C)
        for (u32 d : D) {
          bool ok = which == 0 ? F.add(a, b) == F.mul(c, d) : F.add(F.mul(a, b), F.mul(c, d)) == 1;
          w.direct += ok;
        }
  const double W = (double)(A.size() * B.size() * C.size() * D.size());
  w.expected = W / (double)F.q();
  w.bound = std::sqrt((double)F.q() * W);
  w.pass = std::abs(w.count - w.expected) <= w.bound + tolerance(w.bound, w.count) && w.count == w.direct;
  return w;
}

// ---- perturbations ----

inline void interlace_records(std::vector<BoundRecord>& R, const std::string& tag, const std::vector<double>& lo,
                              const std::vector<double>& mid, const std::vector<double>& hi) {
  for (std::size_t k = 0; k < mid.size(); ++k) {
    R.push_back(judge(tag + "_lower_k" + std::to_string(k + 1), tag, mid[k], Relation::GE, lo[k], "spectra"));
    R.push_back(judge(tag + "_upper_k" + std::to_string(k + 1), tag, mid[k], Relation::LE, hi[k], "spectra"));
  }
}

enum class Perturbation { RemoveVertex, RemoveEdge, RemoveSubgraph };

struct PerturbationReport {
  Graph result;
  std::vector<BoundRecord> records;
  std::size_t failures() const {
    std::size_t f = 0;
    for (auto& r : records) f += !r.pass;
    return f;
  }
};

// vertex: alpha_{k+1} <= alpha'_k <= alpha_k, lambda_k - 1 <= lambda'_k <= lambda_{k+1};
// edge / edge set: alpha_k - alpha_max(Y) <= alpha'_k <= alpha_k - alpha_min(Y), lambda'_k <= lambda_k
inline PerturbationReport perturbation_checks(const Graph& g, Perturbation op, Vertex v = 0,
                                              const std::vector<Edge>& edges = {}) {
  PerturbationReport rep;
  auto A = spectrum(g, MatrixKind::Adjacency), L = spectrum(g, MatrixKind::Laplacian);
  const std::size_t n = g.n();
  auto& R = rep.records;
  if (op == Perturbation::RemoveVertex) {
    rep.result = remove_vertex(g, v);
    auto A2 = spectrum(rep.result, MatrixKind::Adjacency), L2 = spectrum(rep.result, MatrixKind::Laplacian);
    std::vector<double> lo, mid, hi;
    for (std::size_t k = 1; k < n; ++k) lo.push_back(A.desc(k + 1)), mid.push_back(A2.desc(k)), hi.push_back(A.desc(k));
    interlace_records(R, "vertex_alpha", lo, mid, hi);
    lo.clear(), mid.clear(), hi.clear();
    for (std::size_t k = 1; k < n; ++k) lo.push_back(L.asc(k) - 1), mid.push_back(L2.asc(k)), hi.push_back(L.asc(k + 1));
    interlace_records(R, "vertex_lambda", lo, mid, hi);
  } else {
    if (edges.empty()) fail(Errc::InvalidOperation, "no edges to remove");
    if (op == Perturbation::RemoveEdge && edges.size() != 1) fail(Errc::InvalidOperation, "remove_edge takes one edge");
    rep.result = remove_edges(g, edges);
    auto A2 = spectrum(rep.result, MatrixKind::Adjacency), L2 = spectrum(rep.result, MatrixKind::Laplacian);
    auto Y = spectrum(Graph(n, edges), MatrixKind::Adjacency);
    std::vector<double> lo, mid, hi;
    for (std::size_t k = 1; k <= n; ++k)
      lo.push_back(A.desc(k) - Y.max()), mid.push_back(A2.desc(k)), hi.push_back(A.desc(k) - Y.min());
    interlace_records(R, "edge_alpha", lo, mid, hi);
    lo.clear(), mid.clear(), hi.clear();
    const double drop = op == Perturbation::RemoveEdge ? 2.0 : 2.0 * (double)Graph(n, edges).degree_max();
    for (std::size_t k = 1; k <= n; ++k) lo.push_back(L.asc(k) - drop), mid.push_back(L2.asc(k)), hi.push_back(L.asc(k));
    interlace_records(R, "edge_lambda", lo, mid, hi);
    if (is_connected(g))
      R.push_back(judge("proper_subgraph_alpha_max", "alpha'_max < alpha_max", A2.max(), Relation::LT, A.max(), "alpha_max"));
  }
  return rep;
}

// alpha_k(G) - 1 <= alpha_k(C_n) <= alpha_k(G) + 1 must hold if a cubic G is hamiltonian;
// returns the 1-based k where it fails
inline std::vector<std::size_t> compare_to_cycle(const Graph& g) {
  if (!g.is_regular() || g.degree_max() != 3) fail(Errc::InvalidOperation, "compare_to_cycle needs a cubic graph");
  auto A = spectrum(g), C = spectrum(cycle_graph(g.n()));
  std::vector<std::size_t> bad;
  for (std::size_t k = 1; k <= g.n(); ++k) {
    double a = A.desc(k), c = C.desc(k);
    if (c < a - 1 - tolerance(a, c) || c > a + 1 + tolerance(a, c)) bad.push_back(k);
  }
  return bad;
}

// ---- Motzkin-Straus ----

struct MotzkinStraus {
  double value = 0, bound = 0;
  bool pass = false;
};

// <Af,f> = sum over ordered adjacent pairs of f(u) f(v)
inline MotzkinStraus motzkin_straus(const Graph& g, const std::vector<double>& f, int omega) {
  if (f.size() != g.n()) fail(Errc::BadWeights, "one weight per vertex");
  double s = 0;
  for (double x : f) {
    if (x < -1e-12) fail(Errc::BadWeights, "weights must be non-negative");
    s += x;
  }
  if (std::abs(s - 1) > 1e-12) fail(Errc::BadWeights, "weights must sum to 1");
  MotzkinStraus r;
  for (auto [u, v] : g.edges()) r.value += 2 * f[u] * f[v];
  r.bound = 1 - 1.0 / omega;
  r.pass = r.value <= r.bound + tolerance(r.value, r.bound);
  return r;
}

// ---- matrix principles on random symmetric matrices ----

inline Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0, 1);
  Matrix M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) M(i, j) = M(j, i) = N(rng);
  return M;
}

// ascending eigenvalues mu_1 <= ... <= mu_n
inline std::vector<double> ascending(const Matrix& M) {
  auto s = eig_symmetric(M);
  return {s.values.rbegin(), s.values.rend()};
}

// worst violation (positive = violated) of each principle
inline double cauchy_violation(const Matrix& M) {
  auto mu = ascending(M);
  auto nu = ascending(M.bottomRightCorner(M.rows() - 1, M.cols() - 1));
  double worst = -1e300;
  for (std::size_t k = 0; k < nu.size(); ++k) worst = std::max({worst, mu[k] - nu[k], nu[k] - mu[k + 1]});
  return worst;
}

inline double weyl_violation(const Matrix& M, const Matrix& N) {
  auto a = ascending(M), b = ascending(N), c = ascending(M + N);
  const std::size_t n = a.size();
  double worst = -1e300;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = 1; k + l - 1 <= n; ++l) worst = std::max(worst, a[k - 1] + b[l - 1] - c[k + l - 2]);
  return worst;
}

// mu_1 + mu_{k+l} <= mu'_k + mu''_l for the diagonal blocks of size n1 and n - n1
inline double aronszajn_violation(const Matrix& M, std::size_t n1) {
  const std::size_t n = M.rows(), n2 = n - n1;
  auto mu = ascending(M);
  auto a = ascending(M.topLeftCorner(n1, n1)), b = ascending(M.bottomRightCorner(n2, n2));
  double worst = -1e300;
  for (std::size_t k = 1; k <= n1; ++k)
    for (std::size_t l = 1; l <= n2; ++l)
      if (k + l <= n) worst = std::max(worst, mu[0] + mu[k + l - 1] - a[k - 1] - b[l - 1]);
  return worst;
}

// mu_k = min over k-dim V of max Rayleigh quotient on V: random V never beat mu_k,
// and the span of the k lowest eigenvectors attains it
inline double courant_fischer_violation(const Matrix& M, std::mt19937_64& rng, int trials) {
  const Eigen::Index n = M.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  const auto& mu = es.eigenvalues();
  double worst = -1e300;
  std::normal_distribution<double> N(0, 1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Matrix Q = es.eigenvectors().leftCols(k);
    double attained = Eigen::SelfAdjointEigenSolver<Matrix>(Q.transpose() * M * Q).eigenvalues().maxCoeff();
    worst = std::max(worst, std::abs(attained - mu[k - 1]) - 1e-9);
    for (int t = 0; t < trials; ++t) {
      Matrix V(n, k);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < k; ++j) V(i, j) = N(rng);
      Eigen::HouseholderQR<Matrix> qr(V);
      Matrix U = qr.householderQ() * Matrix::Identity(n, k);
      double mx = Eigen::SelfAdjointEigenSolver<Matrix>(U.transpose() * M * U).eigenvalues().maxCoeff();
      worst = std::max(worst, mu[k - 1] - mx);
    }
  }
  return worst;
}

}  // namespace sgt
