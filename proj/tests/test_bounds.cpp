#include <gtest/gtest.h>

#include <random>

#include "sgt/bounds.hpp"
#include "sgt/corpus.hpp"

using namespace sgt;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidOperation;
}

std::vector<Vertex> random_subset(const std::vector<Vertex>& from, std::mt19937_64& rng) {
  std::vector<Vertex> out;
  std::bernoulli_distribution coin(0.4);
  for (Vertex v : from)
    if (coin(rng)) out.push_back(v);
  return out;
}

double edge_count_oracle(const Graph& g, const std::vector<Vertex>& S, const std::vector<Vertex>& T) {
  double c = 0;
  for (Vertex s : S)
    for (Vertex t : T) c += g.has_edge(s, t);
  return c;
}

std::vector<Vertex> range(Vertex a, Vertex b) {
  std::vector<Vertex> v;
  for (Vertex i = a; i < b; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST(Records, ToleranceAndRelations) {
  EXPECT_TRUE(judge("x", "", 1.0, Relation::LE, 1.0 - 1e-10, "").pass);
  EXPECT_FALSE(judge("x", "", 1.0, Relation::LE, 1.0 - 1e-5, "").pass);
  EXPECT_FALSE(judge("x", "", 1.0, Relation::LT, 1.0, "").pass);
  EXPECT_TRUE(judge("x", "", 2.0, Relation::EQ, 2.0 + 1e-8, "").pass);
  auto s = skip("chi_bound", "", "cap");
  EXPECT_TRUE(s.skipped);
}

TEST(Audit, ExamplesAndDeterminism) {
  auto p = audit_graph(petersen_graph());
  EXPECT_EQ(p.failures(), 0u);
  auto am = p.find("alon_milman");
  ASSERT_TRUE(am);
  EXPECT_NEAR(am->lhs, 1.0, 1e-12);
  EXPECT_NEAR(am->rhs, 1.0, 1e-9);  // beta = lambda_2 / 2 = 1: tight

  for (std::size_t n : {3, 5, 7}) {
    auto r = audit_graph(complete_graph(n));
    auto h = r.find("hoffman_chromatic");
    ASSERT_TRUE(h);
    EXPECT_NEAR(h->rhs, (double)n, 1e-9);
    EXPECT_NEAR(h->lhs, (double)n, 1e-9);
  }
  // iota <= sqrt(q) <= chi on Paley graphs
  auto g = paley_graph(13);
  auto inv = compute_invariants(g);
  EXPECT_LE(*inv.iota, std::sqrt(13.0));
  EXPECT_GE(*inv.chi, std::sqrt(13.0));
  auto r = audit_graph(g);
  EXPECT_EQ(r.failures(), 0u);
  auto hi = r.find("hoffman_independence");
  ASSERT_TRUE(hi);
  EXPECT_GE(hi->rhs + 1e-9, *inv.iota);

  auto a1 = audit_graph(shrikhande_graph(), {}, 99), a2 = audit_graph(shrikhande_graph(), {}, 99);
  ASSERT_EQ(a1.records.size(), a2.records.size());
  for (std::size_t i = 0; i < a1.records.size(); ++i) EXPECT_EQ(a1.records[i].lhs, a2.records[i].lhs);
  EXPECT_EQ(a1.seed, 99u);
}

TEST(Audit, CorpusHasNoFailures) {
  for (auto& s : corpus_specs()) {
    auto r = audit_graph(build(s));
    for (auto& rec : r.records) EXPECT_TRUE(rec.pass || rec.skipped) << s.id() << " " << rec.name << ": " << rec.lhs
                                                                      << " " << relation_str(rec.relation) << " " << rec.rhs;
  }
}

TEST(Audit, SkipsPastCaps) {
  Caps c;
  c.chi = 4;
  c.iota = 4;
  c.beta = 4;
  auto r = audit_graph(petersen_graph(), c);
  EXPECT_GT(r.skipped(), 0u);
  EXPECT_EQ(r.failures(), 0u);
  auto w = r.find("wilf_chromatic");
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->skipped);
}

TEST(Audit, TreeBoundsOnTrees) {
  for (auto g : {radial_tree(3, 3, false), radial_tree(4, 2, true), ade_graph("E8"), star_graph(5), path_graph(7)}) {
    auto r = audit_graph(g);
    EXPECT_EQ(r.failures(), 0u) << g.name();
    EXPECT_TRUE(r.find("tree_alpha_max")) << g.name();
  }
}

TEST(Cheeger, CertificatesMatchExactBeta) {
  struct Case {
    FamilySpec spec;
    Rational beta;
  };
  std::vector<Case> cases{{parse_family({"cube", "3"}), Rational(1)},
                          {parse_family({"cube", "4"}), Rational(1)},
                          {parse_family({"petersen"}), Rational(1)},
                          {parse_family({"shrikhande"}), Rational(2)},
                          {parse_family({"rook-twin"}), Rational(2)},
                          {parse_family({"complete", "6"}), Rational(3)}};
  for (auto& [spec, beta] : cases) {
    auto g = build(spec);
    auto lap = spectrum(g, MatrixKind::Laplacian, true);
    auto c = cheeger_pm1(g, lap, character_candidates(spec));
    ASSERT_TRUE(c.found) << spec.id();
    EXPECT_EQ(*c.beta, beta) << spec.id();
    EXPECT_NEAR(c.beta->value(), c.lambda2 / 2, 1e-7) << spec.id();
    // exhaustive oracle
    EXPECT_EQ(isoperimetric_constant(g).beta, beta) << spec.id();
  }
  auto odd = cheeger_pm1(petersen_graph(), spectrum(cycle_graph(5), MatrixKind::Laplacian, true));
  EXPECT_FALSE(odd.found);
}

TEST(Cheeger, IncidenceFourThreeBothReadings) {
  auto spec = parse_family({"incidence", "4", "3"});
  auto g = build(spec);
  auto lap = spectrum(g, MatrixKind::Laplacian, true);
  const double q = 3;
  // lambda_2 = d - q^(n/2-1) = (q^2+q+1) - q = q^2 + 1
  EXPECT_NEAR(lap.asc(2), q * q + 1, 1e-9);
  auto c = cheeger_pm1(g, lap, character_candidates(spec));
  ASSERT_TRUE(c.found);
  // certificate gives beta = lambda_2 / 2 = 5; the alternative reading beta = q^2 + 1 = 10 is then refuted
  EXPECT_EQ(*c.beta, Rational(5));
  EXPECT_NE(c.beta->value(), q * q + 1);
}

TEST(Cheeger, HalvedCubeConjecture) {
  for (std::size_t n : {3, 4, 5}) EXPECT_EQ(isoperimetric_constant(halved_cube(n)).beta, Rational((std::int64_t)n - 1)) << n;
}

TEST(Mixing, ErrorsAndTrivialCase) {
  auto k = complete_bipartite(4, 4);
  auto a = spectrum(k);
  auto r = mixing_lemma(k, a, range(0, 4), range(4, 8));
  EXPECT_EQ(r.count, 16);
  EXPECT_NEAR(r.count, r.main, 1e-12);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(code_of([&] { mixing_lemma(k, a, {0, 5}, {4}); }), Errc::ColorViolation);
  EXPECT_EQ(code_of([&] { mixing_lemma(k, a, {0}, {1}); }), Errc::ColorViolation);
  auto p = path_graph(4);
  EXPECT_EQ(code_of([&] { mixing_lemma(p, spectrum(p), {0}, {1}); }), Errc::NotRegular);
  EXPECT_EQ(code_of([&] { mixing_lemma(k, a, {0}, {4}, 0); }), Errc::BadParameters);
  // two-step walks stay on one side
  auto r2 = mixing_lemma(k, a, {0, 1}, {2, 3}, 2);
  EXPECT_EQ(r2.count, 16);
}

TEST(Mixing, RandomQueriesAgainstDirectCount) {
  std::mt19937_64 rng(0x5eed);
  for (auto g : {incidence_graph(3, 5), incidence_graph(3, 7), paley_graph(13), paley_graph(17), petersen_graph()}) {
    auto a = spectrum(g);
    auto bp = bipartition(g);
    for (int t = 0; t < 100; ++t) {
      std::vector<Vertex> S, T;
      if (bp) {
        std::vector<Vertex> black, white;
        for (Vertex v = 0; v < g.n(); ++v) ((*bp)[v] == (*bp)[0] ? black : white).push_back(v);
        S = random_subset(black, rng), T = random_subset(white, rng);
      } else {
        S = random_subset(range(0, g.n()), rng), T = random_subset(range(0, g.n()), rng);
      }
      auto r = mixing_lemma(g, a, S, T);
      EXPECT_TRUE(r.pass) << g.name();
      double direct = edge_count_oracle(g, S, T);
      EXPECT_EQ(r.count, direct);
    }
  }
}

TEST(Mixing, SumProductWindows) {
  std::mt19937_64 rng(3);
  for (u64 q : {5, 7}) {
    auto P = projective_space(3, q);
    auto inc = incidence_projective(3, q);
    std::vector<Vertex> all;
    for (Vertex x = 0; x < q; ++x) all.push_back(x);
    for (int which : {0, 1})
      for (int t = 0; t < 10; ++t) {
        auto pick = [&] {
          auto s = random_subset(all, rng);
          if (s.empty()) s.push_back(1);
          return std::vector<u32>(s.begin(), s.end());
        };
        auto A = pick(), B = pick(), C = pick(), D = pick();
        auto w = sum_product_window(P, inc, which, A, B, C, D);
        EXPECT_TRUE(w.pass) << q << " " << which;
        EXPECT_EQ(w.count, w.direct);
      }
  }
}

TEST(Perturbation, Interlacing) {
  auto p = petersen_graph();
  for (Vertex v : {0u, 7u}) EXPECT_EQ(perturbation_checks(p, Perturbation::RemoveVertex, v).failures(), 0u);
  auto k5 = complete_graph(5);
  auto r = perturbation_checks(k5, Perturbation::RemoveEdge, 0, {{0, 1}});
  EXPECT_EQ(r.failures(), 0u);
  EXPECT_EQ(r.result.m(), 9u);
  // Petersen minus a perfect matching leaves two 5-cycles
  std::vector<Edge> matching;
  for (Vertex i = 0; i < 5; ++i) matching.emplace_back(i, i + 5);
  ASSERT_TRUE(std::all_of(matching.begin(), matching.end(), [&](Edge e) { return p.has_edge(e.first, e.second); }));
  auto m = perturbation_checks(p, Perturbation::RemoveSubgraph, 0, matching);
  EXPECT_EQ(m.failures(), 0u);
  EXPECT_EQ(component_count(m.result), 2);
  EXPECT_EQ(code_of([&] { perturbation_checks(k5, Perturbation::RemoveEdge, 0, {}); }), Errc::InvalidOperation);
  EXPECT_EQ(code_of([&] { perturbation_checks(p, Perturbation::RemoveEdge, 0, {{0, 2}}); }), Errc::InvalidOperation);
  std::mt19937_64 rng(9);
  for (auto& s : corpus_specs()) {
    auto g = build(s);
    if (g.n() < 3 || g.n() > 60) continue;
    Vertex v = (Vertex)(rng() % g.n());
    EXPECT_EQ(perturbation_checks(g, Perturbation::RemoveVertex, v).failures(), 0u) << s.id();
    auto e = g.edges()[rng() % g.m()];
    EXPECT_EQ(perturbation_checks(g, Perturbation::RemoveEdge, 0, {e}).failures(), 0u) << s.id();
  }
}

TEST(Hamiltonicity, CompareToCycle) {
  EXPECT_EQ(compare_to_cycle(petersen_graph()), (std::vector<std::size_t>{6, 7}));
  EXPECT_TRUE(compare_to_cycle(cube_graph(3)).empty());
  EXPECT_TRUE(compare_to_cycle(heawood_graph()).empty());
  EXPECT_EQ(code_of([] { compare_to_cycle(cycle_graph(6)); }), Errc::InvalidOperation);
}

TEST(MotzkinStraus, Examples) {
  auto k4 = complete_graph(4);
  auto u = motzkin_straus(k4, std::vector<double>(4, 0.25), 4);
  EXPECT_NEAR(u.value, 0.75, 1e-12);
  EXPECT_NEAR(u.bound, 0.75, 1e-12);
  EXPECT_TRUE(u.pass);
  auto p = petersen_graph();
  auto clique = maximum_clique(p);
  std::vector<double> f(10, 0);
  for (Vertex v : clique) f[v] = 1.0 / clique.size();
  auto t = motzkin_straus(p, f, clique_number(p));
  EXPECT_NEAR(t.value, 0.5, 1e-12);
  std::mt19937_64 rng(4);
  std::exponential_distribution<double> E;
  for (int k = 0; k < 100; ++k) {
    std::vector<double> w(10);
    double s = 0;
    for (auto& x : w) s += (x = E(rng));
    for (auto& x : w) x /= s;
    EXPECT_TRUE(motzkin_straus(p, w, 2).pass);
  }
  // uniform weights give the Turan edge bound
  for (auto& s : corpus_specs()) {
    auto g = build(s);
    if (g.n() > 64) continue;
    const double n = (double)g.n();
    auto r = motzkin_straus(g, std::vector<double>(g.n(), 1 / n), clique_number(g));
    EXPECT_TRUE(r.pass) << s.id();
    EXPECT_NEAR(r.value, 2.0 * g.m() / (n * n), 1e-12);
  }
  EXPECT_EQ(code_of([&] { motzkin_straus(k4, {0.5, 0.5, 0.5, -0.5}, 4); }), Errc::BadWeights);
  EXPECT_EQ(code_of([&] { motzkin_straus(k4, {0.5, 0.5}, 4); }), Errc::BadWeights);
  EXPECT_EQ(code_of([&] { motzkin_straus(k4, {0.5, 0.5, 0.5, 0.5}, 4); }), Errc::BadWeights);
}

TEST(MatrixPrinciples, RandomSuites) {
  std::mt19937_64 rng(0x5eed);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 9;
    auto M = random_symmetric(n, rng), N = random_symmetric(n, rng);
    EXPECT_LE(cauchy_violation(M), 1e-9);
    EXPECT_LE(weyl_violation(M, N), 1e-9);
    EXPECT_LE(aronszajn_violation(M, 1 + t % (n - 1)), 1e-9);
  }
  for (int t = 0; t < 5; ++t) EXPECT_LE(courant_fischer_violation(random_symmetric(8, rng), rng, 200), 1e-9);
  // a diagonal matrix with a large entry interlaces trivially
  Matrix M = Matrix::Identity(3, 3);
  M(0, 0) = 5;
  EXPECT_LE(cauchy_violation(M), 1e-12);
}

TEST(AlonBoppana, PaleyAndSmallDiameter) {
  // alpha_{k+1} >= 2 sqrt(d-1) cos(2 pi k / diam) for 2k <= diam, computed directly
  auto check = [](const Graph& g) {
    auto a = spectrum(g);
    const double d = (double)g.degree_max(), diam = (double)diameter(g);
    int seen = 0;
    for (int k = 1; 2 * k <= (int)diam; ++k, ++seen) {
      double c = 2 * std::sqrt(d - 1) * std::cos(2 * std::numbers::pi * k / diam);
      EXPECT_GE(a.desc(k + 1), c - 1e-9) << g.name() << " k=" << k;
    }
    return seen;
  };
  for (u64 q = 5; q <= 101; q += 4)
    if (nt::prime_power(q)) check(paley_graph(q));
  for (std::size_t k = 3; k <= 6; ++k) {
    auto g = small_diameter_graph(k);
    EXPECT_GT(check(g), 0);
    int seen = 0;
    for (auto& rec : audit_graph(g).records)
      if (rec.name.starts_with("alon_boppana")) {
        EXPECT_TRUE(rec.pass) << k << " " << rec.name;
        ++seen;
      }
    EXPECT_GT(seen, 0);
  }
}

TEST(StepFunction, RayleighIdentity) {
  std::mt19937_64 rng(5);
  for (auto g : {petersen_graph(), cube_graph(4), frucht_graph(), wheel_graph(6)})
    EXPECT_LE(detail::step_rayleigh_deviation(g, rng, 100), 1e-8);
}
