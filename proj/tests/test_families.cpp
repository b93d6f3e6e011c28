#include <gtest/gtest.h>

#include <fstream>

#include "sgt/families.hpp"
#include "sgt/isomorphism.hpp"

using namespace sgt;

namespace {

bool iso(const Graph& a, const Graph& b) {
  Caps caps;
  caps.iso = 64;
  return is_isomorphic(a, b, caps).isomorphic;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidOperation;  // sentinel: nothing thrown
}

Graph fixture(const std::string& name) {
  std::ifstream in(std::string(SGT_FIXTURES) + "/" + name + ".el");
  return parse_edge_list(in);
}

}  // namespace

TEST(Families, PaleySmallCases) {
  EXPECT_TRUE(iso(paley_graph(5), cycle_graph(5)));
  EXPECT_TRUE(iso(paley_graph(9), product(complete_graph(3), complete_graph(3))));
  for (u64 q : {5, 9, 13, 17, 25, 29}) {
    auto g = paley_graph(q);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.degree_max(), (q - 1) / 2);
    auto r = classify_regular(g);
    ASSERT_EQ(r.kind, RegularKind::StronglyRegular) << q;
    EXPECT_EQ(*r.srg, (SrgParams{(i64)q, (i64)(q - 1) / 2, (i64)(q - 5) / 4, (i64)(q - 1) / 4}));
  }
  EXPECT_EQ(code_of([] { paley_graph(7); }), Errc::BadParameters);
  EXPECT_EQ(code_of([] { bi_paley_graph(13); }), Errc::BadParameters);
}

TEST(Families, PaleyScalingSwitchesEdges) {
  for (u64 q : {5, 9, 13, 17}) {
    auto F = field_of_order(q);
    auto g = paley_graph(q);
    u32 eta = 0;
    for (u32 x = 1; x < q && !eta; ++x)
      if (F->sigma(x) == -1) eta = x;
    ASSERT_NE(eta, 0u);
    for (Vertex u = 0; u < q; ++u)
      for (Vertex v = u + 1; v < q; ++v)
        EXPECT_NE(g.has_edge(u, v), g.has_edge(F->mul(eta, u), F->mul(eta, v)));
  }
}

TEST(Families, BiPaleyHeawoodIncidence) {
  auto h = heawood_graph();
  EXPECT_TRUE(iso(bi_paley_graph(7), h));
  EXPECT_TRUE(iso(incidence_graph(3, 2), h));
  EXPECT_TRUE(iso(incidence_projective(3, 2), h));
  EXPECT_TRUE(iso(fixture("heawood"), h));
  auto r = classify_regular(bi_paley_graph(11));
  ASSERT_EQ(r.kind, RegularKind::Design);
  EXPECT_EQ(*r.design, (DesignParams{11, 5, 2, 2}));
  EXPECT_EQ(*r.design, bi_paley_params(11));
}

TEST(Families, IncidenceParameters) {
  for (auto [n, q] : std::vector<std::pair<std::size_t, u64>>{{3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {5, 2}}) {
    auto g = incidence_graph(n, q);
    auto p = incidence_params((i64)n, (i64)q);
    EXPECT_EQ((i64)g.n(), 2 * p.m);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ((i64)g.degree_max(), p.d);
    auto r = classify_regular(g);
    ASSERT_EQ(r.kind, RegularKind::Design);
    EXPECT_EQ(*r.design, p);
    EXPECT_EQ(p.c1 * (p.m - 1), p.d * (p.d - 1));
    if (n == 3) {
      EXPECT_EQ(p.m, (i64)(q * q + q + 1));
      EXPECT_EQ(p.d, (i64)q + 1);
      EXPECT_EQ(girth(g), 6);
    }
  }
  // both models agree, with black vertices first in each
  EXPECT_TRUE(iso(incidence_graph(3, 3), incidence_projective(3, 3)));
  EXPECT_TRUE(iso(incidence_graph(4, 2), incidence_projective(4, 2)));
  EXPECT_EQ(code_of([] { incidence_graph(2, 3); }), Errc::BadParameters);
}

TEST(Families, ProjectiveOracle) {
  // point-hyperplane incidence built straight from the definition
  auto P = projective_space(3, 3);
  ASSERT_EQ(P.points.size(), 13u);
  std::vector<Edge> e;
  for (Vertex i = 0; i < 13; ++i)
    for (Vertex j = 0; j < 13; ++j) {
      u32 s = 0;
      for (std::size_t k = 0; k < 3; ++k) s = P.F->add(s, P.F->mul(P.points[i][k], P.points[j][k]));
      if (s == 0) e.emplace_back(i, 13 + j);
    }
  EXPECT_EQ(Graph(26, e), incidence_projective(3, 3));
}

TEST(Families, DeterminationSeparatesIsospectralPairs) {
  EXPECT_TRUE(bp_determination(bi_paley_graph(11)));
  EXPECT_TRUE(bp_determination(bi_paley_graph(19)));
  EXPECT_FALSE(bp_determination(incidence_graph(3, 2)));
  EXPECT_FALSE(bp_determination(incidence_graph(4, 2)));
  EXPECT_FALSE(bp_determination(bi_paley_graph(7)));
  EXPECT_EQ(code_of([] { bp_determination(tutte_coxeter_graph()); }), Errc::NotDesign);
}

TEST(Families, MersenneGate) {
  auto hits = mersenne_gate_scan(13);
  std::vector<std::pair<i64, i64>> want{{7, 3}, {31, 5}, {127, 7}, {8191, 13}};
  EXPECT_EQ(hits, want);
  // and the matching pair is isospectral but told apart by determination
  EXPECT_EQ(bi_paley_params(31), incidence_params(5, 2));
  EXPECT_TRUE(bp_determination(bi_paley_graph(31)));
  EXPECT_FALSE(bp_determination(incidence_graph(5, 2)));
}

TEST(Families, CayleyExamples) {
  for (i64 n : {3, 5, 8}) EXPECT_TRUE(iso(cayley(AbelianGroup({n}), {{1}, {-1}}), cycle_graph(n)));
  EXPECT_TRUE(iso(cayley(AbelianGroup({2, 2, 2, 2}), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                  cube_graph(4)));
  AbelianGroup Z44({4, 4});
  auto shr = cayley(Z44, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  EXPECT_TRUE(iso(shr, shrikhande_graph()));
  EXPECT_TRUE(iso(shr, fixture("shrikhande")));
  std::vector<std::vector<i64>> S1;
  for (i64 s = 1; s < 4; ++s) S1.push_back({s, 0}), S1.push_back({0, s});
  EXPECT_TRUE(iso(cayley(Z44, S1), rook_twin_graph()));
  EXPECT_TRUE(iso(bi_cayley(AbelianGroup({7}), {{1}, {2}, {4}}), fixture("heawood")));

  EXPECT_EQ(code_of([] { cayley(AbelianGroup({5}), {{1}}); }), Errc::NotSymmetric);
  EXPECT_EQ(code_of([] { cayley(AbelianGroup({5}), {{0}, {1}, {4}}); }), Errc::ContainsIdentity);
  EXPECT_EQ(code_of([] { cayley(AbelianGroup({6}), {{2}, {4}}); }), Errc::NotGenerating);
  EXPECT_EQ(code_of([] { bi_cayley(AbelianGroup({6}), {{0}, {2}}); }), Errc::NotGenerating);
}

TEST(Families, CayleyTranslationsAreAutomorphisms) {
  AbelianGroup G({3, 6});
  auto g = cayley(G, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 3}, {-1, 3}});
  EXPECT_EQ(g.degree_max(), 6u);
  EXPECT_TRUE(g.is_regular());
  for (Vertex h = 0; h < G.size(); ++h) {
    std::vector<Vertex> m(G.size());
    for (Vertex x = 0; x < G.size(); ++x) m[x] = G.add(x, h);
    EXPECT_TRUE(is_isomorphism(g, g, m));
  }
}

TEST(Families, MachinePair) {
  auto a = machine_graph(AbelianGroup({4})), b = machine_graph(AbelianGroup({2, 2}));
  SrgParams want{16, 9, 4, 6};
  EXPECT_EQ(*classify_regular(a).srg, want);
  EXPECT_EQ(*classify_regular(b).srg, want);
  EXPECT_FALSE(iso(a, b));
  EXPECT_NE(AbelianGroup({4}).order_two_count(), AbelianGroup({2, 2}).order_two_count());
  EXPECT_EQ(AbelianGroup({4}).order_two_count(), 1u);
  EXPECT_EQ(AbelianGroup({2, 2}).order_two_count(), 3u);
  for (i64 n : {3, 5}) {
    auto r = classify_regular(machine_graph(AbelianGroup({n})));
    EXPECT_EQ(*r.srg, (SrgParams{n * n, 3 * n - 3, n, 6}));
  }
}

TEST(Families, Classifications) {
  EXPECT_EQ(*classify_regular(petersen_graph()).srg, (SrgParams{10, 3, 0, 1}));
  EXPECT_EQ(*classify_regular(shrikhande_graph()).srg, (SrgParams{16, 6, 2, 2}));
  EXPECT_EQ(*classify_regular(rook_twin_graph()).srg, (SrgParams{16, 6, 2, 2}));
  auto tc = classify_regular(tutte_coxeter_graph());
  ASSERT_EQ(tc.kind, RegularKind::PartialDesign);
  EXPECT_EQ(*tc.design, (DesignParams{15, 3, 0, 1}));
  auto c1 = c1_graph(tutte_coxeter_graph());
  EXPECT_EQ(c1.n(), 15u);
  EXPECT_TRUE(c1.is_regular());
  EXPECT_EQ((i64)c1.degree_max(), c1_graph_degree(*tc.design));
  EXPECT_EQ(c1.degree_max(), 8u);
  EXPECT_EQ(*classify_regular(c1).srg, (SrgParams{15, 8, 4, 4}));
  EXPECT_TRUE(iso(c1, line_graph(complete_graph(6))));
  EXPECT_EQ(classify_regular(complete_graph(5)).kind, RegularKind::NotSR);
  EXPECT_EQ(code_of([] { classify_regular(path_graph(4)); }), Errc::NotRegular);
  EXPECT_EQ(code_of([] { c1_graph(petersen_graph()); }), Errc::NotPartialDesign);
  EXPECT_EQ(code_of([] { c1_graph(heawood_graph()); }), Errc::NotPartialDesign);
}

TEST(Families, SumProduct) {
  for (u64 q : {3, 4, 5, 7}) {
    auto sp = sum_product_graph(q, false), fsp = sum_product_graph(q, true);
    EXPECT_EQ(sp.degree_max(), q - 1);
    EXPECT_TRUE(sp.is_regular());
    EXPECT_EQ(fsp.degree_max(), q);
    EXPECT_TRUE(fsp.is_regular());
    auto r = classify_regular(sp);
    ASSERT_EQ(r.kind, RegularKind::PartialDesign) << q;
    EXPECT_TRUE(iso(c1_graph(sp), product(complete_graph(q), complete_graph(q - 1))));
    auto rf = classify_regular(fsp);
    ASSERT_EQ(rf.kind, RegularKind::PartialDesign) << q;
    auto c = c1_graph(fsp);
    EXPECT_EQ(component_count(c), (int)q);
    Graph copies = complete_graph(q);
    for (u64 i = 1; i < q; ++i) copies = disjoint_union(copies, complete_graph(q));
    EXPECT_TRUE(iso(c, copies));
  }
}

TEST(Families, SmallFamilies) {
  EXPECT_EQ(star_graph(4).n(), 5u);
  EXPECT_EQ(star_graph(4).degree_max(), 4u);
  EXPECT_EQ(wheel_graph(5).degree(5), 5u);
  EXPECT_EQ(windmill_graph(3).n(), 7u);
  EXPECT_TRUE(iso(complete_bipartite(3, 3), fixture("heawood")) == false);
  EXPECT_EQ(halved_cube(4).n(), 8u);
  EXPECT_TRUE(iso(halved_cube(3), complete_graph(4)));
  EXPECT_TRUE(iso(halved_cube(4), complement(disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                                                            disjoint_union(complete_graph(2), complete_graph(2))))));
  EXPECT_EQ(code_of([] { decked_cube(3, 1); }), Errc::BadParameters);
}

TEST(Families, DeckedCube) {
  for (std::size_t n : {3, 4})
    for (u64 a = 3; a < (1u << n); ++a) {
      if (std::popcount(a) < 2) continue;
      auto g = decked_cube(n, a);
      EXPECT_EQ(is_bipartite(g), std::popcount(a) % 2 == 1) << n << " " << a;
      if (std::popcount(a) % 2 == 0) EXPECT_TRUE(iso(bipartite_double(g), cube_graph(n + 1))) << n << " " << a;
    }
}

TEST(Families, Andrasfai) {
  for (std::size_t n : {3, 4, 5}) {
    auto g = andrasfai_graph(n);
    EXPECT_EQ(g.n(), 3 * n - 1);
    EXPECT_EQ(diameter(g), 2);
    EXPECT_EQ(girth(g), 4);
    EXPECT_EQ(chromatic_number(g), 3);
    EXPECT_EQ(independence_number(g), (int)n);
  }
}

TEST(Families, Sporadic) {
  auto tc = tutte_coxeter_graph();
  EXPECT_EQ(tc.n(), 30u);
  EXPECT_EQ(diameter(tc), 4);
  EXPECT_EQ(girth(tc), 8);
  EXPECT_TRUE(iso(tc, fixture("tutte_coxeter")));
  EXPECT_EQ(count_automorphisms(frucht_graph()), 1u);
  EXPECT_TRUE(frucht_graph().is_regular());
  EXPECT_EQ(frucht_graph().degree_max(), 3u);
  for (std::size_t k : {3, 4, 5, 6}) {
    auto g = small_diameter_graph(k);
    EXPECT_EQ(g.n(), 3 * (std::size_t(1) << k) - 2);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.degree_max(), 3u);
    EXPECT_LE(diameter(g), 2 * (int)k);
  }
}

TEST(Families, TreesAndADE) {
  // T_{d,R}: root of degree d-1; tilde: root of degree d
  EXPECT_EQ(radial_tree(3, 2, true).n(), 10u);
  EXPECT_EQ(radial_tree(3, 2, false).n(), 7u);
  for (auto nm : {"A4", "D5", "E6", "E7", "E8"}) {
    auto g = ade_graph(nm);
    EXPECT_EQ(g.m() + 1, g.n());
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_EQ(ade_graph("E8").n(), 8u);
  EXPECT_EQ(extended_ade_graph("E8").n(), 9u);
  EXPECT_TRUE(iso(extended_ade_graph("A5"), cycle_graph(6)));
  EXPECT_EQ(code_of([] { ade_graph("E9"); }), Errc::BadParameters);
}

TEST(Families, EllipticSurrogate) {
  // every square-free monic cubic takes a non-zero non-square value
  for (u64 q : {11, 13}) {
    auto F = field_of_order(q);
    for (u32 a = 0; a < q; ++a)
      for (u32 b = 0; b < q; ++b)
        for (u32 c = 0; c < q; ++c) {
          auto f = [&](u32 x) { return F->add(F->add(F->mul(F->mul(x, x), x), F->mul(a, F->mul(x, x))), F->add(F->mul(b, x), c)); };
          // square-free: no common root with the derivative
          bool repeated = false;
          for (u32 x = 0; x < q; ++x) {
            u32 d = F->add(F->add(F->mul(3, F->mul(x, x)), F->mul(F->mul(2, a), x)), b);
            if (f(x) == 0 && d == 0) repeated = true;
          }
          if (repeated) continue;
          bool found = false;
          for (u32 x = 0; x < q && !found; ++x) found = F->sigma(f(x)) == -1;
          EXPECT_TRUE(found) << q << ": " << a << " " << b << " " << c;
        }
  }
}

TEST(Families, ParseAndBuild) {
  EXPECT_EQ(build(parse_family({"paley", "13"})).m(), 39u);
  EXPECT_TRUE(iso(build(parse_family({"cayley", "4x4", "1,0;-1,0;0,1;0,-1;1,1;-1,-1"})), shrikhande_graph()));
  EXPECT_EQ(build(parse_family({"ade", "E7"})).n(), 7u);
  EXPECT_FALSE(parse_family({"incidence", "3", "4"}).id().empty());
  EXPECT_EQ(code_of([] { parse_family({"nope"}); }), Errc::BadParameters);
  EXPECT_EQ(code_of([] { parse_family({"paley", "x"}); }), Errc::BadParameters);
  EXPECT_EQ(code_of([] { build(parse_family({"paley"})); }), Errc::BadParameters);
}
