#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sgt/families.hpp"

namespace sgt {

// The three smallest sensible parameter choices of every family (one
// instance for the sporadic ones). Shared by the CLI `verify` run and the
// acceptance corpus.
inline std::vector<FamilySpec> corpus_specs() {
  using F = Family;
  auto p = [](F f, std::vector<i64> params, std::string tag = {}) { return FamilySpec{f, std::move(params), std::move(tag), {}, {}}; };
  auto grp = [](F f, std::vector<i64> group, std::vector<std::vector<i64>> S = {}) {
    return FamilySpec{f, {}, {}, std::move(group), std::move(S)};
  };
  std::vector<FamilySpec> v;
  for (i64 n : {2, 3, 4}) v.push_back(p(F::Complete, {n}));
  for (i64 n : {3, 4, 5}) v.push_back(p(F::Cycle, {n}));
  for (i64 n : {1, 2, 3}) v.push_back(p(F::Cube, {n}));
  for (i64 n : {2, 3, 4}) v.push_back(p(F::HalvedCube, {n}));
  v.push_back(p(F::DeckedCube, {2, 3}));
  v.push_back(p(F::DeckedCube, {3, 3}));
  v.push_back(p(F::DeckedCube, {3, 7}));
  v.push_back(p(F::CompleteBipartite, {1, 1}));
  v.push_back(p(F::CompleteBipartite, {1, 2}));
  v.push_back(p(F::CompleteBipartite, {2, 2}));
  for (i64 n : {2, 3, 4}) v.push_back(p(F::Path, {n}));
  for (i64 n : {1, 2, 3}) v.push_back(p(F::Star, {n}));
  for (i64 n : {3, 4, 5}) v.push_back(p(F::Wheel, {n}));
  for (i64 k : {1, 2, 3}) v.push_back(p(F::Windmill, {k}));
  v.push_back(p(F::Petersen, {}));
  for (std::string t : {"T", "Tt"})
    for (i64 R : {1, 2, 3}) v.push_back(p(F::Tree, {3, R}, t));
  for (std::string t : {"A3", "D4", "E6", "E7", "E8"}) v.push_back(p(F::ADE, {}, t));
  for (std::string t : {"A2", "D4", "E6", "E7", "E8"}) v.push_back(p(F::ExtendedADE, {}, t));
  v.push_back(grp(F::Cayley, {5}, {{1}, {-1}}));
  v.push_back(grp(F::Cayley, {6}, {{1}, {-1}, {3}}));
  v.push_back(grp(F::Cayley, {3, 3}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  v.push_back(grp(F::BiCayley, {3}, {{0}, {1}}));
  v.push_back(grp(F::BiCayley, {4}, {{0}, {1}}));
  v.push_back(grp(F::BiCayley, {7}, {{1}, {2}, {4}}));
  for (i64 q : {5, 9, 13}) v.push_back(p(F::Paley, {q}));
  for (i64 q : {3, 7, 11}) v.push_back(p(F::BiPaley, {q}));
  v.push_back(p(F::Incidence, {3, 2}));
  v.push_back(p(F::Incidence, {3, 3}));
  v.push_back(p(F::Incidence, {4, 2}));
  for (i64 q : {3, 4, 5}) v.push_back(p(F::SumProduct, {q}));
  for (i64 q : {3, 4, 5}) v.push_back(p(F::FullSumProduct, {q}));
  v.push_back(p(F::Shrikhande, {}));
  v.push_back(p(F::RookTwin, {}));
  for (i64 n : {1, 2, 3}) v.push_back(p(F::Andrasfai, {n}));
  v.push_back(p(F::Heawood, {}));
  v.push_back(p(F::TutteCoxeter, {}));
  v.push_back(p(F::Frucht, {}));
  v.push_back(grp(F::Machine, {2}));
  v.push_back(grp(F::Machine, {3}));
  v.push_back(grp(F::Machine, {4}));
  v.push_back(grp(F::Machine, {2, 2}));
  for (i64 k : {3, 4, 5}) v.push_back(p(F::SmallDiameterX, {k}));
  return v;
}

// families whose closed-form spectrum exists
inline bool has_closed_form(Family f) {
  switch (f) {
    case Family::Windmill:
    case Family::Tree:
    case Family::ADE:
    case Family::ExtendedADE:
    case Family::Andrasfai:
    case Family::Frucht:
    case Family::SmallDiameterX: return false;
    default: return true;
  }
}

}  // namespace sgt
