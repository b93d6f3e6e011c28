#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sgt/invariants.hpp"

namespace sgt {

namespace detail {

// Colour refinement run on both graphs at once so that colours are comparable.
inline std::pair<std::vector<int>, std::vector<int>> refine_pair(const Graph& a, const Graph& b) {
  const std::size_t na = a.n();
  auto nb_of = [&](std::size_t x) -> const std::vector<Vertex>& {
    return x < na ? a.neighbors((Vertex)x) : b.neighbors((Vertex)(x - na));
  };
  auto off = [&](std::size_t x) { return x < na ? 0 : na; };
  std::vector<int> col(na + b.n());
  for (std::size_t x = 0; x < col.size(); ++x) col[x] = (int)nb_of(x).size();
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> nxt(col.size());
    for (std::size_t x = 0; x < col.size(); ++x) {
      std::vector<int> sig{col[x]};
      for (Vertex w : nb_of(x)) sig.push_back(col[w + off(x)]);
      std::sort(sig.begin() + 1, sig.end());
      auto it = ids.emplace(std::move(sig), (int)ids.size()).first;
      nxt[x] = it->second;
    }
    col = std::move(nxt);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::vector<int>(col.begin(), col.begin() + na), std::vector<int>(col.begin() + na, col.end())};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::size_t limit) : a_(a), b_(b), limit_(limit) {
    std::tie(ca_, cb_) = refine_pair(a, b);
    // BFS order keeps each new vertex adjacent to mapped ones where possible
    std::vector<char> seen(a.n(), 0);
    for (Vertex s = 0; s < a.n(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::vector<Vertex> q{s};
      for (std::size_t h = 0; h < q.size(); ++h) {
        order_.push_back(q[h]);
        for (Vertex w : a.neighbors(q[h]))
          if (!seen[w]) seen[w] = 1, q.push_back(w);
      }
    }
    map_.assign(a.n(), kNone);
    used_.assign(b.n(), 0);
  }

  bool histograms_match() const {
    auto x = ca_, y = cb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  void run() {
    if (a_.n() != b_.n() || a_.m() != b_.m() || !histograms_match()) return;
    extend(0);
  }

  std::size_t found() const { return found_; }
  const std::vector<Vertex>& first() const { return first_; }

 private:
  static constexpr Vertex kNone = ~Vertex(0);

  bool consistent(Vertex u, Vertex x) const {
    for (std::size_t i = 0; i < depth_; ++i) {
      Vertex w = order_[i];
      if (a_.has_edge(u, w) != b_.has_edge(x, map_[w])) return false;
    }
    return true;
  }

  void extend(std::size_t k) {
    if (found_ >= limit_) return;
    if (k == order_.size()) {
      if (found_ == 0) first_ = map_;
      ++found_;
      return;
    }
    Vertex u = order_[k];
    depth_ = k;
    for (Vertex x = 0; x < b_.n(); ++x) {
      if (used_[x] || cb_[x] != ca_[u] || !consistent(u, x)) continue;
      map_[u] = x;
      used_[x] = 1;
      extend(k + 1);
      depth_ = k;
      used_[x] = 0;
      map_[u] = kNone;
      if (found_ >= limit_) return;
    }
  }

  const Graph &a_, &b_;
  std::size_t limit_;
  std::vector<int> ca_, cb_;
  std::vector<Vertex> order_, map_, first_;
  std::vector<char> used_;
  std::size_t depth_ = 0, found_ = 0;
};

}  // namespace detail

struct IsoResult {
  bool isomorphic = false;
  std::vector<Vertex> mapping;  // mapping[v of G] = vertex of H
};

inline IsoResult is_isomorphic(const Graph& g, const Graph& h, const Caps& caps = {}) {
  if (g.n() > caps.iso || h.n() > caps.iso) fail(Errc::CapExceeded, "isomorphism search capped at n=" + std::to_string(caps.iso));
  detail::IsoSearch s(g, h, 1);
  s.run();
  IsoResult r;
  r.isomorphic = s.found() > 0;
  if (r.isomorphic) r.mapping = s.first();
  return r;
}

// number of automorphisms, stopping at limit
inline std::size_t count_automorphisms(const Graph& g, std::size_t limit = 1u << 20, const Caps& caps = {}) {
  if (g.n() > caps.iso) fail(Errc::CapExceeded, "automorphism search capped at n=" + std::to_string(caps.iso));
  detail::IsoSearch s(g, g, limit);
  s.run();
  return s.found();
}

inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& m) {
  if (g.n() != h.n() || g.m() != h.m() || m.size() != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(m[u], m[v])) return false;
  return true;
}

}  // namespace sgt
