#pragma once

#include <bit>
#include <chrono>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct Rational {
  std::int64_t num = 0, den = 1;
  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  double value() const { return (double)num / (double)den; }
  bool operator<(const Rational& o) const { return (__int128)num * o.den < (__int128)o.num * den; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

struct Caps {
  std::size_t chi = 64;
  std::size_t iota = 64;
  std::size_t beta = 24;
  std::size_t iso = 32;
  double budget_seconds = 10.0;
};

// ---- connectivity and distances ----

inline std::vector<int> bfs_distances(const Graph& g, Vertex s) {
  std::vector<int> d(g.n(), -1);
  std::vector<Vertex> q{s};
  d[s] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : g.neighbors(q[h]))
      if (d[w] < 0) {
        d[w] = d[q[h]] + 1;
        q.push_back(w);
      }
  return d;
}

inline std::vector<int> components(const Graph& g) {
  std::vector<int> c(g.n(), -1);
  int k = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (c[s] >= 0) continue;
    std::vector<Vertex> q{s};
    c[s] = k;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (Vertex w : g.neighbors(q[h]))
        if (c[w] < 0) {
          c[w] = k;
          q.push_back(w);
        }
    ++k;
  }
  return c;
}

inline int component_count(const Graph& g) {
  auto c = components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

inline bool is_connected(const Graph& g) { return g.n() > 0 && component_count(g) == 1; }

inline int diameter(const Graph& g) {
  if (!is_connected(g)) fail(Errc::Disconnected, "diameter of a disconnected graph");
  int best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    auto d = bfs_distances(g, s);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

// shortest cycle length, kInfinity for forests
inline int girth(const Graph& g) {
  int best = kInfinity;
  std::vector<int> d(g.n());
  std::vector<long> parent(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    std::fill(d.begin(), d.end(), -1);
    d[s] = 0;
    parent[s] = -1;
    std::vector<Vertex> q{s};
    for (std::size_t h = 0; h < q.size(); ++h) {
      Vertex u = q[h];
      if (2 * d[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if ((long)w != parent[u]) {
          best = std::min(best, d[u] + d[w] + 1);
        }
      }
    }
  }
  return best;
}

// 0/1 colouring when bipartite
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> c(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (c[s] >= 0) continue;
    c[s] = 0;
    std::vector<Vertex> q{s};
    for (std::size_t h = 0; h < q.size(); ++h)
      for (Vertex w : g.neighbors(q[h])) {
        if (c[w] < 0) {
          c[w] = 1 - c[q[h]];
          q.push_back(w);
        } else if (c[w] == c[q[h]]) {
          return std::nullopt;
        }
      }
  }
  return c;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline std::size_t triangle_count(const Graph& g) {
  std::size_t t = 0;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v))
        if (w > v && g.has_edge(u, w)) ++t;
    }
  return t;
}

inline std::size_t common_neighbours(const Graph& g, Vertex u, Vertex v) {
  const auto &a = g.neighbors(u), &b = g.neighbors(v);
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else ++c, ++i, ++j;
  }
  return c;
}

// ---- cliques, independent sets, colourings ----

namespace detail {

using Mask = std::uint64_t;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))) {}
  void tick() {
    if ((++n_ & 1023) == 0 && std::chrono::steady_clock::now() > end_)
      fail(Errc::CapExceeded, "time budget exhausted");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::uint64_t n_ = 0;
};

// Maximum clique with greedy-colouring bounds.
class MaxClique {
 public:
  MaxClique(const std::vector<Mask>& adj, Deadline& dl) : adj_(adj), dl_(dl) {}
  Mask run() {
    Mask all = adj_.size() == 64 ? ~Mask(0) : ((Mask(1) << adj_.size()) - 1);
    expand(0, all);
    return best_;
  }

 private:
  void expand(Mask cur, Mask cand) {
    dl_.tick();
    if (!cand) {
      if (std::popcount(cur) > std::popcount(best_)) best_ = cur;
      return;
    }
    // colour classes give an upper bound on clique extension
    std::vector<int> order, bound;
    Mask rest = cand;
    int colour = 0;
    while (rest) {
      ++colour;
      Mask avail = rest;
      while (avail) {
        int v = std::countr_zero(avail);
        avail &= ~(Mask(1) << v) & ~adj_[v];
        rest &= ~(Mask(1) << v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (std::popcount(cur) + bound[i] <= std::popcount(best_)) return;
      int v = order[i];
      expand(cur | (Mask(1) << v), cand & adj_[v]);
      cand &= ~(Mask(1) << v);
    }
  }
  const std::vector<Mask>& adj_;
  Deadline& dl_;
  Mask best_ = 0;
};

inline std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> v;
  while (m) {
    v.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return v;
}

}  // namespace detail

inline std::vector<Vertex> maximum_clique(const Graph& g, const Caps& caps = {}) {
  if (g.n() > std::min<std::size_t>(caps.iota, 64)) fail(Errc::CapExceeded, "clique search capped at n=" + std::to_string(caps.iota));
  if (g.n() == 0) return {};
  detail::Deadline dl(caps.budget_seconds);
  auto adj = g.masks();
  return detail::mask_vertices(detail::MaxClique(adj, dl).run());
}

inline std::vector<Vertex> maximum_independent_set(const Graph& g, const Caps& caps = {}) {
  if (g.n() > std::min<std::size_t>(caps.iota, 64)) fail(Errc::CapExceeded, "independence search capped at n=" + std::to_string(caps.iota));
  if (g.n() == 0) return {};
  detail::Deadline dl(caps.budget_seconds);
  auto adj = g.masks();
  detail::Mask all = g.n() == 64 ? ~detail::Mask(0) : ((detail::Mask(1) << g.n()) - 1);
  for (Vertex v = 0; v < g.n(); ++v) adj[v] = ~adj[v] & all & ~(detail::Mask(1) << v);
  return detail::mask_vertices(detail::MaxClique(adj, dl).run());
}

inline int clique_number(const Graph& g, const Caps& caps = {}) { return (int)maximum_clique(g, caps).size(); }
inline int independence_number(const Graph& g, const Caps& caps = {}) { return (int)maximum_independent_set(g, caps).size(); }

namespace detail {

// Exact DSATUR branch and bound.
class Colouring {
 public:
  Colouring(const Graph& g, int lower, Deadline& dl) : g_(g), lower_(lower), dl_(dl), col_(g.n(), -1) {}

  int run(std::vector<int>& best_col) {
    best_ = (int)g_.n() + 1;
    // greedy DSATUR upper bound first
    greedy();
    if (best_ > lower_) search(0, 0);
    best_col = best_col_;
    return best_;
  }

 private:
  int pick() const {
    int best = -1, bs = -1, bd = -1;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (col_[v] >= 0) continue;
      std::uint64_t seen = 0;
      int deg = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (col_[w] >= 0) seen |= std::uint64_t(1) << col_[w];
        else ++deg;
      }
      int s = std::popcount(seen);
      if (s > bs || (s == bs && deg > bd)) best = (int)v, bs = s, bd = deg;
    }
    return best;
  }

  bool allowed(Vertex v, int c) const {
    for (Vertex w : g_.neighbors(v))
      if (col_[w] == c) return false;
    return true;
  }

  void greedy() {
    int used = 0;
    for (std::size_t k = 0; k < g_.n(); ++k) {
      int v = pick();
      int c = 0;
      while (!allowed(v, c)) ++c;
      col_[v] = c;
      used = std::max(used, c + 1);
    }
    best_ = used;
    best_col_ = col_;
    std::fill(col_.begin(), col_.end(), -1);
  }

  void search(std::size_t coloured, int used) {
    dl_.tick();
    if (used >= best_) return;
    if (coloured == g_.n()) {
      best_ = used;
      best_col_ = col_;
      return;
    }
    int v = pick();
    for (int c = 0; c <= used && c < best_ - 1; ++c) {
      if (!allowed(v, c)) continue;
      col_[v] = c;
      search(coloured + 1, std::max(used, c + 1));
      col_[v] = -1;
      if (best_ <= lower_) return;
    }
  }

  const Graph& g_;
  int lower_;
  Deadline& dl_;
  std::vector<int> col_, best_col_;
  int best_ = 0;
};

}  // namespace detail

struct ColouringResult {
  int chi;
  std::vector<int> colours;
};

inline ColouringResult chromatic_colouring(const Graph& g, const Caps& caps = {}) {
  if (g.n() > std::min<std::size_t>(caps.chi, 64)) fail(Errc::CapExceeded, "chromatic search capped at n=" + std::to_string(caps.chi));
  if (g.n() == 0) return {0, {}};
  int lower = clique_number(g, caps);
  detail::Deadline dl(caps.budget_seconds);
  ColouringResult r;
  r.chi = detail::Colouring(g, lower, dl).run(r.colours);
  return r;
}

inline int chromatic_number(const Graph& g, const Caps& caps = {}) { return chromatic_colouring(g, caps).chi; }

// ---- isoperimetric constant ----

struct Isoperimetric {
  Rational beta;
  std::vector<Vertex> witness;
};

// exact min |dS|/|S| over 0 < |S| <= n/2, by a Gray-code sweep
inline Isoperimetric isoperimetric_constant(const Graph& g, const Caps& caps = {}) {
  const std::size_t n = g.n();
  if (n > std::min<std::size_t>(caps.beta, 30)) fail(Errc::CapExceeded, "isoperimetric sweep capped at n=" + std::to_string(caps.beta));
  if (!is_connected(g)) fail(Errc::Disconnected, "isoperimetric constant of a disconnected graph");
  if (n < 2) fail(Errc::BadParameters, "need at least two vertices");
  auto adj = g.masks();
  std::uint64_t S = 0;
  std::int64_t boundary = 0, size = 0;
  std::int64_t bb = -1, bs = 1;
  std::uint64_t best = 0;
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    int v = std::countr_zero(i);
    std::uint64_t bit = std::uint64_t(1) << v;
    std::int64_t inside = std::popcount(adj[v] & S);
    std::int64_t deg = std::popcount(adj[v]);
    if (S & bit) {
      S &= ~bit;
      --size;
      boundary -= deg - 2 * inside;
    } else {
      S |= bit;
      ++size;
      boundary += deg - 2 * inside;
    }
    if (size == 0 || 2 * size > (std::int64_t)n) continue;
    if (bb < 0 || (__int128)boundary * bs < (__int128)bb * size) {
      bb = boundary;
      bs = size;
      best = S;
    }
  }
  return {Rational(bb, bs), detail::mask_vertices(best)};
}

inline std::int64_t boundary_size(const Graph& g, const std::vector<Vertex>& S) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : S) in[v] = 1;
  std::int64_t b = 0;
  for (Vertex v : S)
    for (Vertex w : g.neighbors(v))
      if (!in[w]) ++b;
  return b;
}

// ---- friendship and universality ----

struct FriendshipResult {
  bool windmill = false;
  int blades = 0;
  Vertex u = 0, v = 0;         // violating pair when not a windmill
  std::size_t common = 0;
};

inline FriendshipResult friendship_check(const Graph& g) {
  FriendshipResult r;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      auto c = common_neighbours(g, u, v);
      if (c != 1) {
        r.u = u, r.v = v, r.common = c;
        return r;
      }
    }
  r.windmill = true;
  r.blades = (int)(g.n() - 1) / 2;
  return r;
}

namespace detail {

inline int pair_bit(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  int b = 0;
  for (int a = 0; a < i; ++a) b += k - 1 - a;
  return b + (j - i - 1);
}

// canonical code for each graph on k labelled vertices: min over relabelings
inline std::vector<int> small_graph_classes(int k, int& nclasses) {
  const int bits = k * (k - 1) / 2;
  std::vector<int> canon(1 << bits);
  std::vector<int> perm(k);
  for (int m = 0; m < (1 << bits); ++m) {
    std::iota(perm.begin(), perm.end(), 0);
    int best = 1 << bits;
    do {
      int code = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (m >> pair_bit(i, j, k) & 1) code |= 1 << pair_bit(perm[i], perm[j], k);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon[m] = best;
  }
  std::vector<int> ids(1 << bits, -1), out(1 << bits);
  nclasses = 0;
  for (int m = 0; m < (1 << bits); ++m) {
    if (ids[canon[m]] < 0) ids[canon[m]] = nclasses++;
    out[m] = ids[canon[m]];
  }
  return out;
}

}  // namespace detail

struct UniversalityResult {
  bool all = false;
  int found = 0;
  int classes = 0;
};

// every isomorphism class on k <= 4 vertices occurs as an induced subgraph
inline UniversalityResult contains_all_small_graphs(const Graph& g, int k) {
  if (k < 1 || k > 4) fail(Errc::CapExceeded, "induced-subgraph scan supports k <= 4");
  UniversalityResult r;
  auto cls = detail::small_graph_classes(k, r.classes);
  std::vector<char> seen(r.classes, 0);
  const std::size_t n = g.n();
  if (n < (std::size_t)k) return r;
  std::vector<Vertex> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    int m = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (g.has_edge(idx[i], idx[j])) m |= 1 << detail::pair_bit(i, j, k);
    if (!seen[cls[m]]) {
      seen[cls[m]] = 1;
      if (++r.found == r.classes) {
        r.all = true;
        return r;
      }
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return r;
}

// ---- report ----

struct InvariantReport {
  std::size_t n = 0, edge_count = 0, degree_min = 0, degree_max = 0;
  Rational degree_avg;
  bool connected = false;
  std::optional<int> diameter;
  int girth = kInfinity;
  std::optional<int> chi, iota, omega;
  std::optional<Isoperimetric> beta;
  std::optional<std::vector<int>> bipartition;
  std::vector<std::string> skipped;  // invariants not computed, with reason
};

inline InvariantReport compute_invariants(const Graph& g, const Caps& caps = {}) {
  InvariantReport r;
  r.n = g.n();
  r.edge_count = g.m();
  r.degree_min = g.degree_min();
  r.degree_max = g.degree_max();
  r.degree_avg = Rational(2 * (std::int64_t)g.m(), (std::int64_t)g.n());
  r.connected = is_connected(g);
  if (r.connected) r.diameter = diameter(g);
  else r.skipped.push_back("diameter: disconnected");
  r.girth = girth(g);
  r.bipartition = bipartition(g);
  auto guard = [&](const char* what, auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      r.skipped.push_back(std::string(what) + ": " + e.what());
    }
  };
  guard("chi", [&] { r.chi = chromatic_number(g, caps); });
  guard("iota", [&] { r.iota = independence_number(g, caps); });
  guard("omega", [&] { r.omega = clique_number(g, caps); });
  if (r.connected) guard("beta", [&] { r.beta = isoperimetric_constant(g, caps); });
  else r.skipped.push_back("beta: disconnected");
  return r;
}

}  // namespace sgt
