#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgt/error.hpp"

namespace sgt {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph, immutable once built.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, const std::vector<Edge>& edges, std::string name = {}) : adj_(n), name_(std::move(name)) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) fail(Errc::IndexOutOfRange, "edge endpoint out of range");
      if (u == v) fail(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    for (auto& a : adj_) m_ += a.size();
    m_ /= 2;
  }

  static Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t degree_min() const {
    std::size_t d = n() ? adj_[0].size() : 0;
    for (auto& a : adj_) d = std::min(d, a.size());
    return d;
  }
  std::size_t degree_max() const {
    std::size_t d = 0;
    for (auto& a : adj_) d = std::max(d, a.size());
    return d;
  }
  bool is_regular() const { return degree_min() == degree_max(); }

  const std::string& name() const { return name_; }
  Graph& set_name(std::string s) {
    name_ = std::move(s);
    return *this;
  }
  const std::vector<std::string>& labels() const { return labels_; }
  Graph& set_labels(std::vector<std::string> l) {
    if (!l.empty() && l.size() != n()) fail(Errc::IndexOutOfRange, "label count differs from vertex count");
    labels_ = std::move(l);
    return *this;
  }

  // bit rows, only for n <= 64
  std::vector<std::uint64_t> masks() const {
    if (n() > 64) fail(Errc::CapExceeded, "bit rows need n <= 64");
    std::vector<std::uint64_t> r(n(), 0);
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : adj_[u]) r[u] |= std::uint64_t(1) << v;
    return r;
  }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
};

// ---- edge-list text: "n m" then m lines "u v" ----

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph parse_edge_list(std::istream& in) {
  std::size_t n, m;
  if (!(in >> n >> m)) fail(Errc::BadParameters, "edge list header 'n m' missing");
  std::vector<Edge> e;
  e.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) fail(Errc::BadParameters, "edge list truncated at edge " + std::to_string(i));
    if (u < 0 || v < 0) fail(Errc::IndexOutOfRange, "negative vertex id");
    e.emplace_back((Vertex)u, (Vertex)v);
  }
  return Graph(n, e);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return parse_edge_list(is);
}

inline std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (!g.labels().empty()) os << " [label=\"" << g.labels()[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

// ---- structure operations ----

// (u,v) ~ (u',v') iff u = u' and v ~ v', or v = v' and u ~ u'
inline Graph product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.n();
  std::vector<Edge> e;
  for (Vertex u = 0; u < a.n(); ++u)
    for (Vertex v = 0; v < nb; ++v) {
      Vertex x = u * nb + v;
      for (Vertex w : b.neighbors(v))
        if (v < w) e.emplace_back(x, u * nb + w);
      for (Vertex w : a.neighbors(u))
        if (u < w) e.emplace_back(x, w * nb + v);
    }
  return Graph(a.n() * nb, e, a.name() + "x" + b.name());
}

// black copy 0..n-1, white copy n..2n-1, u_black ~ v_white iff u ~ v
inline Graph bipartite_double(const Graph& g) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    e.emplace_back(u, v + g.n());
    e.emplace_back(v, u + g.n());
  }
  return Graph(2 * g.n(), e, "double(" + g.name() + ")");
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) e.emplace_back(u, v);
  return Graph(g.n(), e, "co(" + g.name() + ")");
}

// apex is the last vertex
inline Graph cone(const Graph& g) {
  auto e = g.edges();
  for (Vertex v = 0; v < g.n(); ++v) e.emplace_back(v, (Vertex)g.n());
  return Graph(g.n() + 1, e, "cone(" + g.name() + ")");
}

inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<long> pos(g.n(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.n()) fail(Errc::IndexOutOfRange, "vertex out of range");
    pos[vs[i]] = (long)i;
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (Vertex w : g.neighbors(vs[i]))
      if (pos[w] > (long)i) e.emplace_back((Vertex)i, (Vertex)pos[w]);
  return Graph(vs.size(), e);
}

// neighbours of v with inherited edges
inline Graph link(const Graph& g, Vertex v) {
  if (v >= g.n()) fail(Errc::IndexOutOfRange, "vertex out of range");
  return induced_subgraph(g, g.neighbors(v));
}

inline Graph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.n()) fail(Errc::InvalidOperation, "vertex out of range");
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

inline Graph remove_edges(const Graph& g, const std::vector<Edge>& drop) {
  for (auto [u, v] : drop)
    if (u >= g.n() || v >= g.n() || !g.has_edge(u, v)) fail(Errc::InvalidOperation, "edge not present");
  auto keep = g.edges();
  std::erase_if(keep, [&](const Edge& e) {
    for (auto [u, v] : drop)
      if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) return true;
    return false;
  });
  return Graph(g.n(), keep);
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), e, g.name());
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), e);
}

}  // namespace sgt
