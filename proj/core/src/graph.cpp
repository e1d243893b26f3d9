#include "gnum/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gnum/canonical.hpp"
#include "gnum/error.hpp"

namespace gnum {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  words_ = (n + 63) / 64;
  adj_.assign(static_cast<size_t>(n) * words_, 0);
  for (auto [i, j] : edges) {
    if (i == j) throw DomainError("loop edge rejected");
    if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("edge endpoint out of range");
    uint64_t& wi = adj_[static_cast<size_t>(i) * words_ + j / 64];
    if (wi >> (j % 64) & 1) continue; // duplicate edges collapse
    wi |= uint64_t(1) << (j % 64);
    adj_[static_cast<size_t>(j) * words_ + i / 64] |= uint64_t(1) << (i % 64);
    ++m_;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  return adj_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
}

int Graph::degree(int v) const {
  int d = 0;
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = r[w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int i = 0; i < n_; ++i)
    for (int j : neighbors(i))
      if (i < j) out.emplace_back(i, j);
  return out;
}

bool Graph::same_labeled_graph(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(n_, -1);
  for (size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> es;
  for (size_t k = 0; k < keep.size(); ++k)
    for (int j : neighbors(keep[k]))
      if (pos[j] > static_cast<int>(k)) es.emplace_back(static_cast<int>(k), pos[j]);
  return Graph(static_cast<int>(keep.size()), es);
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<int> stack = {0};
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++found;
        stack.push_back(u);
      }
  }
  return found == n_;
}

std::string Graph::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto arr = nlohmann::json::array();
  for (auto [a, b] : edges()) arr.push_back({a, b});
  j["edges"] = arr;
  return j.dump();
}

Graph Graph::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw DomainError("graph json must be {\"n\": int, \"edges\": [[i,j],...]}");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> es;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw DomainError("bad edge entry in graph json");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a >= b) throw DomainError("graph json edges must satisfy i<j");
    es.emplace_back(a, b);
  }
  return Graph(n, es);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, n - 1);
  return Graph(n, es);
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw DomainError("negative leaf count");
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

Graph octahedron_graph() {
  // Complement of three disjoint edges: K_{2,2,2}.
  std::vector<std::pair<int, int>> anti = {{0, 1}, {2, 3}, {4, 5}};
  return complement(Graph(6, anti));
}

Graph strong_product(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  std::vector<std::pair<int, int>> es;
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1) {
      int u = i1 * nb + j1;
      for (int i2 = i1; i2 < na; ++i2) {
        if (!a.closed_adjacent(i1, i2)) continue;
        for (int j2 = (i2 == i1 ? j1 + 1 : 0); j2 < nb; ++j2) {
          if (!b.closed_adjacent(j1, j2)) continue;
          es.emplace_back(u, i2 * nb + j2);
        }
      }
    }
  return Graph(na * nb, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.vertex_count();
  std::vector<std::pair<int, int>> es = a.edges();
  for (auto [i, j] : b.edges()) es.emplace_back(i + na, j + na);
  return Graph(na + b.vertex_count(), es);
}

Graph zykov_join(const Graph& a, const Graph& b) {
  int na = a.vertex_count();
  std::vector<std::pair<int, int>> es = a.edges();
  for (auto [i, j] : b.edges()) es.emplace_back(i + na, j + na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < b.vertex_count(); ++j) es.emplace_back(i, na + j);
  return Graph(na + b.vertex_count(), es);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph strong_power(const Graph& g, int exponent) {
  if (exponent < 0) throw DomainError("strong_power needs a nonnegative exponent");
  Graph acc = complete_graph(1);
  for (int k = 0; k < exponent; ++k) acc = strong_product(acc, g);
  return acc;
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp = {s};
    seen[s] = 1;
    for (size_t head = 0; head < comp.size(); ++head)
      for (int u : g.neighbors(comp[head]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(g.induced(comp));
  }
  std::stable_sort(out.begin(), out.end(), [](const Graph& x, const Graph& y) {
    return certificate(x) < certificate(y);
  });
  return out;
}

} // namespace gnum
