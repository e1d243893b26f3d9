#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gnum {

/// A finite simple graph as an immutable value. Vertices are dense
/// indices 0..n-1; edges are unordered pairs stored in bitset rows.
/// The empty graph (n = 0) is the additive zero of the graph semi-ring.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  /// Equal-or-adjacent, the relation the strong product multiplies.
  bool closed_adjacent(int u, int v) const { return u == v || has_edge(u, v); }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Row bitset of v, words of 64 little-endian bits.
  const uint64_t* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }
  int row_words() const { return words_; }

  bool same_labeled_graph(const Graph& other) const;

  /// Subgraph induced on `keep` (indices remapped in the given order).
  Graph induced(const std::vector<int>& keep) const;

  bool is_connected() const;

  std::string to_json() const;
  static Graph from_json(const std::string& text);

 private:
  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<uint64_t> adj_;
};

// Named families used throughout; the CLI binds them to K_n, C_n, ...
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph path_graph(int n);       // n >= 1 vertices strung in a line
Graph star_graph(int leaves);  // one hub joined to `leaves` tips
Graph octahedron_graph();      // K_{2,2,2}

// Ring operations. Product vertex (i,j) gets row-major index i*n_b + j,
// so algebraic identities can be checked against literal adjacency.
Graph strong_product(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph zykov_join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
Graph strong_power(const Graph& g, int exponent);

/// Connected components, each as its own graph, sorted by canonical
/// certificate so downstream multisets are deterministic.
std::vector<Graph> components(const Graph& g);

} // namespace gnum
