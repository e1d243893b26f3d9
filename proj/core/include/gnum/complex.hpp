#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gnum/graph.hpp"

namespace gnum {

using Simplex = std::vector<int>; // sorted vertex indices

/// Finite abstract simplicial complex, stored dimension-major with
/// lexicographic order inside each dimension. Global simplex indices are
/// stable for a given complex, so matrices built over them reproduce.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices, int vertex_count);

  int vertex_count() const { return n_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  long long total() const;
  std::vector<long long> f_vector() const;

  const std::vector<std::vector<Simplex>>& by_dim() const { return by_dim_; }
  const Simplex& simplex(int global_index) const;
  int dim_of(int global_index) const;
  int global_index(int dim, int pos_in_dim) const;
  /// -1 when the simplex is not present.
  int index_of(const Simplex& s) const;

  /// Vertex bitmask of a simplex (words of 64 bits), for intersection tests.
  const std::vector<uint64_t>& mask(int global_index) const { return masks_[global_index]; }

  bool closed_under_subsets() const;
  std::string to_json() const;

 private:
  int n_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<int> offsets_; // global index of first simplex per dimension
  std::vector<std::vector<uint64_t>> masks_;
};

/// All vertex sets of complete subgraphs of g. Throws DomainError when the
/// enumeration exceeds max_cells (guards the denser homotopy checks).
SimplicialComplex whitney_complex(const Graph& g, long long max_cells = 2'000'000);

/// Graph on the simplices of g's Whitney complex, adjacency = strict containment.
Graph barycentric_refinement(const Graph& g, long long max_cells = 2'000'000);

/// Graph on the simplices, adjacency = nonempty intersection.
Graph connection_graph(const Graph& g, long long max_cells = 2'000'000);

/// One squarefree monomial (sorted variable list) per simplex.
std::vector<Simplex> stanley_reisner_monomials(const Graph& g);

bool simplices_intersect(const SimplicialComplex& c, int x, int y);

/// Intersection graph of the product cells of whitney(a) x whitney(b):
/// cells adjacent iff both coordinates intersect. Cell (ia, ib) has index
/// ia * total_b + ib, matching the Kronecker order of the factors.
Graph product_cells_intersection_graph(const Graph& a, const Graph& b);

/// strong_product(connection_graph(a), connection_graph(b)) is isomorphic
/// (in fact label-identical) to the product-cell intersection graph.
bool shannon_connection_identity_check(const Graph& a, const Graph& b);

} // namespace gnum
