#pragma once

#include <utility>
#include <vector>

#include "gnum/complex.hpp"

namespace gnum {

/// Sparse integer matrix, column-major: col[j] holds (row, value) sorted by row.
struct SparseIntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> col;

  SparseIntMat() = default;
  SparseIntMat(int r, int c) : rows(r), cols(c), col(c) {}
};

/// boundary[k] maps k-chains to (k-1)-chains with the alternating-sign face
/// rule; boundary[0] is the zero map onto the empty complex below degree 0.
std::vector<SparseIntMat> boundary_matrices(const SimplicialComplex& c);

/// Tensor-product cell complex of two simplicial complexes. Cells (x, y)
/// carry dimension dim x + dim y; within a dimension they are sorted by the
/// (global A index, global B index) pair. The boundary follows
/// d(x (x) y) = dx (x) y + (-1)^{dim x} x (x) dy, so dd = 0 holds exactly.
struct ProductComplex {
  std::vector<std::vector<std::pair<int, int>>> cells; // by dimension
  std::vector<long long> f;
  std::vector<SparseIntMat> boundary;

  int dimension() const { return static_cast<int>(cells.size()) - 1; }
  long long total() const;
  int index_within_dim(int dim, const std::pair<int, int>& cell) const;
};

ProductComplex product_complex(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace gnum
