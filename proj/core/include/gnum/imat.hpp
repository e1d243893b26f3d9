#pragma once

#include <cstdint>
#include <vector>

namespace gnum {

/// Dense integer matrix, row-major. Sized for desk-scale spectra work
/// (connection Laplacians of small complexes), not for bulk linear algebra.
struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IMat& o) const = default;
};

inline IMat kronecker(const IMat& x, const IMat& y) {
  IMat out(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      long long v = x.at(i, j);
      if (!v) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          out.at(i * y.rows + k, j * y.cols + l) = v * y.at(k, l);
    }
  return out;
}

inline IMat block_diagonal(const IMat& x, const IMat& y) {
  IMat out(x.rows + y.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) out.at(x.rows + i, x.cols + j) = y.at(i, j);
  return out;
}

} // namespace gnum
