#include "gnum/chain.hpp"

#include <algorithm>

#include "gnum/error.hpp"

namespace gnum {

std::vector<SparseIntMat> boundary_matrices(const SimplicialComplex& c) {
  int dim = c.dimension();
  std::vector<SparseIntMat> out;
  if (dim < 0) return out;
  auto f = c.f_vector();
  out.emplace_back(0, static_cast<int>(f[0]));
  for (int k = 1; k <= dim; ++k) {
    SparseIntMat m(static_cast<int>(f[k - 1]), static_cast<int>(f[k]));
    const auto& level = c.by_dim()[k];
    for (size_t j = 0; j < level.size(); ++j) {
      const Simplex& s = level[j];
      long long sign = 1;
      for (size_t skip = 0; skip < s.size(); ++skip) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (size_t i = 0; i < s.size(); ++i)
          if (i != skip) face.push_back(s[i]);
        int idx = c.index_of(face);
        int row = idx - c.global_index(k - 1, 0);
        m.col[j].emplace_back(row, sign);
        sign = -sign;
      }
      std::sort(m.col[j].begin(), m.col[j].end());
    }
    out.push_back(std::move(m));
  }
  return out;
}

long long ProductComplex::total() const {
  long long t = 0;
  for (long long v : f) t += v;
  return t;
}

int ProductComplex::index_within_dim(int dim, const std::pair<int, int>& cell) const {
  const auto& level = cells[dim];
  auto it = std::lower_bound(level.begin(), level.end(), cell);
  if (it == level.end() || *it != cell) return -1;
  return static_cast<int>(it - level.begin());
}

ProductComplex product_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  ProductComplex pc;
  int dim = a.dimension() + b.dimension();
  if (a.dimension() < 0 || b.dimension() < 0) return pc;
  pc.cells.resize(dim + 1);
  for (int ia = 0; ia < a.total(); ++ia)
    for (int ib = 0; ib < b.total(); ++ib)
      pc.cells[a.dim_of(ia) + b.dim_of(ib)].emplace_back(ia, ib);
  for (auto& level : pc.cells) std::sort(level.begin(), level.end());
  for (auto& level : pc.cells) pc.f.push_back(static_cast<long long>(level.size()));

  pc.boundary.emplace_back(0, static_cast<int>(pc.f[0]));
  for (int k = 1; k <= dim; ++k) {
    SparseIntMat m(static_cast<int>(pc.f[k - 1]), static_cast<int>(pc.f[k]));
    const auto& level = pc.cells[k];
    for (size_t j = 0; j < level.size(); ++j) {
      auto [ia, ib] = level[j];
      const Simplex& x = a.simplex(ia);
      const Simplex& y = b.simplex(ib);
      int dx = static_cast<int>(x.size()) - 1;
      std::vector<std::pair<int, long long>> entries;
      if (dx > 0) {
        long long sign = 1;
        for (size_t skip = 0; skip < x.size(); ++skip) {
          Simplex face;
          for (size_t i = 0; i < x.size(); ++i)
            if (i != skip) face.push_back(x[i]);
          int row = pc.index_within_dim(k - 1, {a.index_of(face), ib});
          entries.emplace_back(row, sign);
          sign = -sign;
        }
      }
      if (y.size() > 1) {
        long long base = dx % 2 == 0 ? 1 : -1;
        long long sign = base;
        for (size_t skip = 0; skip < y.size(); ++skip) {
          Simplex face;
          for (size_t i = 0; i < y.size(); ++i)
            if (i != skip) face.push_back(y[i]);
          int row = pc.index_within_dim(k - 1, {ia, b.index_of(face)});
          entries.emplace_back(row, sign);
          sign = -sign;
        }
      }
      std::sort(entries.begin(), entries.end());
      m.col[j] = std::move(entries);
    }
    pc.boundary.push_back(std::move(m));
  }
  return pc;
}

} // namespace gnum
