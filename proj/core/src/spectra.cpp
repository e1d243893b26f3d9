#include "gnum/spectra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gnum/error.hpp"
#include "gnum/rank.hpp"

namespace gnum {

namespace {

Eigen::MatrixXd to_dense(const SparseIntMat& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (auto [r, v] : m.col[j]) out(r, j) = static_cast<double>(v);
  return out;
}

struct RankProfile {
  std::vector<long long> betti;
  std::vector<long long> rank; // rank[k] of boundary k, rank[nd] = 0
};

RankProfile betti_from_boundaries(const std::vector<long long>& f,
                                  const std::vector<SparseIntMat>& boundary) {
  size_t nd = f.size();
  RankProfile rp;
  rp.rank.assign(nd + 1, 0);
  for (size_t k = 1; k < nd; ++k) rp.rank[k] = exact_rank(boundary[k]);
  rp.betti.resize(nd);
  for (size_t k = 0; k < nd; ++k) rp.betti[k] = f[k] - rp.rank[k] - rp.rank[k + 1];
  return rp;
}

HodgeData hodge_from_boundaries(std::vector<long long> f, std::vector<SparseIntMat> boundary) {
  HodgeData out;
  out.f = std::move(f);
  out.boundary = std::move(boundary);
  RankProfile rp = betti_from_boundaries(out.f, out.boundary);
  out.betti = std::move(rp.betti);
  size_t nd = out.f.size();
  out.harmonic.resize(nd);
  out.laplacian.resize(nd);
  for (size_t k = 0; k < nd; ++k) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(out.f[k], out.f[k]);
    if (k >= 1) {
      Eigen::MatrixXd b = to_dense(out.boundary[k]);
      h += b.transpose() * b;
    }
    if (k + 1 < nd) {
      Eigen::MatrixXd b = to_dense(out.boundary[k + 1]);
      h += b * b.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    out.laplacian[k] = std::move(h);
    out.harmonic[k] = solver.eigenvectors().leftCols(out.betti[k]);
  }
  return out;
}

} // namespace

ConnectionMatrix connection_laplacian(const SimplicialComplex& c) {
  int t = static_cast<int>(c.total());
  IMat m(t, t);
  for (int i = 0; i < t; ++i) {
    m.at(i, i) = 1;
    for (int j = i + 1; j < t; ++j)
      if (simplices_intersect(c, i, j)) m.at(i, j) = m.at(j, i) = 1;
  }
  RMat r(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) r.at(i, j) = Rat(static_cast<long>(m.at(i, j)));
  Rat det = det_exact(std::move(r));
  return {std::move(m), det.get_num()};
}

RMat energized_connection_laplacian(const SimplicialComplex& c,
                                    const std::function<Rat(const Simplex&)>& h) {
  int t = static_cast<int>(c.total());
  std::vector<Rat> hv(t);
  for (int i = 0; i < t; ++i) hv[i] = h(c.simplex(i));
  size_t words = c.total() ? c.mask(0).size() : 0;
  RMat m(t, t);
  std::vector<uint64_t> inter(words);
  for (int i = 0; i < t; ++i)
    for (int j = i; j < t; ++j) {
      for (size_t w = 0; w < words; ++w) inter[w] = c.mask(i)[w] & c.mask(j)[w];
      Rat sum(0);
      for (int z = 0; z < t; ++z) {
        bool subset = true;
        for (size_t w = 0; w < words; ++w)
          if ((c.mask(z)[w] & inter[w]) != c.mask(z)[w]) {
            subset = false;
            break;
          }
        if (subset) sum += hv[z];
      }
      m.at(i, j) = sum;
      m.at(j, i) = std::move(sum);
    }
  return m;
}

Rat det_exact(RMat m) {
  if (m.rows != m.cols) throw DomainError("determinant of nonsquare matrix");
  int n = m.rows;
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat factor = m.at(r, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

IMat product_connection_matrix(const SimplicialComplex& a, const SimplicialComplex& b) {
  int ta = static_cast<int>(a.total()), tb = static_cast<int>(b.total());
  IMat m(ta * tb, ta * tb);
  for (int ia = 0; ia < ta; ++ia)
    for (int ja = 0; ja < ta; ++ja) {
      if (ia != ja && !simplices_intersect(a, ia, ja)) continue;
      for (int ib = 0; ib < tb; ++ib)
        for (int jb = 0; jb < tb; ++jb) {
          if (ib != jb && !simplices_intersect(b, ib, jb)) continue;
          m.at(ia * tb + ib, ja * tb + jb) = 1;
        }
    }
  return m;
}

bool tensor_identity_check(const Graph& a, const Graph& b) {
  SimplicialComplex ca = whitney_complex(a), cb = whitney_complex(b);
  ConnectionMatrix la = connection_laplacian(ca), lb = connection_laplacian(cb);
  if (product_connection_matrix(ca, cb) != kronecker(la.matrix, lb.matrix)) return false;

  // Sum case: the union complex is the two simplex sets interleaved by
  // dimension; undo the interleaving and compare against the block sum.
  Graph u = disjoint_union(a, b);
  SimplicialComplex cu = whitney_complex(u);
  int ta = static_cast<int>(ca.total()), tb = static_cast<int>(cb.total());
  if (cu.total() != ta + tb) return false;
  ConnectionMatrix lu = connection_laplacian(cu);
  IMat block = block_diagonal(la.matrix, lb.matrix);
  std::vector<int> to_union(ta + tb);
  for (int i = 0; i < ta; ++i) {
    int idx = cu.index_of(ca.simplex(i));
    if (idx < 0) return false;
    to_union[i] = idx;
  }
  int shift = a.vertex_count();
  for (int i = 0; i < tb; ++i) {
    Simplex s = cb.simplex(i);
    for (int& v : s) v += shift;
    int idx = cu.index_of(s);
    if (idx < 0) return false;
    to_union[ta + i] = idx;
  }
  for (int i = 0; i < ta + tb; ++i)
    for (int j = 0; j < ta + tb; ++j)
      if (lu.matrix.at(to_union[i], to_union[j]) != block.at(i, j)) return false;
  return true;
}

HodgeData hodge(const SimplicialComplex& c) {
  return hodge_from_boundaries(c.f_vector(), boundary_matrices(c));
}

HodgeData hodge(const ProductComplex& pc) { return hodge_from_boundaries(pc.f, pc.boundary); }

std::vector<long long> betti_numbers(const SimplicialComplex& c) {
  return betti_from_boundaries(c.f_vector(), boundary_matrices(c)).betti;
}

std::vector<long long> betti_numbers(const ProductComplex& pc) {
  return betti_from_boundaries(pc.f, pc.boundary).betti;
}

IntPolynomial poincare_polynomial(const SimplicialComplex& c) {
  return IntPolynomial::from_coeffs(betti_numbers(c));
}

IntPolynomial poincare_polynomial(const ProductComplex& pc) {
  return IntPolynomial::from_coeffs(betti_numbers(pc));
}

IntPolynomial poincare_polynomial(const Graph& g) {
  return poincare_polynomial(whitney_complex(g));
}

bool kunneth_check(const Graph& a, const Graph& b) {
  SimplicialComplex ca = whitney_complex(a), cb = whitney_complex(b);
  IntPolynomial lhs = poincare_polynomial(product_complex(ca, cb));
  return lhs == poincare_polynomial(ca) * poincare_polynomial(cb);
}

namespace {

double cochain_residual(const std::vector<SparseIntMat>& boundary, size_t nd, int k,
                        const Eigen::VectorXd& f) {
  double res = 0;
  if (k >= 1) res += (to_dense(boundary[k]) * f).norm();
  if (k + 1 < static_cast<int>(nd)) res += (to_dense(boundary[k + 1]).transpose() * f).norm();
  return res;
}

} // namespace

Eigen::VectorXd kunneth_product_form(const SimplicialComplex& a, int dim_a, const Eigen::VectorXd& fa,
                                     const SimplicialComplex& b, int dim_b, const Eigen::VectorXd& fb,
                                     const ProductComplex& pc) {
  auto fva = a.f_vector();
  auto fvb = b.f_vector();
  if (dim_a < 0 || dim_a > a.dimension() || fa.size() != fva[dim_a])
    throw DomainError("form does not match the A-complex block");
  if (dim_b < 0 || dim_b > b.dimension() || fb.size() != fvb[dim_b])
    throw DomainError("form does not match the B-complex block");
  auto ba = boundary_matrices(a);
  auto bb = boundary_matrices(b);
  constexpr double kTol = 1e-8;
  if (cochain_residual(ba, fva.size(), dim_a, fa) > kTol * std::max(1.0, fa.norm()) ||
      cochain_residual(bb, fvb.size(), dim_b, fb) > kTol * std::max(1.0, fb.norm()))
    throw DomainError("non-harmonic input form rejected");

  int dim = dim_a + dim_b;
  const auto& level = pc.cells[dim];
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<int>(level.size()));
  int base_a = a.global_index(dim_a, 0);
  int base_b = b.global_index(dim_b, 0);
  for (size_t p = 0; p < level.size(); ++p) {
    auto [ia, ib] = level[p];
    if (a.dim_of(ia) != dim_a) continue;
    out[static_cast<int>(p)] = fa[ia - base_a] * fb[ib - base_b];
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const IMat& m) {
  Eigen::MatrixXd d(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) d(i, j) = static_cast<double>(m.at(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows);
  return out;
}

std::complex<double> spectral_zeta(const std::vector<double>& connection_spectrum,
                                   std::complex<double> s) {
  std::complex<double> acc = 0;
  for (double lambda : connection_spectrum) {
    double sq = lambda * lambda;
    if (sq < 1e-18) throw DomainError("singular connection spectrum in zeta");
    acc += std::exp(-s * std::log(sq));
  }
  return acc;
}

std::complex<double> spectral_zeta(const SimplicialComplex& c, std::complex<double> s) {
  return spectral_zeta(symmetric_eigenvalues(connection_laplacian(c).matrix), s);
}

std::complex<double> spectral_zeta(const Graph& g, std::complex<double> s) {
  return spectral_zeta(whitney_complex(g), s);
}

WaveZetaReport zeta_wave_report(const Graph& g, std::complex<double> s, double t, int truncation) {
  std::complex<double> z = spectral_zeta(g, s);
  std::complex<double> itz = std::complex<double>(0, t) * z;
  WaveZetaReport rep;
  std::complex<double> term = 1;
  rep.termwise = 1;
  for (int k = 1; k <= truncation; ++k) {
    term *= itz / static_cast<double>(k);
    rep.termwise += term;
  }
  rep.closed_form = std::exp(itz);
  rep.gap = std::abs(rep.termwise - rep.closed_form);
  double r = std::abs(itz);
  double tail = std::pow(r, truncation + 1);
  for (int k = 2; k <= truncation + 1; ++k) tail /= k;
  rep.tail_bound = tail * std::exp(r);
  return rep;
}

} // namespace gnum
