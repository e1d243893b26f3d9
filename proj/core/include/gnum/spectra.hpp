#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gnum/chain.hpp"
#include "gnum/complex.hpp"
#include "gnum/functionals.hpp"
#include "gnum/graph.hpp"
#include "gnum/imat.hpp"
#include "gnum/rational.hpp"

namespace gnum {

/// Plain connection Laplacian: entry 1 iff the two simplices intersect
/// (diagonal included). Invertible; the determinant comes along for free.
struct ConnectionMatrix {
  IMat matrix;
  Int det;
};

ConnectionMatrix connection_laplacian(const SimplicialComplex& c);

/// Dense rational matrix for energized variants.
struct RMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  RMat() = default;
  RMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// entry(x, y) = sum of h(z) over nonempty simplices z inside x ∩ y.
RMat energized_connection_laplacian(const SimplicialComplex& c,
                                    const std::function<Rat(const Simplex&)>& h);
Rat det_exact(RMat m);

/// Connection matrix of the product cells, built directly from pairwise
/// intersections with cell index ia * total_b + ib. Equality with the
/// Kronecker product of the factors is the tensor identity.
IMat product_connection_matrix(const SimplicialComplex& a, const SimplicialComplex& b);

/// Product case L_{AxB} = L_A (x) L_B plus the sum case L_{A+B} = L_A (+) L_B
/// (block sum up to the interleaving of the union complex's simplex order).
bool tensor_identity_check(const Graph& a, const Graph& b);

/// Exact Betti numbers from rational boundary ranks, with floating-point
/// harmonic bases per block (residual <= 1e-9 relative).
struct HodgeData {
  std::vector<long long> f;
  std::vector<long long> betti;
  std::vector<SparseIntMat> boundary;
  std::vector<Eigen::MatrixXd> harmonic; // f_k x b_k, orthonormal columns
  std::vector<Eigen::MatrixXd> laplacian;
};

HodgeData hodge(const SimplicialComplex& c);
HodgeData hodge(const ProductComplex& pc);

/// Exact Betti numbers alone (no eigen blocks); scales to the larger
/// complexes the homotopy checks visit.
std::vector<long long> betti_numbers(const SimplicialComplex& c);
std::vector<long long> betti_numbers(const ProductComplex& pc);

IntPolynomial poincare_polynomial(const SimplicialComplex& c);
IntPolynomial poincare_polynomial(const ProductComplex& pc);
IntPolynomial poincare_polynomial(const Graph& g);

/// poincare(product complex) == poincare(a) * poincare(b).
bool kunneth_check(const Graph& a, const Graph& b);

/// Tensor cochain fa (x) fb placed on the (dim_a + dim_b)-cells of the
/// product complex. Inputs must be numerically harmonic on their factors;
/// the result is closed and co-closed on the product within 1e-8.
Eigen::VectorXd kunneth_product_form(const SimplicialComplex& a, int dim_a, const Eigen::VectorXd& fa,
                                     const SimplicialComplex& b, int dim_b, const Eigen::VectorXd& fb,
                                     const ProductComplex& pc);

std::vector<double> symmetric_eigenvalues(const IMat& m);
/// zeta(s) = sum over eigenvalues of L^2 of lambda^{-s}, principal branch.
std::complex<double> spectral_zeta(const std::vector<double>& connection_spectrum,
                                   std::complex<double> s);
std::complex<double> spectral_zeta(const SimplicialComplex& c, std::complex<double> s);
std::complex<double> spectral_zeta(const Graph& g, std::complex<double> s);

/// Termwise zeta of the wave series exp(iGt) against exp(i zeta t).
struct WaveZetaReport {
  std::complex<double> termwise;
  std::complex<double> closed_form;
  double gap = 0;
  double tail_bound = 0;
};
WaveZetaReport zeta_wave_report(const Graph& g, std::complex<double> s, double t, int truncation);

} // namespace gnum
