#pragma once

#include <string>
#include <vector>

#include "gnum/complex.hpp"
#include "gnum/graph.hpp"
#include "gnum/rational.hpp"

namespace gnum {

/// Integer polynomial, coefficient index = degree, trailing zeros stripped.
struct IntPolynomial {
  std::vector<long long> c;

  static IntPolynomial from_coeffs(std::vector<long long> coeffs);
  int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
  bool is_zero() const { return c.empty(); }
  long long eval(long long x) const;
  std::string to_string(const std::string& var = "t") const;

  bool operator==(const IntPolynomial& o) const = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

std::vector<long long> f_vector(const Graph& g);
long long euler_characteristic(const Graph& g);
IntPolynomial euler_polynomial(const Graph& g);
/// Total simplex count (the audit-only alternative norm seed).
long long kalai_number(const Graph& g);

/// Irreducibility over the rationals after removing integer content,
/// decided by Kronecker interpolation search. Degree capped at 12.
bool is_irreducible(const IntPolynomial& p);

/// Sum over ordered k-tuples of pairwise-intersecting simplices of the
/// product of parities; k = 1 is the Euler characteristic. k <= 3.
long long wu_characteristic(const Graph& g, int k);
long long wu_characteristic(const SimplicialComplex& c, int k);

int clique_number(const Graph& g);
int independence_number(const Graph& g);
double shannon_capacity_lower_bound(const Graph& g, int n);

Rat curvature(const Graph& g, int v);
std::vector<Rat> curvature_vector(const Graph& g);
/// 1 - chi of the subgraph of the unit sphere on lower-ranked neighbors.
long long poincare_hopf_index(const Graph& g, int v, const std::vector<int>& order);
/// Exact expectation of the index over uniformly random rankings, summed
/// over below-neighbor subsets with hypergeometric weights. deg(v) <= 20.
Rat curvature_as_index_expectation(const Graph& g, int v);

} // namespace gnum
