#pragma once

#include <map>
#include <string>
#include <vector>

#include "gnum/functionals.hpp"
#include "gnum/graph.hpp"
#include "gnum/rational.hpp"

namespace gnum {

/// Element of the signed-graph ring: a finite integer combination of
/// connected iso-classes, keyed by canonical certificate. Addition is the
/// multiset sum (cancellation is automatic), multiplication extends the
/// strong product bilinearly. The empty map is 0, {K_1: 1} is 1.
class GraphInteger {
 public:
  struct Term {
    long long mult = 0;
    Graph rep;
  };

  GraphInteger() = default;
  static GraphInteger zero() { return {}; }
  static GraphInteger one();
  static GraphInteger from_int(long long n);
  /// Splits g into connected components.
  static GraphInteger from_graph(const Graph& g);
  static GraphInteger from_connected(const Graph& g, long long mult, const std::string& cert);

  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const GraphInteger& o) const;

  /// K_1 coefficient plus a flag for "nothing but K_1 terms".
  bool is_pure_scalar(long long* value = nullptr) const;
  /// When the integer is a single connected class with multiplicity one,
  /// returns its representative.
  const Graph* single_class() const;

  long long component_count() const; // b_0, with sign
  long long vertex_count_functional() const; // f_0, with sign
  long long euler_characteristic_functional() const;
  std::vector<long long> f_vector_functional() const;
  long long wu_functional(int k) const;

  /// Sum over terms of |multiplicity| * vertex count; realizes the minimum
  /// of c(A) + c(B) over representations A - B.
  long long norm() const;

  std::string to_string() const;
  std::string to_json() const;

 private:
  std::map<std::string, Term> terms_;
  friend GraphInteger gi_add(const GraphInteger&, const GraphInteger&);
  friend GraphInteger gi_neg(const GraphInteger&);
  friend GraphInteger gi_scale(const GraphInteger&, long long);
  friend GraphInteger gi_mul(const GraphInteger&, const GraphInteger&);
};

GraphInteger gi_add(const GraphInteger& x, const GraphInteger& y);
GraphInteger gi_neg(const GraphInteger& x);
GraphInteger gi_scale(const GraphInteger& x, long long k);
GraphInteger gi_mul(const GraphInteger& x, const GraphInteger& y);
GraphInteger gi_sub(const GraphInteger& x, const GraphInteger& y);
GraphInteger gi_pow(const GraphInteger& x, int exponent);

/// Pretty component name: K_n / C_n / L_n / S_n / Oct when the class is
/// one of those, otherwise a size-and-hash tag.
std::string component_name(const Graph& g);

} // namespace gnum
