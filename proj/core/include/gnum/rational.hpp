#pragma once

#include <gmpxx.h>

#include <string>

#include "gnum/error.hpp"

namespace gnum {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which is exactly the RationalNumber contract.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" or "p/q" with optional sign.
inline Rat parse_rat(const std::string& text) {
  try {
    Rat q(text);
    q.canonicalize();
    if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + text);
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational literal: " + text);
  }
}

inline Rat pow_rat(const Rat& base, long exponent) {
  if (exponent == 0) return Rat(1);
  if (base == 0 && exponent < 0) throw DomainError("zero to a negative power");
  Rat out;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  if (exponent < 0) out = 1 / out;
  return out;
}

} // namespace gnum
