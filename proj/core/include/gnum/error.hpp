#pragma once

#include <stdexcept>
#include <string>

namespace gnum {

// Violations of an operation's domain (localization rules, radius of
// convergence, size caps, base mismatches). The CLI maps these to exit
// code 2; malformed command lines exit with 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gnum
