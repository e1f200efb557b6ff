#pragma once

#include <stdexcept>
#include <string>

namespace jacq {

/// A value expected to lie in Q carried a nonzero omega component.
/// Seeing this from a Binet evaluation means the implementation is wrong.
struct NotRational : std::domain_error {
  explicit NotRational(const std::string& what) : std::domain_error(what) {}
};

/// Second-order Jacobsthal sequences are only defined for n >= 0.
struct NegativeIndexUnsupported : std::domain_error {
  explicit NegativeIndexUnsupported(const std::string& what)
      : std::domain_error(what) {}
};

/// r = 0 (mod 3) makes delta_r vanish and H_r's entries divide by zero;
/// the sum formula and the diagonalization do not apply there.
struct DegenerateModulus : std::domain_error {
  explicit DegenerateModulus(const std::string& what)
      : std::domain_error(what) {}
};

struct UnknownIdentity : std::invalid_argument {
  explicit UnknownIdentity(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Index outside the stated domain of an identity or operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace jacq
