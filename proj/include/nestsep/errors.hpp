// Error type shared across the library. Every failure carries a stable
// machine-readable kind string (used verbatim in CLI diagnostics) plus a
// human-readable message, usually with a concrete witness.

#ifndef NESTSEP_ERRORS_HPP_
#define NESTSEP_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace nestsep {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Known kinds:
//   ClosureBudgetExceeded, OrderCapExceeded, NotAHomomorphism, NotNormal,
//   ActionNotHomomorphic, NotATransversal, NotInvariant, NotCentral,
//   EmptySet, DatumInvalid, NotAPreNest, InvalidArgs, ParentMismatch,
//   NotUnimodular, ActionOrderMismatch, BudgetZero, TableInvalid,
//   InvalidInput
[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace nestsep

#endif  // NESTSEP_ERRORS_HPP_
