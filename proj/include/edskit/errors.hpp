#ifndef EDSKIT_ERRORS_HPP
#define EDSKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edskit {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument or a value outside the mathematical domain of an
// operation (non-squarefree T, point not on the curve, p = 2 where an
// odd prime is required, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A requested multiple of a torsion point would leave the affine chart,
// or a marked point turned out to be torsion. Carries the order.
struct TorsionError : Error {
  TorsionError(const std::string& what, int order_) : Error(what), order(order_) {}
  int order;
};

// A term outgrew the configured decimal-digit budget.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace edskit

#endif
