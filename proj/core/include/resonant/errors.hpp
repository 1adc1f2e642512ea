#pragma once

#include <stdexcept>
#include <string>

namespace resonant {

// Raised when a floating-point computation would leave the representable
// range (e.g. lambda^n overflows) or an oracle is asked to run beyond the
// scale it supports. Callers should switch to the log-domain routines.
class NumericGuardError : public std::runtime_error {
 public:
  explicit NumericGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace resonant
