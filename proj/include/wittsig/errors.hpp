#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wittsig {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

/// Raised when a sign is requested for an element that is not real under the
/// standard embedding zeta_n = exp(2 pi i / n).
class NotRealError : public std::domain_error {
 public:
  explicit NotRealError(const std::string& what) : std::domain_error(what) {}
};

class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(unsigned cap_bits)
      : std::runtime_error("sign not resolved within " + std::to_string(cap_bits) + " bits"),
        cap_bits_(cap_bits) {}
  unsigned cap_bits() const noexcept { return cap_bits_; }

 private:
  unsigned cap_bits_;
};

/// A checked computation disagreed with the value it is supposed to reproduce.
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

class ConductorGuardExceeded : public std::runtime_error {
 public:
  ConductorGuardExceeded(std::int64_t conductor, std::int64_t guard)
      : std::runtime_error("working conductor " + std::to_string(conductor) +
                           " exceeds guard " + std::to_string(guard)),
        conductor_(conductor) {}
  std::int64_t conductor() const noexcept { return conductor_; }

 private:
  std::int64_t conductor_;
};

}  // namespace wittsig
