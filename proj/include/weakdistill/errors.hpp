#pragma once

#include <stdexcept>
#include <string>

namespace weakdistill {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidState : Error {
  using Error::Error;
};

struct ZeroProbabilityOutcome : Error {
  using Error::Error;
};

struct AlreadyMaximal : Error {
  using Error::Error;
};

struct OrderingViolation : Error {
  using Error::Error;
};

struct RejectionBudgetExceeded : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace weakdistill
