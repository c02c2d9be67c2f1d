#pragma once

#include <stdexcept>
#include <string>

namespace specrisk {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WeightSumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvexityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedExponent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptySample : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a risk evaluation is infinite (e.g. ess sup of an
/// unbounded distribution).
struct InfiniteRisk : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace specrisk
