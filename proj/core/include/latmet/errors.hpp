#ifndef LATMET_ERRORS_HPP
#define LATMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latmet {

/// A promised bound was violated by materialized data (e.g. a Cauchy
/// modulus that lied about pairwise distances).
class contract_breach : public std::runtime_error {
 public:
  explicit contract_breach(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form tail never reached the requested threshold within the
/// configured index horizon.
class horizon_exceeded : public std::runtime_error {
 public:
  explicit horizon_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Input sets fail the partition preconditions (overlap or measure deficit).
/// The message names the offending labels and the exact rational amount.
class partition_error : public std::invalid_argument {
 public:
  explicit partition_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace latmet

#endif  // LATMET_ERRORS_HPP
