#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbsmooth {

enum class errc {
  zero_polynomial,
  not_hilbert,
  empty_partition,
  invalid_partition,
  length_mismatch,
  index_out_of_range,
  not_yet_polynomial,
  partition_too_large,
  ambient_too_small,
  parameter_out_of_range,
  invalid_ambient,
  not_singular,
  zero_ideal,
  degree_cap_exceeded,
  polynomial_mismatch,
  parse_error,
};

constexpr std::string_view errc_name(errc code) noexcept {
  switch (code) {
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_hilbert: return "NotHilbert";
    case errc::empty_partition: return "EmptyPartition";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_yet_polynomial: return "NotYetPolynomial";
    case errc::partition_too_large: return "PartitionTooLarge";
    case errc::ambient_too_small: return "AmbientTooSmall";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::invalid_ambient: return "InvalidAmbient";
    case errc::not_singular: return "NotSingular";
    case errc::zero_ideal: return "ZeroIdeal";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case errc::polynomial_mismatch: return "PolynomialMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported as this exception; `code()`
/// identifies which contract was violated.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hilbsmooth
