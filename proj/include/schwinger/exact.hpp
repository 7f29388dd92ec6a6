#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schwinger {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// Narrow a BigInt to int64_t, throwing std::overflow_error if it does not fit.
std::int64_t to_int64(const BigInt& value);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// A real number of the form coefficient * sqrt(radicand), radicand >= 0.
///
/// Orthonormal bases with 2^{r/2} or 1/sqrt(m! 2^m) scales produce inner
/// products of this shape; keeping the radicand separate lets every Gram
/// entry be compared exactly without floating point.
struct RadicalValue {
  Rational coefficient{0};
  Rational radicand{1};

  [[nodiscard]] bool is_zero() const { return coefficient == 0 || radicand == 0; }
  /// Sign-preserving square: sign(c) * c^2 * r.
  [[nodiscard]] Rational signed_square() const;
  [[nodiscard]] bool equals(const Rational& value) const;
  [[nodiscard]] std::string str() const;
};

/// Square matrix equal to the identity, compared exactly.
bool is_identity(const std::vector<std::vector<RadicalValue>>& gram);

}  // namespace schwinger
