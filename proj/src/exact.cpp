#include "schwinger/exact.hpp"

#include <limits>
#include <sstream>

namespace schwinger {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

Rational RadicalValue::signed_square() const {
  Rational sq = coefficient * coefficient * radicand;
  return coefficient < 0 ? Rational(-sq) : sq;
}

bool RadicalValue::equals(const Rational& value) const {
  if (value == 0) return is_zero();
  if ((coefficient > 0) != (value > 0)) return false;
  return coefficient * coefficient * radicand == value * value;
}

std::string RadicalValue::str() const {
  if (is_zero()) return "0";
  if (radicand == 1) return to_string(coefficient);
  return to_string(coefficient) + "*sqrt(" + to_string(radicand) + ")";
}

bool is_identity(const std::vector<std::vector<RadicalValue>>& gram) {
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != gram.size()) return false;
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (!gram[i][j].equals(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace schwinger
