#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxroots {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

// Exact element of Q(sqrt2, sqrt3, sqrt5).
//
// The eight coefficients are indexed by a bitmask over the primes {2, 3, 5}:
// bit 0 -> sqrt2, bit 1 -> sqrt3, bit 2 -> sqrt5, so mask 3 is sqrt6 and
// mask 7 is sqrt30. Products of basis elements multiply masks by XOR and
// pick up the primes in the intersection as a rational factor.
class FieldValue {
 public:
  static constexpr std::size_t kDimension = 8;

  FieldValue() = default;
  FieldValue(long long n);  // NOLINT(google-explicit-constructor)
  explicit FieldValue(Rational q);

  static FieldValue rational(long long num, long long den);
  // sqrt(radicand) for radicand in {2, 3, 5, 6, 10, 15, 30}.
  static FieldValue sqrt(int radicand);
  static FieldValue from_coefficients(const std::array<Rational, kDimension>& by_mask);

  const Rational& coefficient(unsigned mask) const { return c_[mask]; }
  bool is_zero() const;
  bool is_rational() const;

  FieldValue operator-() const;
  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o);
  FieldValue& operator*=(const FieldValue& o);
  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);

  bool operator==(const FieldValue& o) const { return c_ == o.c_; }

  // Exact sign under the real embedding with all square roots positive.
  Sign sign() const;
  double to_double() const;
  // Sum of |term| as a double; scale for error bounds.
  double magnitude_bound() const;
  std::size_t hash() const;

  // Canonical rendering, e.g. "1/2 + 1/2·r5", "-r2", "0".
  std::string to_string() const;

 private:
  std::array<Rational, kDimension> c_{};
};

std::strong_ordering compare(const FieldValue& a, const FieldValue& b);

// Lower/upper bounds for the value at the given precision (bits after the
// binary point of each square-root enclosure). Exposed for tests.
struct RationalInterval {
  Rational lo;
  Rational hi;
};
RationalInterval enclose(const FieldValue& v, unsigned precision_bits);

// Radicand of the basis element with the given mask (1 for mask 0).
int radicand_of_mask(unsigned mask);

}  // namespace coxroots
