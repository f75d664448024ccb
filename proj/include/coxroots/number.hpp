#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>

#include "coxroots/field.hpp"
#include "coxroots/label.hpp"

namespace coxroots {

// Double with an absolute error bound. Used only for edge labels whose
// weight 2cos(pi/m) is not multiquadratic (m = 7, 8, ...).
struct ApproxValue {
  double value = 0.0;
  double error = 0.0;

  // Throws PrecisionExhausted when |value| <= error.
  Sign sign() const;
};

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator-(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator*(const ApproxValue& a, const ApproxValue& b);
ApproxValue to_approx(const FieldValue& v);

// Root component / matrix entry: exact whenever possible, approximate once
// any approximate operand has been mixed in (the "taint").
class Number {
 public:
  Number() = default;
  Number(long long n) : v_(FieldValue(n)) {}  // NOLINT(google-explicit-constructor)
  Number(FieldValue v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Number(ApproxValue v) : v_(v) {}            // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<FieldValue>(v_); }
  const FieldValue& exact() const { return std::get<FieldValue>(v_); }
  ApproxValue approx() const;

  bool is_zero() const;
  Sign sign() const;
  double to_double() const;

  Number operator-() const;
  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  Number& operator+=(const Number& o) { return *this = *this + o; }

  // Exact values compare by coefficients. Approximate values compare by
  // their value quantized to 1e-9, which is also what hash() uses.
  bool operator==(const Number& o) const;
  std::size_t hash() const;

  std::string to_string() const;

 private:
  std::variant<FieldValue, ApproxValue> v_;
};

// Ordering via the sign of the difference; throws PrecisionExhausted when an
// approximate difference cannot be signed.
std::strong_ordering compare(const Number& a, const Number& b);

// 2cos(pi/m) for an edge label. Exact for m in {3, 4, 5, 6, inf}; otherwise
// an ApproxValue with error 2^-45. Throws Error for labels below 3.
Number weight(Label m);

// True when weight(m) is exact.
bool has_exact_weight(Label m);

}  // namespace coxroots
