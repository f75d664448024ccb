#include "coxroots/number.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "coxroots/error.hpp"

namespace coxroots {

namespace {

constexpr double kUnitRoundoff = 0x1p-52;
constexpr double kWeightError = 0x1p-45;
constexpr double kQuantum = 1e-9;

double rounding(double v) { return std::abs(v) * kUnitRoundoff; }

}  // namespace

Sign ApproxValue::sign() const {
  if (value == 0.0 && error == 0.0) return Sign::zero;
  if (std::abs(value) <= error) {
    throw PrecisionExhausted("precision exhausted: |" + std::to_string(value) +
                             "| <= " + std::to_string(error));
  }
  return value > 0 ? Sign::positive : Sign::negative;
}

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b) {
  const double v = a.value + b.value;
  return {v, a.error + b.error + rounding(v)};
}

ApproxValue operator-(const ApproxValue& a, const ApproxValue& b) {
  const double v = a.value - b.value;
  return {v, a.error + b.error + rounding(v)};
}

ApproxValue operator*(const ApproxValue& a, const ApproxValue& b) {
  const double v = a.value * b.value;
  const double e = std::abs(a.value) * b.error + std::abs(b.value) * a.error + a.error * b.error;
  return {v, e + rounding(v)};
}

ApproxValue to_approx(const FieldValue& v) {
  const double value = v.to_double();
  return {value, v.magnitude_bound() * 0x1p-48};
}

ApproxValue Number::approx() const {
  if (is_exact()) return to_approx(exact());
  return std::get<ApproxValue>(v_);
}

bool Number::is_zero() const {
  if (is_exact()) return exact().is_zero();
  return std::get<ApproxValue>(v_).value == 0.0 && std::get<ApproxValue>(v_).error == 0.0;
}

Sign Number::sign() const {
  if (is_exact()) return exact().sign();
  return std::get<ApproxValue>(v_).sign();
}

double Number::to_double() const {
  if (is_exact()) return exact().to_double();
  return std::get<ApproxValue>(v_).value;
}

Number Number::operator-() const {
  if (is_exact()) return Number(-exact());
  const auto& a = std::get<ApproxValue>(v_);
  return Number(ApproxValue{-a.value, a.error});
}

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(a.exact() + b.exact());
  return Number(a.approx() + b.approx());
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(a.exact() - b.exact());
  return Number(a.approx() - b.approx());
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Number(a.exact() * b.exact());
  // Exact zero stays exact; it carries no error.
  if (a.is_exact() && a.exact().is_zero()) return a;
  if (b.is_exact() && b.exact().is_zero()) return b;
  return Number(a.approx() * b.approx());
}

bool Number::operator==(const Number& o) const {
  if (is_exact() && o.is_exact()) return exact() == o.exact();
  return std::llround(to_double() / kQuantum) == std::llround(o.to_double() / kQuantum);
}

// Exact and approximate renderings of one value must collide, so even exact
// values hash by their quantized double.
std::size_t Number::hash() const {
  return std::hash<long long>{}(std::llround(to_double() / kQuantum));
}

std::string Number::to_string() const {
  if (is_exact()) return exact().to_string();
  char buf[64];
  std::snprintf(buf, sizeof buf, "~%.12g", std::get<ApproxValue>(v_).value);
  return buf;
}

std::strong_ordering compare(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return compare(a.exact(), b.exact());
  switch ((a - b).sign()) {
    case Sign::negative:
      return std::strong_ordering::less;
    case Sign::zero:
      return std::strong_ordering::equal;
    case Sign::positive:
      break;
  }
  return std::strong_ordering::greater;
}

bool has_exact_weight(Label m) {
  if (m.is_infinite()) return true;
  const int v = m.value();
  return v >= 3 && v <= 6;
}

Number weight(Label m) {
  if (m.is_infinite()) return Number(2);
  const int v = m.value();
  if (v < 3) throw Error("edge label must be >= 3 or inf, got " + std::to_string(v));
  switch (v) {
    case 3:
      return Number(1);
    case 4:
      return Number(FieldValue::sqrt(2));
    case 5:
      return Number(FieldValue::rational(1, 2) + FieldValue::rational(1, 2) * FieldValue::sqrt(5));
    case 6:
      return Number(FieldValue::sqrt(3));
    default:
      return Number(ApproxValue{2.0 * std::cos(std::numbers::pi / v), kWeightError});
  }
}

}  // namespace coxroots
