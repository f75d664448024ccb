#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "coxroots/error.hpp"
#include "coxroots/field.hpp"
#include "coxroots/number.hpp"

using namespace coxroots;
using Decimal = boost::multiprecision::cpp_dec_float_100;

namespace {

FieldValue random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::array<Rational, FieldValue::kDimension> c;
  for (auto& q : c) q = Rational(num(rng), den(rng));
  return FieldValue::from_coefficients(c);
}

// 100-digit evaluation as an independent sign oracle.
Decimal evaluate(const FieldValue& v) {
  Decimal total = 0;
  for (unsigned mask = 0; mask < FieldValue::kDimension; ++mask) {
    const Rational& q = v.coefficient(mask);
    if (q == 0) continue;
    Decimal term = Decimal(numerator(q).str()) / Decimal(denominator(q).str());
    total += term * sqrt(Decimal(radicand_of_mask(mask)));
  }
  return total;
}

}  // namespace

TEST_CASE("square roots multiply through the prime basis") {
  const auto r2 = FieldValue::sqrt(2);
  const auto r3 = FieldValue::sqrt(3);
  CHECK(r2 * r2 == FieldValue(2));
  CHECK(r2 * r3 == FieldValue::sqrt(6));
  CHECK(FieldValue::sqrt(6) * FieldValue::sqrt(10) == FieldValue(2) * FieldValue::sqrt(15));
  CHECK((r2 + r3) * (r2 + r3) == FieldValue(5) + FieldValue(2) * FieldValue::sqrt(6));
  CHECK(FieldValue::sqrt(30) * FieldValue::sqrt(30) == FieldValue(30));
}

TEST_CASE("ring axioms on random values") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_value(rng), b = random_value(rng), c = random_value(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == FieldValue(0));
    CHECK(a * FieldValue(1) == a);
  }
}

TEST_CASE("sign agrees with high-precision evaluation and is multiplicative") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto a = random_value(rng), b = random_value(rng);
    const Decimal da = evaluate(a);
    const Sign expected = da > 0 ? Sign::positive : (da < 0 ? Sign::negative : Sign::zero);
    CHECK(a.sign() == expected);
    CHECK(to_int((a * b).sign()) == to_int(a.sign()) * to_int(b.sign()));
  }
}

TEST_CASE("sign survives near cancellation") {
  // Powers of 1 - sqrt2 shrink geometrically while the coefficients grow.
  FieldValue small = FieldValue(1) - FieldValue::sqrt(2);
  FieldValue power = small;
  for (int k = 1; k <= 40; ++k) {
    CHECK(power.sign() == (k % 2 ? Sign::negative : Sign::positive));
    power *= small;
  }
  CHECK((FieldValue(99) - FieldValue(70) * FieldValue::sqrt(2)).sign() == Sign::positive);
  CHECK((FieldValue(1) - FieldValue::sqrt(2) + FieldValue::sqrt(3) - FieldValue::sqrt(5)).sign() ==
        Sign::negative);
  CHECK(FieldValue(0).sign() == Sign::zero);
}

TEST_CASE("compare is a total order consistent with doubles") {
  std::mt19937_64 rng(13);
  std::vector<FieldValue> values;
  for (int k = 0; k < 40; ++k) values.push_back(random_value(rng));
  for (const auto& a : values) {
    for (const auto& b : values) {
      const auto ab = compare(a, b);
      CHECK(compare(b, a) == (ab < 0 ? std::strong_ordering::greater
                                     : ab > 0 ? std::strong_ordering::less : std::strong_ordering::equal));
      if (std::abs(a.to_double() - b.to_double()) > 1e-9) CHECK((ab < 0) == (a.to_double() < b.to_double()));
      for (const auto& c : values) {
        if (ab < 0 && compare(b, c) < 0) CHECK(compare(a, c) < 0);
      }
    }
  }
}

TEST_CASE("interval enclosure contains the value") {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 50; ++k) {
    const auto a = random_value(rng);
    const auto box = enclose(a, 80);
    const Decimal d = evaluate(a);
    CHECK(Decimal(numerator(box.lo).str()) / Decimal(denominator(box.lo).str()) <= d);
    CHECK(Decimal(numerator(box.hi).str()) / Decimal(denominator(box.hi).str()) >= d);
  }
}

TEST_CASE("canonical rendering") {
  CHECK(FieldValue(0).to_string() == "0");
  CHECK((-FieldValue::sqrt(2)).to_string() == "-r2");
  CHECK((FieldValue::rational(1, 2) + FieldValue::rational(1, 2) * FieldValue::sqrt(5)).to_string() ==
        "1/2 + 1/2·r5");
  CHECK(FieldValue::rational(6, 4).to_string() == "3/2");
}

TEST_CASE("edge weights equal 2cos(pi/m)") {
  for (int m = 3; m <= 12; ++m) {
    const Number w = weight(Label(m));
    CHECK(std::abs(w.to_double() - 2.0 * std::cos(std::numbers::pi / m)) < 1e-12);
    CHECK(w.is_exact() == (m <= 6));
    CHECK(has_exact_weight(Label(m)) == (m <= 6));
  }
  CHECK(weight(Label::infinity()).exact() == FieldValue(2));
  CHECK(weight(Label(4)).exact() == FieldValue::sqrt(2));
  CHECK(weight(Label(6)).exact() == FieldValue::sqrt(3));
  CHECK(weight(Label(5)).exact() * weight(Label(5)).exact() == weight(Label(5)).exact() + FieldValue(1));
  CHECK_THROWS_AS(weight(Label::commuting()), Error);
}

TEST_CASE("approximate numbers taint and refuse to sign near zero") {
  const Number w7 = weight(Label(7));
  CHECK_FALSE(w7.is_exact());
  CHECK_FALSE((w7 + Number(1)).is_exact());
  CHECK((w7 - Number(1)).sign() == Sign::positive);
  CHECK_THROWS_AS((w7 - w7).sign(), PrecisionExhausted);
}
