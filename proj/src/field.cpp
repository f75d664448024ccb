#include "coxroots/field.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace coxroots {

namespace {

constexpr std::array<int, 3> kPrimes = {2, 3, 5};

// Canonical display order: 1, r2, r3, r5, r6, r10, r15, r30.
constexpr std::array<unsigned, FieldValue::kDimension> kDisplayOrder = {0, 1, 2, 4, 3, 5, 6, 7};

int prime_product(unsigned mask) {
  int p = 1;
  for (unsigned b = 0; b < kPrimes.size(); ++b) {
    if (mask & (1u << b)) p *= kPrimes[b];
  }
  return p;
}

unsigned mask_of_radicand(int radicand) {
  for (unsigned m = 1; m < FieldValue::kDimension; ++m) {
    if (prime_product(m) == radicand) return m;
  }
  throw std::invalid_argument("unsupported radicand " + std::to_string(radicand));
}

std::string rational_to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace

int radicand_of_mask(unsigned mask) { return prime_product(mask); }

FieldValue::FieldValue(long long n) { c_[0] = n; }

FieldValue::FieldValue(Rational q) { c_[0] = std::move(q); }

FieldValue FieldValue::rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return FieldValue(Rational(num, den));
}

FieldValue FieldValue::sqrt(int radicand) {
  FieldValue v;
  v.c_[mask_of_radicand(radicand)] = 1;
  return v;
}

FieldValue FieldValue::from_coefficients(const std::array<Rational, kDimension>& by_mask) {
  FieldValue v;
  v.c_ = by_mask;
  return v;
}

bool FieldValue::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool FieldValue::is_rational() const {
  for (unsigned m = 1; m < kDimension; ++m) {
    if (!c_[m].is_zero()) return false;
  }
  return true;
}

FieldValue FieldValue::operator-() const {
  FieldValue v = *this;
  for (auto& c : v.c_) c = -c;
  return v;
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  for (unsigned m = 0; m < kDimension; ++m) {
    if (!o.c_[m].is_zero()) c_[m] += o.c_[m];
  }
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
  for (unsigned m = 0; m < kDimension; ++m) {
    if (!o.c_[m].is_zero()) c_[m] -= o.c_[m];
  }
  return *this;
}

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  FieldValue r;
  for (unsigned i = 0; i < FieldValue::kDimension; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; j < FieldValue::kDimension; ++j) {
      if (b.c_[j].is_zero()) continue;
      // sqrt(p_i) * sqrt(p_j) = sqrt(p_{i^j}) * prod(primes in i&j)
      const int factor = prime_product(i & j);
      if (factor == 1) {
        r.c_[i ^ j] += a.c_[i] * b.c_[j];
      } else {
        r.c_[i ^ j] += a.c_[i] * b.c_[j] * factor;
      }
    }
  }
  return r;
}

FieldValue& FieldValue::operator*=(const FieldValue& o) { return *this = *this * o; }

RationalInterval enclose(const FieldValue& v, unsigned precision_bits) {
  RationalInterval out{v.coefficient(0), v.coefficient(0)};
  const BigInt scale = BigInt(1) << precision_bits;
  for (unsigned m = 1; m < FieldValue::kDimension; ++m) {
    const Rational& c = v.coefficient(m);
    if (c.is_zero()) continue;
    // floor(sqrt(n) * 2^p) <= sqrt(n) * 2^p < floor(...) + 1
    const BigInt scaled = BigInt(radicand_of_mask(m)) << (2 * precision_bits);
    const BigInt root = boost::multiprecision::sqrt(scaled);
    const Rational lo(root, scale);
    const Rational hi(root + 1, scale);
    if (c > 0) {
      out.lo += c * lo;
      out.hi += c * hi;
    } else {
      out.lo += c * hi;
      out.hi += c * lo;
    }
  }
  return out;
}

Sign FieldValue::sign() const {
  unsigned nonzero = 0;
  unsigned last = 0;
  for (unsigned m = 0; m < kDimension; ++m) {
    if (!c_[m].is_zero()) {
      ++nonzero;
      last = m;
    }
  }
  if (nonzero == 0) return Sign::zero;
  if (nonzero == 1) return c_[last] > 0 ? Sign::positive : Sign::negative;

  // Floating-point filter; falls through to intervals when inconclusive.
  const double approx = to_double();
  const double bound = magnitude_bound();
  if (std::isfinite(approx) && std::isfinite(bound) && bound > 0) {
    const double err = bound * 0x1p-40;
    if (approx > err) return Sign::positive;
    if (approx < -err) return Sign::negative;
  }

  // Nonzero, so some precision separates the enclosure from zero.
  for (unsigned p = 64;; p *= 2) {
    const RationalInterval iv = enclose(*this, p);
    if (iv.lo > 0) return Sign::positive;
    if (iv.hi < 0) return Sign::negative;
  }
}

double FieldValue::to_double() const {
  double sum = 0.0;
  for (unsigned m = 0; m < kDimension; ++m) {
    if (c_[m].is_zero()) continue;
    sum += c_[m].convert_to<double>() * std::sqrt(static_cast<double>(prime_product(m)));
  }
  return sum;
}

double FieldValue::magnitude_bound() const {
  double sum = 0.0;
  for (unsigned m = 0; m < kDimension; ++m) {
    if (c_[m].is_zero()) continue;
    sum += std::abs(c_[m].convert_to<double>()) * std::sqrt(static_cast<double>(prime_product(m)));
  }
  return sum;
}

std::size_t FieldValue::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& c : c_) {
    const auto num = static_cast<std::uint64_t>(
        boost::multiprecision::numerator(c) % BigInt(0x7fffffffffffffe7ll));
    const auto den = static_cast<std::uint64_t>(
        boost::multiprecision::denominator(c) % BigInt(0x7fffffffffffffe7ll));
    h ^= std::hash<std::uint64_t>{}(num * 31 + den) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string FieldValue::to_string() const {
  std::string out;
  for (unsigned m : kDisplayOrder) {
    const Rational& c = c_[m];
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m == 0) {
      out += rational_to_string(magnitude);
    } else {
      if (magnitude != 1) out += rational_to_string(magnitude) + "·";
      out += "r" + std::to_string(prime_product(m));
    }
  }
  return out.empty() ? std::string("0") : out;
}

std::strong_ordering compare(const FieldValue& a, const FieldValue& b) {
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

}  // namespace coxroots
