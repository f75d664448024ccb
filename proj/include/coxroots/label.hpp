#pragma once

#include <compare>
#include <string>

namespace coxroots {

// Coxeter edge label m_xy. Finite labels are integers; infinity compares
// greater than every integer. The value 2 means "no edge".
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(int m) : m_(m) {}

  static constexpr Label infinity() { return Label(kInfinite); }
  static constexpr Label commuting() { return Label(2); }

  constexpr bool is_infinite() const { return m_ == kInfinite; }
  constexpr bool is_edge() const { return m_ != 2; }
  // Only meaningful when !is_infinite().
  constexpr int value() const { return m_; }

  constexpr auto operator<=>(const Label& other) const {
    if (is_infinite() || other.is_infinite()) {
      return static_cast<int>(is_infinite()) <=> static_cast<int>(other.is_infinite());
    }
    return m_ <=> other.m_;
  }
  constexpr bool operator==(const Label&) const = default;

  // "inf" or the decimal value.
  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(m_);
  }

 private:
  static constexpr int kInfinite = -1;
  int m_ = 2;
};

}  // namespace coxroots
