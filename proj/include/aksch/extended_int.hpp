#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace aksch {

// An integer or +infinity. Infinity compares above every finite value and
// absorbs addition; this is how an unbounded multiplicative order of q is
// carried through the threshold arithmetic.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(std::int64_t v) : value_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedInt infinity() {
    ExtendedInt x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // Precondition: finite.
  std::int64_t value() const;
  std::optional<std::int64_t> finite_value() const {
    if (infinite_) return std::nullopt;
    return value_;
  }

  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  friend constexpr ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedInt(a.value_ + b.value_);
  }
  friend constexpr ExtendedInt operator*(std::int64_t k, const ExtendedInt& a) {
    if (a.infinite_) return infinity();
    return ExtendedInt(k * a.value_);
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtendedInt& x);

}  // namespace aksch
