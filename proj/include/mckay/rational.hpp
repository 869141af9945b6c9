#ifndef MCKAY_RATIONAL_HPP_
#define MCKAY_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mckay {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always stored in lowest terms. Arithmetic overflow throws Errc::Arithmetic.
class Rat {
public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rat(std::int64_t n, std::int64_t d);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }

  /// Representative of this value modulo 1, in [0,1).
  Rat mod1() const;

  /// "a/b" (or "a" when the denominator is 1).
  std::string str() const;
  /// Accepts "a", "-a", "a/b" with b != 0.
  static Rat parse(std::string_view text);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

} // namespace mckay

template <> struct std::hash<mckay::Rat> {
  std::size_t operator()(const mckay::Rat& r) const noexcept {
    return std::hash<std::int64_t>()(r.num()) * 1000003u ^
           std::hash<std::int64_t>()(r.den());
  }
};

#endif
