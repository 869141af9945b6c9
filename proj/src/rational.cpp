#include "mckay/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "mckay/error.hpp"

namespace mckay {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotSpecialLinear: return "NotSpecialLinear";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NotDiagonal: return "NotDiagonal";
    case Errc::SymmetryBroken: return "SymmetryBroken";
    case Errc::NoEquivariantTriangulation: return "NoEquivariantTriangulation";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::Parse: return "Parse";
    case Errc::Arithmetic: return "Arithmetic";
  }
  return "Unknown";
}

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    fail(Errc::Arithmetic, "rational overflow");
  return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    fail(Errc::Arithmetic, "rational overflow");
  return out;
}

} // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
  if (d == 0)
    fail(Errc::Arithmetic, "zero denominator");
  if (d < 0) {
    n = mul(n, -1);
    d = mul(d, -1);
  }
  std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rat Rat::mod1() const {
  std::int64_t r = num_ % den_;
  if (r < 0)
    r += den_;
  return Rat(r, den_);
}

std::string Rat::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+')
      ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      fail(Errc::Parse, "malformed fraction \"" + std::string(text) + "\"");
    return v;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rat(parse_int(text));
  std::int64_t d = parse_int(text.substr(slash + 1));
  if (d == 0)
    fail(Errc::Parse, "zero denominator in \"" + std::string(text) + "\"");
  return Rat(parse_int(text.substr(0, slash)), d);
}

Rat operator+(const Rat& a, const Rat& b) {
  std::int64_t g = std::gcd(a.den_, b.den_);
  std::int64_t l = mul(a.den_ / g, b.den_);
  return Rat(add(mul(a.num_, l / a.den_), mul(b.num_, l / b.den_)), l);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  std::int64_t g1 = std::gcd(a.num_, b.den_);
  std::int64_t g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rat(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0)
    fail(Errc::Arithmetic, "division by zero");
  return a * Rat(b.den_, b.num_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = mul(num_, -1);
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  __extension__ typedef __int128 i128;
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  return mul(a / std::gcd(a, b), b);
}

} // namespace mckay
