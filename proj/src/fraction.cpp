#include "monsched/fraction.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace monsched {

namespace {

using u128 = unsigned __int128;

Fraction reduce128(u128 num, u128 den) {
  if (den == 0) throw std::domain_error("fraction with zero denominator");
  u128 a = num, b = den;
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  const u128 g = a == 0 ? den : a;
  num /= g;
  den /= g;
  if ((num >> 64) != 0 || (den >> 64) != 0) throw std::overflow_error("fraction overflow");
  return Fraction(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

}  // namespace

Fraction::Fraction(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
  if (den == 0) throw std::domain_error("fraction with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::string Fraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string Fraction::str_with_decimal() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value());
  return str() + " (" + buf + ")";
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return reduce128(static_cast<u128>(a.num_) * b.den_ + static_cast<u128>(b.num_) * a.den_,
                   static_cast<u128>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return reduce128(static_cast<u128>(a.num_) * b.num_, static_cast<u128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const u128 lhs = static_cast<u128>(a.num_) * b.den_;
  const u128 rhs = static_cast<u128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace monsched
