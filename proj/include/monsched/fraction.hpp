#ifndef MONSCHED_FRACTION_HPP
#define MONSCHED_FRACTION_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace monsched {

// Non-negative rational kept in lowest terms. Scores are ratios of set
// cardinalities, so this is all the arithmetic they need.
class Fraction {
 public:
  Fraction() = default;
  Fraction(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "2/3"
  std::string str() const;
  // "2/3 (0.666667)": six significant digits.
  std::string str_with_decimal() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace monsched

#endif  // MONSCHED_FRACTION_HPP
