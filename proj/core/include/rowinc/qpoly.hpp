#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rowinc {

/// Overflow-checked 64-bit arithmetic. Throws OverflowError instead of
/// wrapping.
namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

/// Univariate polynomial in q with exact 64-bit integer coefficients.
///
/// Dense storage indexed by degree, always trimmed: the zero polynomial has
/// no coefficients and a nonzero polynomial has a nonzero leading
/// coefficient. All arithmetic is overflow-checked.
class QPoly {
 public:
  using Coeff = std::int64_t;

  QPoly() = default;
  explicit QPoly(std::vector<Coeff> coeffs);
  QPoly(std::initializer_list<Coeff> coeffs) : QPoly(std::vector<Coeff>(coeffs)) {}

  static QPoly constant(Coeff c);
  /// c * q^degree.
  static QPoly monomial(int degree, Coeff c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest power with a nonzero coefficient; -1 for zero.
  int valuation() const;
  Coeff coeff(int power) const;
  std::span<const Coeff> coeffs() const { return coeffs_; }

  /// Value at q = 1.
  Coeff at_one() const;
  /// Multiply by q^power, power >= 0.
  QPoly shifted(int power) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// Quotient of num / den. Throws DivisibilityError when the remainder is
/// nonzero or a step needs a non-integer coefficient; InputError on den = 0.
QPoly exact_div(const QPoly& num, const QPoly& den);

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
QPoly q_int(int n);
/// [n]! = [1][2]...[n]; [0]! = 1.
QPoly q_factorial(int n);
/// Gaussian binomial [a choose b] by the Pascal recurrence
/// [a,b] = [a-1,b-1] + q^b [a-1,b]. Zero when b < 0 or b > a.
QPoly q_binomial(int a, int b);

/// Ascending powers, e.g. "q^2 + 2q^3 - q^5"; "0" for the zero polynomial.
std::string to_human(const QPoly& p);

}  // namespace rowinc
