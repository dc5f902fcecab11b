#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace knot818 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in t with arbitrary-precision integer coefficients.
/// Canonical form: no leading or trailing zero coefficients; the zero
/// polynomial has no coefficients and min_exponent 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_exponent, std::vector<Integer> coefficients);
  LaurentPoly(int min_exponent, std::initializer_list<long long> coefficients);

  static LaurentPoly constant(const Integer& c) { return LaurentPoly(0, std::vector<Integer>{c}); }
  /// c * t^k
  static LaurentPoly monomial(const Integer& c, int exponent) {
    return LaurentPoly(exponent, std::vector<Integer>{c});
  }
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const noexcept { return coefficients_.empty(); }
  int min_exponent() const noexcept { return min_exponent_; }
  /// Exponent of the highest nonzero term; min_exponent() for zero.
  int max_exponent() const noexcept;
  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
  /// Coefficient of t^exponent (zero outside the stored range).
  Integer coefficient(int exponent) const;

  /// p(1/t)
  LaurentPoly inverted_variable() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  int min_exponent_ = 0;
  std::vector<Integer> coefficients_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_neg(const LaurentPoly& a);

/// q with num == q * den; throws InexactDivision if no such Laurent polynomial exists.
LaurentPoly poly_exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Throws ZeroArgument for t0 == 0.
Rational evaluate(const LaurentPoly& p, const Rational& t0);

/// Ascending order, e.g. "1 - 5*t + 10*t^2"; negative powers as "t^-2".
std::string to_string(const LaurentPoly& p);

std::string to_string(const Rational& r);

}  // namespace knot818
