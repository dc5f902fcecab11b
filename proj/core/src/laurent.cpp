#include "knot818/laurent.hpp"

#include <algorithm>

#include "knot818/error.hpp"

namespace knot818 {

LaurentPoly::LaurentPoly(int min_exponent, std::vector<Integer> coefficients)
    : min_exponent_(min_exponent), coefficients_(std::move(coefficients)) {
  trim();
}

LaurentPoly::LaurentPoly(int min_exponent, std::initializer_list<long long> coefficients)
    : min_exponent_(min_exponent) {
  coefficients_.reserve(coefficients.size());
  for (long long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

void LaurentPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  auto first = std::find_if(coefficients_.begin(), coefficients_.end(), [](const Integer& c) { return c != 0; });
  min_exponent_ += static_cast<int>(first - coefficients_.begin());
  coefficients_.erase(coefficients_.begin(), first);
  if (coefficients_.empty()) min_exponent_ = 0;
}

int LaurentPoly::max_exponent() const noexcept {
  return coefficients_.empty() ? min_exponent_ : min_exponent_ + static_cast<int>(coefficients_.size()) - 1;
}

Integer LaurentPoly::coefficient(int exponent) const {
  const int k = exponent - min_exponent_;
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

LaurentPoly LaurentPoly::inverted_variable() const {
  std::vector<Integer> reversed(coefficients_.rbegin(), coefficients_.rend());
  return LaurentPoly(-max_exponent(), std::move(reversed));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(min_exponent_, other.min_exponent_);
  const int hi = std::max(max_exponent(), other.max_exponent());
  std::vector<Integer> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    sum[static_cast<std::size_t>(min_exponent_ - lo) + k] += coefficients_[k];
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    sum[static_cast<std::size_t>(other.min_exponent_ - lo) + k] += other.coefficients_[k];
  }
  min_exponent_ = lo;
  coefficients_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPoly();
  std::vector<Integer> product(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  min_exponent_ += other.min_exponent_;
  coefficients_ = std::move(product);
  trim();
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly poly_neg(const LaurentPoly& a) { return -a; }

LaurentPoly poly_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw KnotError(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (num.is_zero()) return {};
  // Both operands have nonzero constant terms after factoring out their
  // lowest powers of t, so long division from the top is exact over Z[t].
  std::vector<Integer> rem = num.coefficients();
  const auto& d = den.coefficients();
  if (rem.size() < d.size()) {
    throw KnotError(ErrorCode::InexactDivision, to_string(num) + " is not divisible by " + to_string(den));
  }
  std::vector<Integer> quotient(rem.size() - d.size() + 1);
  const Integer& lead = d.back();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const Integer& top = rem[k + d.size() - 1];
    if (top % lead != 0) {
      throw KnotError(ErrorCode::InexactDivision, to_string(num) + " is not divisible by " + to_string(den));
    }
    const Integer q = top / lead;
    quotient[k] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
    throw KnotError(ErrorCode::InexactDivision, to_string(num) + " is not divisible by " + to_string(den));
  }
  return LaurentPoly(num.min_exponent() - den.min_exponent(), std::move(quotient));
}

Rational evaluate(const LaurentPoly& p, const Rational& t0) {
  if (t0 == 0) throw KnotError(ErrorCode::ZeroArgument, "Laurent polynomials are evaluated at t != 0");
  Rational acc = 0;
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = acc * t0 + Rational(*it);
  const int e = p.min_exponent();
  Rational scale = 1;
  const Rational base = e >= 0 ? t0 : Rational(1) / t0;
  for (int k = 0; k < std::abs(e); ++k) scale *= base;
  return acc * scale;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Integer& c = p.coefficients()[k];
    if (c == 0) continue;
    const int e = p.min_exponent() + static_cast<int>(k);
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string power = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
    if (power.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += power;
    } else {
      out += magnitude.str() + "*" + power;
    }
  }
  return out;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace knot818
