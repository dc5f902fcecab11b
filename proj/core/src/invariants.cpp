#include "knot818/invariants.hpp"

#include <cstdlib>

#include "knot818/error.hpp"

namespace knot818 {

PolyMatrix::PolyMatrix(std::size_t dimension) : dimension_(dimension), entries_(dimension * dimension) {
  if (dimension == 0) throw KnotError(ErrorCode::OutOfRange, "matrix dimension must be at least 1");
}

PolyMatrix PolyMatrix::identity(std::size_t dimension) {
  PolyMatrix m(dimension);
  for (std::size_t k = 0; k < dimension; ++k) m(k, k) = LaurentPoly::one();
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t k = 0; k < a.dimension(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dimension(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < a.dimension(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

LaurentPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 1) return m(0, 0);
  LaurentPoly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col).is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, mj = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, mj++) = m(i, j);
      }
    }
    const LaurentPoly term = m(0, col) * determinant(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

PolyMatrix burau_generator(int strands, int letter) {
  const int i = std::abs(letter);
  if (strands < 2 || i < 1 || i >= strands) {
    throw KnotError(ErrorCode::OutOfRange, "generator " + std::to_string(letter) + " on " + std::to_string(strands) +
                                               " strands");
  }
  const auto dim = static_cast<std::size_t>(strands - 1);
  PolyMatrix m = PolyMatrix::identity(dim);
  const auto row = static_cast<std::size_t>(i - 1);
  if (letter > 0) {
    if (row > 0) m(row, row - 1) = LaurentPoly::t();
    m(row, row) = LaurentPoly::monomial(-1, 1);
    if (row + 1 < dim) m(row, row + 1) = LaurentPoly::one();
  } else {
    if (row > 0) m(row, row - 1) = LaurentPoly::one();
    m(row, row) = LaurentPoly::monomial(-1, -1);
    if (row + 1 < dim) m(row, row + 1) = LaurentPoly::monomial(1, -1);
  }
  return m;
}

PolyMatrix burau_reduced(const BraidWord& braid) {
  PolyMatrix product = PolyMatrix::identity(static_cast<std::size_t>(braid.strands() - 1));
  for (int letter : braid.letters()) product = product * burau_generator(braid.strands(), letter);
  return product;
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw KnotError(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  const Integer sign = p.coefficients().front() < 0 ? -1 : 1;
  return p * LaurentPoly::monomial(sign, -p.min_exponent());
}

LaurentPoly alexander_from_braid(const BraidWord& braid) {
  if (!braid.closes_to_knot()) throw KnotError(ErrorCode::NotAKnot, "closure of the braid is a link");
  const auto dim = static_cast<std::size_t>(braid.strands() - 1);
  const LaurentPoly det = determinant(burau_reduced(braid) - PolyMatrix::identity(dim));
  const LaurentPoly one_minus_t = LaurentPoly(0, {1, -1});
  const LaurentPoly one_minus_tn = LaurentPoly::one() - LaurentPoly::monomial(1, braid.strands());
  return normalize_alexander(poly_exact_div(det * one_minus_t, one_minus_tn));
}

}  // namespace knot818
