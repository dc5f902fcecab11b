#pragma once

#include <vector>

#include "knot818/braid.hpp"
#include "knot818/laurent.hpp"

namespace knot818 {

/// Square matrix of Laurent polynomials.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t dimension);
  static PolyMatrix identity(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  LaurentPoly& operator()(std::size_t row, std::size_t col) { return entries_[row * dimension_ + col]; }
  const LaurentPoly& operator()(std::size_t row, std::size_t col) const { return entries_[row * dimension_ + col]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t dimension_;
  std::vector<LaurentPoly> entries_;
};

/// Cofactor expansion along the first row.
LaurentPoly determinant(const PolyMatrix& m);

/// Reduced Burau image of sigma_i (letter > 0) or its inverse (letter < 0):
/// identity except row i, which holds (t, -t, 1) at columns (i-1, i, i+1),
/// or (1, -1/t, 1/t) for the inverse (1-based, clipped to the matrix).
PolyMatrix burau_generator(int strands, int letter);

/// Product of generator matrices in letter order.
PolyMatrix burau_reduced(const BraidWord& braid);

/// Multiplies by +-t^k so the lowest exponent is 0 and the constant term is positive.
LaurentPoly normalize_alexander(const LaurentPoly& p);

/// det(B - I) (1 - t) / (1 - t^n), normalized.
LaurentPoly alexander_from_braid(const BraidWord& braid);

}  // namespace knot818
