#pragma once
// Dense matrices over a field with exact Gauss-Jordan elimination. Row
// reduction needs no pivot strategy beyond "first nonzero from the top"
// because the arithmetic is exact.

#include <cstddef>
#include <string>
#include <vector>

#include "tgrs/gf.hpp"

namespace tgrs {

class Matrix {
 public:
  Matrix(const Field* f, size_t rows, size_t cols);

  const Field& field() const;
  const Field* field_ptr() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FieldElem& at(size_t r, size_t c);
  const FieldElem& at(size_t r, size_t c) const;

  static Matrix identity(const Field* f, size_t n);

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  std::vector<FieldElem> row(size_t r) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  void swap_rows(size_t a, size_t b);
  void scale_row(size_t r, const FieldElem& c);
  /// row[dst] += c * row[src]
  void add_scaled_row(size_t dst, size_t src, const FieldElem& c);

  std::string str() const;

 private:
  const Field* f_;
  size_t rows_, cols_;
  std::vector<FieldElem> a_;
};

struct RrefResult {
  Matrix reduced;
  size_t rank;
  std::vector<size_t> pivots;  // pivot column per pivot row
};

RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

/// Basis of {x : M x^T = 0} as rows, in the canonical free-variable-unit
/// form derived from the RREF (free columns in ascending order). May have
/// zero rows.
Matrix null_space(const Matrix& m);

bool row_span_contains(const Matrix& m, const std::vector<FieldElem>& v);
/// Row spaces compared via their canonical RREF.
bool span_equal(const Matrix& a, const Matrix& b);

}  // namespace tgrs
