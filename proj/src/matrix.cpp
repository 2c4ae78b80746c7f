#include "tgrs/matrix.hpp"

#include <sstream>

namespace tgrs {

Matrix::Matrix(const Field* f, size_t rows, size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f->zero()) {
  if (cols == 0) fail(Errc::invalid_dimension, "matrix must have at least one column");
}

const Field& Matrix::field() const {
  if (!f_) fail(Errc::spec_mismatch, "matrix has no field");
  return *f_;
}

FieldElem& Matrix::at(size_t r, size_t c) {
  if (r >= rows_ || c >= cols_) fail(Errc::index_out_of_range, "matrix index out of range");
  return a_[r * cols_ + c];
}

const FieldElem& Matrix::at(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_) fail(Errc::index_out_of_range, "matrix index out of range");
  return a_[r * cols_ + c];
}

Matrix Matrix::identity(const Field* f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!f_->same(*o.f_)) fail(Errc::spec_mismatch, "field spec mismatch");
  if (cols_ != o.rows_) fail(Errc::dimension_mismatch, "inner dimensions differ");
  Matrix out(f_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const FieldElem& x = a_[i * cols_ + k];
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        out.a_[i * o.cols_ + j] = out.a_[i * o.cols_ + j] + x * o.a_[k * o.cols_ + j];
    }
  return out;
}

Matrix Matrix::transpose() const {
  if (rows_ == 0) fail(Errc::invalid_dimension, "cannot transpose a rowless matrix");
  Matrix out(f_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<FieldElem> Matrix::row(size_t r) const {
  if (r >= rows_) fail(Errc::index_out_of_range, "row index out of range");
  return std::vector<FieldElem>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

void Matrix::swap_rows(size_t a, size_t b) {
  for (size_t j = 0; j < cols_; ++j) std::swap(a_[a * cols_ + j], a_[b * cols_ + j]);
}

void Matrix::scale_row(size_t r, const FieldElem& c) {
  for (size_t j = 0; j < cols_; ++j) a_[r * cols_ + j] = a_[r * cols_ + j] * c;
}

void Matrix::add_scaled_row(size_t dst, size_t src, const FieldElem& c) {
  if (c.is_zero()) return;
  for (size_t j = 0; j < cols_; ++j)
    a_[dst * cols_ + j] = a_[dst * cols_ + j] + c * a_[src * cols_ + j];
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<size_t> pivots;
  size_t pr = 0;
  for (size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
    size_t sel = r.rows();
    for (size_t i = pr; i < r.rows(); ++i)
      if (!r.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == r.rows()) continue;
    r.swap_rows(sel, pr);
    r.scale_row(pr, r.at(pr, c).inv());
    for (size_t i = 0; i < r.rows(); ++i)
      if (i != pr && !r.at(i, c).is_zero()) r.add_scaled_row(i, pr, -r.at(i, c));
    pivots.push_back(c);
    ++pr;
  }
  return RrefResult{std::move(r), pr, std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix null_space(const Matrix& m) {
  RrefResult rr = rref(m);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.field_ptr(), free_cols.size(), n);
  for (size_t bi = 0; bi < free_cols.size(); ++bi) {
    size_t fc = free_cols[bi];
    basis.at(bi, fc) = m.field().one();
    for (size_t pi = 0; pi < rr.pivots.size(); ++pi)
      basis.at(bi, rr.pivots[pi]) = -rr.reduced.at(pi, fc);
  }
  return basis;
}

bool row_span_contains(const Matrix& m, const std::vector<FieldElem>& v) {
  if (v.size() != m.cols()) fail(Errc::dimension_mismatch, "vector length mismatch");
  RrefResult rr = rref(m);
  std::vector<FieldElem> w = v;
  for (size_t pi = 0; pi < rr.pivots.size(); ++pi) {
    const FieldElem c = w[rr.pivots[pi]];  // by value: the loop below clears this slot
    if (c.is_zero()) continue;
    for (size_t j = 0; j < w.size(); ++j) w[j] = w[j] - c * rr.reduced.at(pi, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool span_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (size_t i = 0; i < ra.rank; ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
  return true;
}

}  // namespace tgrs
