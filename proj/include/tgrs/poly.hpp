#pragma once
// Dense polynomials over a field, constant term first, eagerly normalized
// (no trailing zero coefficients; the zero polynomial stores nothing and
// reports degree -1).

#include <string>
#include <vector>

#include "tgrs/gf.hpp"

namespace tgrs {

class Poly {
 public:
  explicit Poly(const Field* f) : f_(f) {}
  Poly(const Field* f, std::vector<FieldElem> coeffs);

  /// Monic polynomial with the given root multiset (empty list gives 1).
  static Poly from_roots(const Field* f, const std::vector<FieldElem>& roots);

  const Field& field() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  FieldElem coeff(int i) const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  FieldElem eval(const FieldElem& x) const;
  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const FieldElem& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void normalize();
  const Field* f_;
  std::vector<FieldElem> c_;
};

/// l-th elementary symmetric polynomial of the listed values (sigma_0 = 1),
/// read off the coefficients of prod (x - s_i).
FieldElem elementary_symmetric(const Field* f, const std::vector<FieldElem>& s, int l);

}  // namespace tgrs
