#include "tgrs/poly.hpp"

#include <sstream>

namespace tgrs {

Poly::Poly(const Field* f, std::vector<FieldElem> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!f_->same(c.field())) fail(Errc::spec_mismatch, "coefficient from a different field");
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Field& Poly::field() const {
  if (!f_) fail(Errc::spec_mismatch, "polynomial has no field");
  return *f_;
}

FieldElem Poly::coeff(int i) const {
  if (i < 0) fail(Errc::index_out_of_range, "negative coefficient index");
  if (static_cast<size_t>(i) >= c_.size()) return f_->zero();
  return c_[i];
}

FieldElem Poly::eval(const FieldElem& x) const {
  if (!f_->same(x.field())) fail(Errc::spec_mismatch, "evaluation point from a different field");
  FieldElem acc = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  std::vector<FieldElem> out;
  out.reserve(c_.size() > 0 ? c_.size() - 1 : 0);
  for (size_t i = 1; i < c_.size(); ++i)
    out.push_back(f_->from_int(static_cast<int64_t>(i)) * c_[i]);
  return Poly(f_, std::move(out));
}

Poly Poly::from_roots(const Field* f, const std::vector<FieldElem>& roots) {
  std::vector<FieldElem> c{f->one()};
  for (const auto& r : roots) {
    if (!f->same(r.field())) fail(Errc::spec_mismatch, "root from a different field");
    c.push_back(f->zero());
    for (size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return Poly(f, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  if (!f_->same(*o.f_)) fail(Errc::spec_mismatch, "field spec mismatch");
  std::vector<FieldElem> out(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < out.size(); ++i) {
    FieldElem a = i < c_.size() ? c_[i] : f_->zero();
    FieldElem b = i < o.c_.size() ? o.c_[i] : f_->zero();
    out[i] = a + b;
  }
  return Poly(f_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (!f_->same(*o.f_)) fail(Errc::spec_mismatch, "field spec mismatch");
  if (c_.empty() || o.c_.empty()) return Poly(f_);
  std::vector<FieldElem> out(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
  return Poly(f_, std::move(out));
}

Poly Poly::scaled(const FieldElem& c) const {
  std::vector<FieldElem> out = c_;
  for (auto& x : out) x = x * c;
  return Poly(f_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].str();
    if (i == 1)
      os << "*x";
    else if (i > 1)
      os << "*x^" << i;
  }
  return os.str();
}

FieldElem elementary_symmetric(const Field* f, const std::vector<FieldElem>& s, int l) {
  if (l < 0 || static_cast<size_t>(l) > s.size())
    fail(Errc::index_out_of_range, "elementary symmetric index out of range");
  Poly p = Poly::from_roots(f, s);
  FieldElem c = p.coeff(static_cast<int>(s.size()) - l);
  return (l % 2 == 0) ? c : -c;
}

}  // namespace tgrs
