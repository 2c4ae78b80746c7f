#pragma once
// Exact arithmetic in GF(p^m). Elements live in the polynomial basis modulo
// an explicit irreducible polynomial; the field precomputes exp/log tables
// for its multiplicative group (q <= 2^16 throughout), which makes mul, inv,
// pow, sqrt and dlog cheap table lookups. Fields are immutable after
// construction and every operation is a pure function, so values can be
// shared freely across threads.
//
// Canonical element order is coordinate-lexicographic on (c0,...,c_{m-1}),
// constant term first. Ties in sqrt and the choice of primitive element are
// broken by this order.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgrs/error.hpp"

namespace tgrs {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A value of GF(p^m), stored as the base-p packing of its coordinates.
/// Holds a non-owning pointer to its field; the field must outlive it.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Field* field, uint32_t packed) : f_(field), v_(packed) {}

  const Field& field() const;
  bool has_field() const { return f_ != nullptr; }
  uint32_t packed() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  std::vector<uint32_t> coeffs() const;
  std::string str() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(long long e) const;
  std::optional<FieldElem> sqrt() const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  void check_same(const FieldElem& o) const;

  const Field* f_ = nullptr;
  uint32_t v_ = 0;
};

/// Coordinate-lexicographic order (c0 compared first). This is the canonical
/// element order used for all deterministic tie-breaks.
bool lex_less(const FieldElem& a, const FieldElem& b);
inline bool operator<(const FieldElem& a, const FieldElem& b) { return lex_less(a, b); }

class Field {
 public:
  /// Build GF(p^m) with the default modulus (first irreducible monic
  /// polynomial in canonical order). Requires p prime and p^m <= 2^16.
  static FieldPtr make(uint64_t p, uint32_t m);
  /// Build GF(p^m) with a caller-supplied modulus (constant term first,
  /// length m+1, monic after reduction mod p). Rejects reducible moduli.
  static FieldPtr make(uint64_t p, uint32_t m, const std::vector<int64_t>& modulus);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  /// Modulus coefficients, constant term first, length m+1.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  FieldElem zero() const { return FieldElem(this, 0); }
  FieldElem one() const { return FieldElem(this, one_); }
  /// Image of an integer under Z -> GF(p^m) (a constant polynomial).
  FieldElem from_int(int64_t value) const;
  /// Element from coordinates (constant term first, reduced mod p).
  FieldElem from_coeffs(const std::vector<int64_t>& coeffs) const;
  FieldElem element(uint32_t packed) const;
  /// rank-th element in canonical (coordinate-lex) order, rank in [0, q).
  FieldElem element_at(uint32_t rank) const;

  /// Canonical primitive element: the coordinate-lex smallest generator of
  /// the multiplicative group.
  FieldElem primitive_element() const { return FieldElem(this, gen_); }

  /// Structural spec equality: same p, m and modulus.
  bool same(const Field& o) const {
    return this == &o || (p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_);
  }

  /// Text form "GF(p^m; modulus=c0,...,cm)".
  std::string str() const;

  // Packed-value arithmetic. These are the raw kernels behind FieldElem and
  // are exposed for enumeration-heavy loops.
  uint32_t add_packed(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_digits(a, b);
  }
  uint32_t neg_packed(uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_digits(a);
  }
  uint32_t sub_packed(uint32_t a, uint32_t b) const { return add_packed(a, neg_packed(b)); }
  uint32_t mul_packed(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv_packed(uint32_t a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
    return exp_[order() - log_[a]];
  }
  uint32_t pow_packed(uint32_t a, long long e) const;
  uint32_t dlog_packed(uint32_t a) const {  // log base the canonical generator
    if (a == 0) fail(Errc::division_by_zero, "dlog of zero");
    return log_[a];
  }

  ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  uint32_t order() const { return q_ - 1; }
  uint32_t add_digits(uint32_t a, uint32_t b) const;
  uint32_t neg_digits(uint32_t a) const;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;  // schoolbook + reduction
  uint32_t pow_slow(uint32_t a, uint64_t e) const;
  void build_tables();
  std::optional<uint32_t> sqrt_packed(uint32_t a) const;
  friend class FieldElem;
  friend uint64_t dlog(const FieldElem& a, const FieldElem& base);

  uint32_t p_ = 0, m_ = 0, q_ = 0;
  uint32_t one_ = 1;
  uint32_t gen_ = 0;                // canonical primitive element, packed
  std::vector<uint32_t> mod_;       // m+1 coeffs, constant first, monic
  std::vector<uint32_t> exp_;       // size 2*(q-1): exp_[i] = packed(g^i)
  std::vector<uint32_t> log_;       // size q, log_[0] unused
};

/// Discrete log of a to the given base; base must generate the full
/// multiplicative group. Returns the least e in [0, q-1) with base^e = a.
uint64_t dlog(const FieldElem& a, const FieldElem& base);

// --- inline FieldElem bodies -----------------------------------------------

inline const Field& FieldElem::field() const {
  if (!f_) fail(Errc::spec_mismatch, "element has no field");
  return *f_;
}

inline void FieldElem::check_same(const FieldElem& o) const {
  if (f_ == o.f_ && f_) return;
  if (!f_ || !o.f_) fail(Errc::spec_mismatch, "element has no field");
  if (!f_->same(*o.f_)) fail(Errc::spec_mismatch, "field spec mismatch");
}

inline FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  return FieldElem(f_, f_->add_packed(v_, o.v_));
}
inline FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  return FieldElem(f_, f_->sub_packed(v_, o.v_));
}
inline FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  return FieldElem(f_, f_->mul_packed(v_, o.v_));
}
inline FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return FieldElem(f_, f_->mul_packed(v_, f_->inv_packed(o.v_)));
}
inline FieldElem FieldElem::operator-() const { return FieldElem(f_, field().neg_packed(v_)); }
inline FieldElem FieldElem::inv() const { return FieldElem(f_, field().inv_packed(v_)); }
inline FieldElem FieldElem::pow(long long e) const { return FieldElem(f_, field().pow_packed(v_, e)); }

inline bool FieldElem::operator==(const FieldElem& o) const {
  if (f_ == o.f_) return v_ == o.v_;
  if (!f_ || !o.f_) return false;
  return f_->same(*o.f_) && v_ == o.v_;
}

}  // namespace tgrs
