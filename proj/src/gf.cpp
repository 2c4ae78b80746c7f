#include "tgrs/gf.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace tgrs {
namespace {

constexpr uint64_t kMaxQ = 1u << 16;
constexpr uint32_t kMaxDeg = 16;

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Small dense polynomials over Z_p (coefficients as ints, constant first)
// used only during field construction, before any table exists.
using Pv = std::vector<uint32_t>;

int pv_deg(const Pv& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

// Remainder of a by a *monic* divisor b, over Z_p.
Pv pv_mod(Pv a, const Pv& b, uint32_t p) {
  int db = pv_deg(b);
  for (int da = pv_deg(a); da >= db; da = pv_deg(a)) {
    uint32_t c = a[da];
    for (int i = 0; i <= db; ++i) {
      uint64_t t = static_cast<uint64_t>(c) * b[i] % p;
      uint32_t& slot = a[da - db + i];
      slot = static_cast<uint32_t>((slot + p - t) % p);
    }
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool pv_irreducible(const Pv& f, uint32_t p) {
  int d = pv_deg(f);
  if (d < 1) return false;
  for (int e = 1; e <= d / 2; ++e) {
    Pv g(e + 1, 0);
    g[e] = 1;
    while (true) {
      if (pv_deg(pv_mod(f, g, p)) < 0) return false;
      int i = 0;
      while (i < e && ++g[i] == p) g[i++] = 0;
      if (i == e) break;
    }
  }
  return true;
}

// First irreducible monic degree-m polynomial, scanning the non-leading
// coefficients (c0,...,c_{m-1}) in coordinate-lex ascending order.
Pv default_modulus(uint32_t p, uint32_t m) {
  Pv f(m + 1, 0);
  f[m] = 1;
  if (m == 1) return f;  // x itself
  while (true) {
    if (pv_irreducible(f, p)) return f;
    int i = static_cast<int>(m) - 1;  // lex order: last coordinate fastest
    while (i >= 0 && ++f[i] == p) f[i--] = 0;
    if (i < 0) fail(Errc::internal_inconsistency, "no irreducible polynomial found");
  }
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Inverse of a modulo n (requires gcd(a, n) = 1; n = 1 maps everything to 0).
uint64_t mod_inverse(uint64_t a, uint64_t n) {
  if (n == 1) return 0;
  int64_t t = 0, nt = 1, r = static_cast<int64_t>(n), nr = static_cast<int64_t>(a % n);
  while (nr != 0) {
    int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (r != 1) fail(Errc::not_primitive, "element is not invertible modulo group order");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(n) : t);
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

uint32_t Field::add_digits(uint32_t a, uint32_t b) const {
  uint32_t out = 0, place = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

uint32_t Field::neg_digits(uint32_t a) const {
  uint32_t out = 0, place = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return out;
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
  std::array<uint64_t, 2 * kMaxDeg> prod{};
  std::array<uint32_t, kMaxDeg> da{}, db{};
  for (uint32_t i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (uint32_t i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (uint32_t j = 0; j < m_; ++j) prod[i + j] += static_cast<uint64_t>(da[i]) * db[j];
  }
  // fold x^m = -(mod_0 + mod_1 x + ... + mod_{m-1} x^{m-1})
  for (int t = 2 * static_cast<int>(m_) - 2; t >= static_cast<int>(m_); --t) {
    uint64_t c = prod[t] % p_;
    if (!c) continue;
    prod[t] = 0;
    for (uint32_t i = 0; i < m_; ++i)
      prod[t - m_ + i] += c * ((p_ - mod_[i]) % p_);
  }
  uint32_t out = 0, place = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    out += static_cast<uint32_t>(prod[i] % p_) * place;
    place *= p_;
  }
  return out;
}

uint32_t Field::pow_slow(uint32_t a, uint64_t e) const {
  uint32_t acc = one_, base = a;
  while (e) {
    if (e & 1) acc = mul_slow(acc, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return acc;
}

void Field::build_tables() {
  const uint32_t ord = order();
  // canonical generator: first element (in coordinate-lex order) whose
  // multiplicative order is exactly q-1
  const auto factors = prime_factors(ord);
  gen_ = 0;
  for (uint32_t rank = 1; rank < q_; ++rank) {
    uint32_t cand = element_at(rank).packed();
    bool ok = true;
    for (uint64_t r : factors)
      if (pow_slow(cand, ord / r) == one_) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = cand;
      break;
    }
  }
  if (gen_ == 0) fail(Errc::internal_inconsistency, "no primitive element found");

  exp_.assign(2 * static_cast<size_t>(ord), 0);
  log_.assign(q_, 0);
  uint32_t cur = one_;
  for (uint32_t i = 0; i < ord; ++i) {
    if (i > 0 && cur == one_) fail(Errc::internal_inconsistency, "generator order too small");
    exp_[i] = cur;
    exp_[i + ord] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, gen_);
  }
  if (cur != one_) fail(Errc::internal_inconsistency, "generator order mismatch");
}

FieldPtr Field::make(uint64_t p, uint32_t m) {
  if (!is_prime(p)) fail(Errc::not_prime, "characteristic must be prime");
  if (m < 1) fail(Errc::invalid_dimension, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) fail(Errc::unsupported_size, "field size exceeds 2^16");
  }
  Pv mod = default_modulus(static_cast<uint32_t>(p), m);
  auto f = FieldPtr(new Field());
  auto* raw = const_cast<Field*>(f.get());
  raw->p_ = static_cast<uint32_t>(p);
  raw->m_ = m;
  raw->q_ = static_cast<uint32_t>(q);
  raw->mod_.assign(mod.begin(), mod.end());
  raw->build_tables();
  return f;
}

FieldPtr Field::make(uint64_t p, uint32_t m, const std::vector<int64_t>& modulus) {
  if (!is_prime(p)) fail(Errc::not_prime, "characteristic must be prime");
  if (m < 1) fail(Errc::invalid_dimension, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) fail(Errc::unsupported_size, "field size exceeds 2^16");
  }
  if (modulus.size() != static_cast<size_t>(m) + 1)
    fail(Errc::reducible_modulus, "modulus must have degree exactly m (m+1 coefficients)");
  Pv mod(m + 1);
  for (size_t i = 0; i <= m; ++i) {
    int64_t c = modulus[i] % static_cast<int64_t>(p);
    if (c < 0) c += static_cast<int64_t>(p);
    mod[i] = static_cast<uint32_t>(c);
  }
  if (mod[m] != 1) fail(Errc::reducible_modulus, "modulus must be monic");
  if (m > 1 && !pv_irreducible(mod, static_cast<uint32_t>(p)))
    fail(Errc::reducible_modulus, "modulus is reducible over GF(p)");
  auto f = FieldPtr(new Field());
  auto* raw = const_cast<Field*>(f.get());
  raw->p_ = static_cast<uint32_t>(p);
  raw->m_ = m;
  raw->q_ = static_cast<uint32_t>(q);
  raw->mod_ = std::move(mod);
  raw->build_tables();
  return f;
}

FieldElem Field::from_int(int64_t value) const {
  int64_t c = value % static_cast<int64_t>(p_);
  if (c < 0) c += p_;
  return FieldElem(this, static_cast<uint32_t>(c));
}

FieldElem Field::from_coeffs(const std::vector<int64_t>& coeffs) const {
  if (coeffs.size() > m_) fail(Errc::index_out_of_range, "too many coordinates for this field");
  uint32_t out = 0, place = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    int64_t c = i < coeffs.size() ? coeffs[i] % static_cast<int64_t>(p_) : 0;
    if (c < 0) c += p_;
    out += static_cast<uint32_t>(c) * place;
    place *= p_;
  }
  return FieldElem(this, out);
}

FieldElem Field::element(uint32_t packed) const {
  if (packed >= q_) fail(Errc::index_out_of_range, "packed value out of range");
  return FieldElem(this, packed);
}

FieldElem Field::element_at(uint32_t rank) const {
  if (rank >= q_) fail(Errc::index_out_of_range, "element rank out of range");
  // rank's base-p digits, most significant first, are (c0,...,c_{m-1})
  uint32_t out = 0, place = 1;
  std::array<uint32_t, kMaxDeg> digits{};
  for (uint32_t i = 0; i < m_; ++i) {
    digits[i] = rank % p_;  // digits[0] = c_{m-1}
    rank /= p_;
  }
  for (uint32_t i = 0; i < m_; ++i) {
    out += digits[m_ - 1 - i] * place;
    place *= p_;
  }
  return FieldElem(this, out);
}

uint32_t Field::pow_packed(uint32_t a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return one_;
    fail(Errc::division_by_zero, "negative power of zero");
  }
  const int64_t ord = order();
  int64_t r = e % ord;
  if (r < 0) r += ord;
  return exp_[static_cast<uint64_t>(log_[a]) * static_cast<uint64_t>(r) % ord];
}

std::optional<uint32_t> Field::sqrt_packed(uint32_t a) const {
  if (a == 0) return 0;
  if (p_ == 2) return pow_packed(a, q_ / 2);  // Frobenius inverse, always exists
  const uint32_t ord = order();
  if (pow_packed(a, ord / 2) != one_) return std::nullopt;  // non-residue
  uint32_t r;
  if (q_ <= (1u << 12)) {
    // exhaustive scan in canonical order; the first hit is the lex-min root
    for (uint32_t rank = 0; rank < q_; ++rank) {
      uint32_t c = element_at(rank).packed();
      if (mul_packed(c, c) == a) return c;
    }
    fail(Errc::internal_inconsistency, "residue has no root");
  }
  // Tonelli-Shanks on the cyclic group of order q-1 = 2^s * t
  uint32_t s = 0;
  uint32_t t = ord;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  uint32_t z = 0;  // first non-residue in canonical order
  for (uint32_t rank = 1; rank < q_; ++rank) {
    uint32_t c = element_at(rank).packed();
    if (pow_packed(c, ord / 2) != one_) {
      z = c;
      break;
    }
  }
  uint32_t mexp = s;
  uint32_t c = pow_packed(z, t);
  uint32_t x = pow_packed(a, (t + 1) / 2);
  uint32_t b = pow_packed(a, t);
  while (b != one_) {
    uint32_t i = 0, bb = b;
    while (bb != one_) {
      bb = mul_packed(bb, bb);
      ++i;
    }
    uint32_t gpow = c;
    for (uint32_t j = 0; j + i + 1 < mexp; ++j) gpow = mul_packed(gpow, gpow);
    x = mul_packed(x, gpow);
    c = mul_packed(gpow, gpow);
    b = mul_packed(b, c);
    mexp = i;
  }
  r = x;
  uint32_t other = neg_packed(r);
  return lex_less(FieldElem(this, other), FieldElem(this, r)) ? other : r;
}

std::string Field::str() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << m_ << "; modulus=";
  for (size_t i = 0; i < mod_.size(); ++i) {
    if (i) os << ",";
    os << mod_[i];
  }
  os << ")";
  return os.str();
}

std::vector<uint32_t> FieldElem::coeffs() const {
  const Field& f = field();
  std::vector<uint32_t> out(f.m());
  uint32_t v = v_;
  for (uint32_t i = 0; i < f.m(); ++i) {
    out[i] = v % f.p();
    v /= f.p();
  }
  return out;
}

std::string FieldElem::str() const {
  const Field& f = field();
  if (f.m() == 1) return std::to_string(v_);
  auto cs = coeffs();
  std::string out = "(";
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cs[i]);
  }
  out += ")";
  return out;
}

std::optional<FieldElem> FieldElem::sqrt() const {
  auto r = field().sqrt_packed(v_);
  if (!r) return std::nullopt;
  return FieldElem(f_, *r);
}

bool lex_less(const FieldElem& a, const FieldElem& b) {
  const Field& f = a.field();
  if (!f.same(b.field())) fail(Errc::spec_mismatch, "field spec mismatch");
  if (f.m() == 1) return a.packed() < b.packed();
  uint32_t va = a.packed(), vb = b.packed();
  for (uint32_t i = 0; i < f.m(); ++i) {
    uint32_t da = va % f.p(), db = vb % f.p();
    if (da != db) return da < db;
    va /= f.p();
    vb /= f.p();
  }
  return false;
}

uint64_t dlog(const FieldElem& a, const FieldElem& base) {
  const Field& f = a.field();
  if (!f.same(base.field())) fail(Errc::spec_mismatch, "field spec mismatch");
  if (a.is_zero() || base.is_zero()) fail(Errc::division_by_zero, "dlog of/with zero");
  const uint64_t ord = f.q() - 1;
  uint64_t la = f.dlog_packed(a.packed());
  uint64_t lb = f.dlog_packed(base.packed());
  if (ord <= 1) return 0;
  if (gcd_u64(lb, ord) != 1) fail(Errc::not_primitive, "base is not a primitive element");
  return la * mod_inverse(lb, ord) % ord;
}

}  // namespace tgrs
