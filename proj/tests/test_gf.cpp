#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "tgrs/gf.hpp"

using namespace tgrs;

namespace {

// test-side oracle: multiplicative order by plain repeated multiplication
uint64_t order_oracle(const FieldElem& a) {
  REQUIRE(!a.is_zero());
  FieldElem cur = a;
  uint64_t e = 1;
  while (cur != a.field().one()) {
    cur = cur * a;
    ++e;
  }
  return e;
}

// test-side oracle: inverse by square-and-multiply a^(q-2) built only on mul
FieldElem inv_by_pow(const FieldElem& a) {
  uint64_t e = a.field().q() - 2;
  FieldElem acc = a.field().one(), base = a;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// test-side oracle: extended Euclid on raw coefficient vectors over Z_p,
// completely independent of the library's field arithmetic
using Zp = std::vector<int64_t>;

int zp_deg(const Zp& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

int64_t zp_modinv(int64_t a, int64_t p) {
  int64_t r = a % p;
  for (int64_t x = 1; x < p; ++x)
    if (r * x % p == 1) return x;
  REQUIRE(false);
  return 0;
}

Zp zp_scale(Zp a, int64_t c, int64_t p) {
  for (auto& x : a) x = x * c % p;
  return a;
}

Zp zp_sub_shifted_scaled(Zp a, const Zp& b, int64_t c, int shift, int64_t p) {
  if ((int)a.size() < zp_deg(b) + shift + 1) a.resize(zp_deg(b) + shift + 1, 0);
  for (int i = 0; i <= zp_deg(b); ++i) a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
  return a;
}

// s with s*a = 1 (mod modpoly), via extended Euclid
Zp euclid_inverse(const Zp& a_in, const Zp& mod_in, int64_t p) {
  Zp r0 = mod_in, r1 = a_in;
  Zp s0{0}, s1{1};
  while (zp_deg(r1) >= 0) {
    while (zp_deg(r0) >= zp_deg(r1)) {
      int d = zp_deg(r0) - zp_deg(r1);
      int64_t c = r0[zp_deg(r0)] * zp_modinv(r1[zp_deg(r1)], p) % p;
      r0 = zp_sub_shifted_scaled(r0, r1, c, d, p);
      s0 = zp_sub_shifted_scaled(s0, s1, c, d, p);
      if (zp_deg(r0) < 0) break;
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  // r0 is the gcd (a constant for coprime inputs); normalize to 1
  REQUIRE(zp_deg(r0) == 0);
  Zp inv = zp_scale(s0, zp_modinv(r0[0], p), p);
  // reduce mod the modulus
  while (zp_deg(inv) >= zp_deg(mod_in)) {
    int d = zp_deg(inv) - zp_deg(mod_in);
    int64_t c = inv[zp_deg(inv)] % p;
    inv = zp_sub_shifted_scaled(inv, mod_in, c, d, p);
  }
  return inv;
}

std::vector<FieldElem> all_elements(const Field& f) {
  std::vector<FieldElem> out;
  for (uint32_t i = 0; i < f.q(); ++i) out.push_back(f.element(i));
  return out;
}

}  // namespace

TEST_CASE("field construction and validation") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->q() == 5);
  CHECK(f5->modulus() == std::vector<uint32_t>{0, 1});  // modulus x for prime fields

  auto f8 = Field::make(2, 3, {1, 1, 0, 1});  // x^3 + x + 1
  CHECK(f8->q() == 8);
  // brute-force irreducibility of the modulus: no roots in GF(2) suffices
  // for degree 3 together with no degree-1 cofactor
  for (int64_t x : {0, 1}) CHECK((1 + x + x * x * x) % 2 != 0);

  CHECK_THROWS_AS(Field::make(2, 3, {1, 0, 0, 1}), Error);  // x^3+1 = (x+1)(x^2+x+1)
  try {
    Field::make(2, 3, {1, 0, 0, 1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::reducible_modulus);
  }
  CHECK_THROWS_AS(Field::make(4, 1), Error);   // not prime
  CHECK_THROWS_AS(Field::make(2, 17), Error);  // q > 2^16
  try {
    Field::make(2, 17);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_size);
  }
  CHECK_THROWS_AS(Field::make(6, 1), Error);
}

TEST_CASE("default moduli are valid across supported sizes") {
  // every (p,m) with p^m <= 4096 plus the extreme corners of the table
  std::vector<std::pair<uint64_t, uint32_t>> sizes;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    uint64_t q = p;
    uint32_t m = 1;
    while (q <= 4096) {
      sizes.emplace_back(p, m);
      q *= p;
      ++m;
    }
  }
  sizes.emplace_back(2, 16);
  sizes.emplace_back(3, 10);
  sizes.emplace_back(5, 6);
  sizes.emplace_back(7, 5);
  sizes.emplace_back(13, 4);
  sizes.emplace_back(251, 2);
  for (auto [p, m] : sizes) {
    auto f = Field::make(p, m);
    CHECK(f->modulus().size() == m + 1);
    CHECK(f->modulus()[m] == 1);
    FieldElem g = f->primitive_element();
    CHECK(g.pow(f->q() - 1) == f->one());
    if (f->q() > 2) CHECK(g.pow((f->q() - 1) / 2) != f->one());
  }
}

TEST_CASE("basic arithmetic examples") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->from_int(3) + f5->from_int(4) == f5->from_int(2));
  CHECK(f5->from_int(3) - f5->from_int(4) == f5->from_int(4));
  CHECK(-f5->from_int(2) == f5->from_int(3));

  auto f8 = Field::make(2, 3, {1, 1, 0, 1});
  FieldElem x = f8->from_coeffs({0, 1});
  FieldElem x2 = f8->from_coeffs({0, 0, 1});
  CHECK(x * x2 == f8->from_coeffs({1, 1}));  // x^3 = x + 1

  // spec mismatch across different fields
  CHECK_THROWS_AS(f5->one() + f8->one(), Error);
  // structurally equal fields interoperate
  auto f5b = Field::make(5, 1);
  CHECK(f5->from_int(2) + f5b->from_int(2) == f5->from_int(4));
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  std::vector<FieldPtr> fields;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    uint64_t q = p;
    uint32_t m = 1;
    while (q <= 64) {
      fields.push_back(Field::make(p, m));
      q *= p;
      ++m;
    }
  }
  for (const auto& f : fields) {
    auto elems = all_elements(*f);
    const FieldElem zero = f->zero(), one = f->one();
    for (const auto& a : elems) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      CHECK(a * zero == zero);
      if (!a.is_zero()) {
        CHECK(a * a.inv() == one);
        CHECK(a.pow(f->q() - 1) == one);
        CHECK(a.pow(f->q() - 2) == a.inv());
      }
      for (const auto& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - b == a + (-b));
        for (const auto& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("inverse: table, power and Euclid paths agree") {
  for (auto f : {Field::make(5, 1), Field::make(2, 3, {1, 1, 0, 1}), Field::make(3, 2),
                 Field::make(7, 1), Field::make(2, 5), Field::make(13, 2)}) {
    Zp modp(f->modulus().begin(), f->modulus().end());
    for (uint32_t v = 1; v < f->q(); ++v) {
      FieldElem a = f->element(v);
      FieldElem i1 = a.inv();
      CHECK(i1 == inv_by_pow(a));
      Zp av;
      for (uint32_t c : a.coeffs()) av.push_back(c);
      Zp i2 = euclid_inverse(av, modp, f->p());
      std::vector<int64_t> want;
      for (uint32_t c : i1.coeffs()) want.push_back(c);
      i2.resize(want.size(), 0);
      CHECK(i2 == want);
    }
  }
  auto f5 = Field::make(5, 1);
  CHECK(f5->from_int(4).inv() == f5->from_int(4));
  CHECK(f5->from_int(2).inv() == f5->from_int(3));
  auto f8 = Field::make(2, 3, {1, 1, 0, 1});
  CHECK(f8->from_coeffs({0, 1}).inv() == f8->from_coeffs({1, 0, 1}));  // inv(x) = x^2+1
  CHECK_THROWS_AS(f5->zero().inv(), Error);
}

TEST_CASE("pow") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->from_int(2).pow(3) == f5->from_int(3));
  CHECK(f5->from_int(2).pow(0) == f5->one());
  CHECK(f5->from_int(3).pow(-1) == f5->from_int(3).inv());
  CHECK(f5->from_int(2).pow(-3) == f5->from_int(2).inv().pow(3));
  CHECK(f5->zero().pow(4) == f5->zero());
  CHECK_THROWS_AS(f5->zero().pow(-1), Error);
  for (auto f : {Field::make(3, 2), Field::make(2, 4), Field::make(11, 1)}) {
    for (uint32_t v = 1; v < f->q(); ++v) CHECK(f->element(v).pow(f->q() - 1) == f->one());
  }
}

TEST_CASE("sqrt: characteristic 2 is total, odd characteristic matches the square set") {
  auto f8 = Field::make(2, 3, {1, 1, 0, 1});
  FieldElem x = f8->from_coeffs({0, 1});
  CHECK(x.sqrt().value() == x.pow(4));
  for (uint32_t v = 0; v < f8->q(); ++v) {
    FieldElem a = f8->element(v);
    FieldElem r = a.sqrt().value();
    CHECK(r * r == a);
  }

  auto f5 = Field::make(5, 1);
  // brute-force square set over GF(5)
  std::set<uint32_t> squares;
  for (uint32_t v = 0; v < 5; ++v) squares.insert((v * v) % 5);
  CHECK(squares == std::set<uint32_t>{0, 1, 4});
  CHECK(f5->from_int(4).sqrt().value() == f5->from_int(2));  // lex tie-break: 2, not 3
  CHECK(!f5->from_int(2).sqrt().has_value());
  CHECK(!f5->from_int(3).sqrt().has_value());

  for (auto f : {Field::make(7, 1), Field::make(3, 2), Field::make(5, 2), Field::make(13, 1)}) {
    size_t square_count = 0;
    for (uint32_t v = 0; v < f->q(); ++v) {
      FieldElem a = f->element(v);
      auto r = a.sqrt();
      if (r) {
        ++square_count;
        CHECK(*r * *r == a);
        CHECK(!lex_less(-*r, *r));  // returned root is the lex-min of the pair
      }
    }
    CHECK(square_count == (f->q() - 1) / 2 + 1);
    for (uint32_t v = 0; v < f->q(); ++v) {
      FieldElem r = f->element(v);
      auto s = (r * r).sqrt();
      REQUIRE(s.has_value());
      CHECK((*s == r || *s == -r));
    }
  }
}

TEST_CASE("sqrt: Tonelli-Shanks path above the exhaustive-scan cutoff") {
  auto f = Field::make(11, 4);  // q = 14641 > 4096
  REQUIRE(f->q() > (1u << 12));
  size_t square_count = 0;
  for (uint32_t v = 0; v < f->q(); v += 7) {
    FieldElem a = f->element(v);
    auto r = a.sqrt();
    if (r) CHECK(*r * *r == a);
    if (!a.is_zero() && a.pow((f->q() - 1) / 2) == f->one()) {
      CHECK(r.has_value());
      CHECK(!lex_less(-*r, *r));
      ++square_count;
    }
  }
  CHECK(square_count > 0);
}

TEST_CASE("primitive element and dlog") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->primitive_element() == f5->from_int(2));
  CHECK(order_oracle(f5->from_int(2)) == 4);
  CHECK(order_oracle(f5->from_int(1)) == 1);  // 1 is not a generator

  auto f2 = Field::make(2, 1);
  CHECK(f2->primitive_element() == f2->one());

  auto f7 = Field::make(7, 1);
  CHECK(order_oracle(f7->from_int(2)) == 3);
  CHECK(order_oracle(f7->from_int(3)) == 6);
  CHECK(f7->primitive_element() == f7->from_int(3));

  // the canonical generator is the lex-least element of full order
  for (auto f : {Field::make(3, 2), Field::make(2, 4), Field::make(13, 1)}) {
    FieldElem g = f->primitive_element();
    CHECK(order_oracle(g) == f->q() - 1);
    for (uint32_t rank = 1; rank < f->q(); ++rank) {
      FieldElem cand = f->element_at(rank);
      if (cand == g) break;
      CHECK(order_oracle(cand) != f->q() - 1);
    }
  }

  FieldElem g5 = f5->from_int(2);
  CHECK(dlog(f5->one(), g5) == 0);
  CHECK(dlog(f5->from_int(4), g5) == 2);
  CHECK(dlog(f5->from_int(3), g5) == 3);
  // enumeration oracle: dlog really is the least exponent
  for (auto f : {Field::make(7, 1), Field::make(2, 3, {1, 1, 0, 1}), Field::make(3, 2)}) {
    FieldElem g = f->primitive_element();
    for (uint32_t v = 1; v < f->q(); ++v) {
      FieldElem a = f->element(v);
      uint64_t e = dlog(a, g);
      CHECK(g.pow(e) == a);
      FieldElem cur = f->one();
      uint64_t first = 0;
      while (cur != a) {
        cur = cur * g;
        ++first;
      }
      CHECK(e == first);
    }
    // non-canonical primitive bases work too
    for (uint32_t v = 1; v < f->q(); ++v) {
      FieldElem base = f->element(v);
      if (order_oracle(base) != f->q() - 1) continue;
      for (uint32_t w = 1; w < f->q(); ++w) {
        FieldElem a = f->element(w);
        CHECK(base.pow(dlog(a, base)) == a);
      }
    }
  }
  // non-primitive base is rejected
  auto f13 = Field::make(13, 1);
  CHECK_THROWS_AS(dlog(f13->from_int(5), f13->from_int(3)), Error);  // ord(3) = 3
  CHECK_THROWS_AS(dlog(f13->zero(), f13->from_int(2)), Error);
}

TEST_CASE("element text form and canonical order") {
  auto f5 = Field::make(5, 1);
  CHECK(f5->from_int(3).str() == "3");
  auto f8 = Field::make(2, 3, {1, 1, 0, 1});
  CHECK(f8->from_coeffs({1, 1, 0}).str() == "(1,1,0)");
  CHECK(f8->str() == "GF(2^3; modulus=1,1,0,1)");
  CHECK(f5->str() == "GF(5^1; modulus=0,1)");

  // coordinate-lex: (0,0,1) < (0,1,0) even though packing says otherwise
  FieldElem a = f8->from_coeffs({0, 0, 1});
  FieldElem b = f8->from_coeffs({0, 1, 0});
  CHECK(lex_less(a, b));
  CHECK(a.packed() > b.packed());
  // element_at enumerates in canonical order
  for (uint32_t r = 0; r + 1 < f8->q(); ++r)
    CHECK(lex_less(f8->element_at(r), f8->element_at(r + 1)));
}
