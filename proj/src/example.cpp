#include "tgrs/example.hpp"

#include <algorithm>
#include <numeric>

#include "tgrs/subsets.hpp"

namespace tgrs {
namespace {

// smallest prime factor, or 0 if q < 2
int smallest_prime_factor(int q) {
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return d;
  return q;
}

// A size-k subset of {0..q-2} with the given exponent sum mod q-1: start
// from {0..k-1} and greedily raise elements from the top, keeping them
// distinct and below q-1.
std::vector<int> exponent_subset_with_sum(int q, int k, int want) {
  const int ord = q - 1;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  int have = (k * (k - 1) / 2) % ord;
  int delta = ((want - have) % ord + ord) % ord;
  for (int j = k - 1; j >= 0 && delta > 0; --j) {
    int cap = (ord - 1) - (k - 1 - j);  // leave room for the entries above
    int raise = std::min(delta, cap - s[j]);
    s[j] += raise;
    delta -= raise;
  }
  if (delta != 0) fail(Errc::internal_inconsistency, "exponent sum not reachable");
  return s;
}

}  // namespace

SubfieldExampleReport build_subfield_example(int q) {
  if (q < 5 || q > 127 || q % 2 == 0)
    fail(Errc::invalid_params, "q must be an odd prime power with 5 <= q <= 127");
  const int p = smallest_prime_factor(q);
  int e = 0;
  for (int t = q; t > 1; t /= p) {
    if (t % p != 0) fail(Errc::invalid_params, "q must be a prime power");
    ++e;
  }

  SubfieldExampleReport rep;
  rep.q = q;
  FieldPtr f = Field::make(static_cast<uint64_t>(p), static_cast<uint32_t>(2 * e));
  const uint32_t big = f->q();  // q^2
  if (static_cast<uint64_t>(q) * q != big)
    fail(Errc::internal_inconsistency, "field size mismatch");

  // embedded F_q^*: the order-(q-1) subgroup, generated by zeta = g^{q+1};
  // D lists its elements in canonical (coordinate-lex) order
  FieldElem g = f->primitive_element();
  FieldElem zeta = g.pow(q + 1);
  std::vector<FieldElem> pts;
  FieldElem cur = f->one();
  for (int i = 0; i < q - 1; ++i) {
    pts.push_back(cur);
    cur = cur * zeta;
  }
  if (cur != f->one()) fail(Errc::internal_inconsistency, "subfield generator order mismatch");
  std::sort(pts.begin(), pts.end(), lex_less);
  EvaluationSet d(f, pts);

  const int n = q - 1;
  const int k = (q - 1) / 2;
  rep.n = n;
  rep.k = k;
  rep.twist = k - 1;
  rep.subfield_generator = zeta;

  std::vector<FieldElem> w = dual_weights(d);
  std::vector<FieldElem> scaling;
  scaling.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    auto r = (w[i] * pts[i]).sqrt();
    if (!r) fail(Errc::internal_inconsistency, "w_i alpha_i is not a square in GF(q^2)");
    scaling.push_back(*r);
  }
  FieldElem eta = g.pow((static_cast<long long>(big) - 1) / 4);
  if (eta * eta != -f->one()) fail(Errc::internal_inconsistency, "eta^2 != -1");

  TgrsParams params(d, k, k - 1, eta, std::move(scaling));
  rep.bundle = bundle_from_params(params);
  rep.certificate = self_dual_check(params);

  // prescribed witness exponents (paper's explicit sets) for q = 1 (mod 4)
  if (q % 4 == 1) {
    if (q % 8 == 5)
      for (int s = 1; s <= (q - 1) / 2; ++s) rep.prescribed_exponents.push_back(s);
    else
      for (int s = 0; s <= (q - 3) / 2; ++s) rep.prescribed_exponents.push_back(s);
    long long sum = 0;
    for (int s : rep.prescribed_exponents) sum += s;
    rep.prescribed_sum_ok = sum % (q - 1) == 3LL * (q - 1) / 4 % (q - 1);
  }

  // classification: run the subset search when it fits its guards, otherwise
  // decide by subfield membership (products of points lie in F_q; eta does
  // not for q = 3 mod 4) and construct the witness from exponent sums
  const uint64_t cap = uint64_t(1) << 22;
  uint64_t enum_work = binomial_capped(static_cast<uint64_t>(n), static_cast<uint64_t>(k), cap);
  uint64_t mitm_work = 0;
  for (int ka = 0; ka <= k; ++ka) {
    int kb = k - ka;
    int na = (n + 1) / 2, nb = n / 2;
    if (ka > na || kb > nb) continue;
    mitm_work += binomial_capped(na, ka, cap) + binomial_capped(nb, kb, cap);
    if (mitm_work > cap) break;
  }
  if (enum_work <= cap || mitm_work <= cap) {
    rep.distance = classify_distance(params);
  } else {
    rep.structural_path = true;
    FieldElem target = (k % 2 == 0 ? f->one() : -f->one()) * eta;
    bool in_subfield = target.pow(q - 1) == f->one();
    if (!in_subfield) {
      rep.distance.d = n - k + 1;
      rep.distance.cls = DistanceClass::mds;
    } else {
      // solve the exponent-sum congruence directly and certify by product;
      // target = zeta^t with t = log_g(target) / (q+1), since zeta = g^{q+1}
      uint64_t full_log = dlog(target, g);
      if (full_log % (q + 1) != 0)
        fail(Errc::internal_inconsistency, "target not in the subfield subgroup");
      uint64_t texp = full_log / (q + 1);
      auto exps = exponent_subset_with_sum(q, k, static_cast<int>(texp % (q - 1)));
      std::vector<FieldElem> witness;
      FieldElem prod = f->one();
      for (int s : exps) {
        FieldElem el = zeta.pow(s);
        witness.push_back(el);
        prod = prod * el;
      }
      if (prod != target)
        fail(Errc::internal_inconsistency, "constructed witness product mismatch");
      std::sort(witness.begin(), witness.end(), lex_less);
      rep.distance.d = n - k;
      rep.distance.cls = DistanceClass::near_mds;
      rep.distance.witness = std::move(witness);
    }
  }
  return rep;
}

}  // namespace tgrs
