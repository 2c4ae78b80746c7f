#include "tgrs/codes.hpp"

#include <algorithm>
#include <unordered_map>

#include "tgrs/subsets.hpp"

namespace tgrs {
namespace {

// sum_i w_i alpha_i^t (t may be negative; points are nonzero)
FieldElem power_sum(const std::vector<FieldElem>& w, const std::vector<FieldElem>& pts,
                    long long t) {
  FieldElem acc = pts[0].field().zero();
  for (size_t i = 0; i < pts.size(); ++i) acc = acc + w[i] * pts[i].pow(t);
  return acc;
}

FieldElem sign_elem(const Field& f, long long parity) {
  return (parity % 2 == 0) ? f.one() : -f.one();
}

std::vector<FieldElem> pick(const std::vector<FieldElem>& v, const std::vector<size_t>& idx) {
  std::vector<FieldElem> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(v[i]);
  return out;
}

}  // namespace

EvaluationSet::EvaluationSet(FieldPtr field, std::vector<FieldElem> points)
    : f_(std::move(field)), pts_(std::move(points)) {
  if (!f_) fail(Errc::invalid_params, "evaluation set needs a field");
  if (pts_.empty() || pts_.size() > static_cast<size_t>(f_->q()) - 1)
    fail(Errc::invalid_params, "evaluation set size must be in [1, q-1]");
  for (const auto& a : pts_) {
    if (!f_->same(a.field())) fail(Errc::spec_mismatch, "point from a different field");
    if (a.is_zero()) fail(Errc::invalid_params, "evaluation points must be nonzero");
  }
  for (size_t i = 0; i < pts_.size(); ++i)
    for (size_t j = i + 1; j < pts_.size(); ++j)
      if (pts_[i] == pts_[j]) fail(Errc::invalid_params, "evaluation points must be distinct");
}

TgrsParams::TgrsParams(EvaluationSet points_in, int k_in, int twist_in, FieldElem eta_in,
                       std::vector<FieldElem> scaling_in)
    : points(std::move(points_in)),
      k(k_in),
      twist(twist_in),
      eta(std::move(eta_in)),
      scaling(std::move(scaling_in)) {
  const size_t nn = points.n();
  if (k < 2 || static_cast<size_t>(k) > nn - 1)
    fail(Errc::invalid_params, "dimension k must satisfy 2 <= k <= n-1");
  if (twist < 0 || twist > k - 1)
    fail(Errc::invalid_params, "twist position must satisfy 0 <= l <= k-1");
  if (!points.field().same(eta.field())) fail(Errc::spec_mismatch, "eta from a different field");
  if (eta.is_zero()) fail(Errc::invalid_params, "eta must be nonzero");
  if (scaling.size() != nn) fail(Errc::invalid_params, "scaling vector length must equal n");
  for (const auto& v : scaling) {
    if (!points.field().same(v.field()))
      fail(Errc::spec_mismatch, "scaling entry from a different field");
    if (v.is_zero()) fail(Errc::invalid_params, "scaling entries must be nonzero");
  }
}

bool TgrsParams::operator==(const TgrsParams& o) const {
  return k == o.k && twist == o.twist && eta == o.eta && scaling == o.scaling &&
         points.points() == o.points.points() && points.field().same(o.points.field());
}

LinearCode::LinearCode(FieldPtr field_in, Matrix gen_in, Provenance tag_in)
    : field(std::move(field_in)), gen(std::move(gen_in)), n(gen.cols()), k(gen.rows()), tag(tag_in) {
  if (k == 0) fail(Errc::invalid_dimension, "generator must have at least one row");
  if (rank(gen) != k) fail(Errc::invalid_params, "generator matrix is not full rank");
}

std::string to_string(DistanceClass c) {
  switch (c) {
    case DistanceClass::mds: return "MDS";
    case DistanceClass::almost_mds: return "almost-MDS";
    case DistanceClass::near_mds: return "near-MDS";
  }
  return "?";
}

std::vector<FieldElem> dual_weights(const EvaluationSet& d) {
  const Field* f = &d.field();
  const auto& pts = d.points();
  const size_t n = pts.size();
  Poly g = Poly::from_roots(f, pts);
  Poly gd = g.derivative();
  std::vector<FieldElem> w;
  w.reserve(n);
  for (const auto& a : pts) w.push_back(gd.eval(a).inv());
  // power-sum identities: zero up to n-2, nonzero at n-1 and -1
  for (size_t j = 0; j + 2 <= n; ++j)
    if (!power_sum(w, pts, static_cast<long long>(j)).is_zero())
      fail(Errc::internal_inconsistency, "dual weight power sum did not vanish");
  if (power_sum(w, pts, static_cast<long long>(n) - 1).is_zero() ||
      power_sum(w, pts, -1).is_zero())
    fail(Errc::internal_inconsistency, "boundary power sum vanished");
  return w;
}

LinearCode grs_generator(const EvaluationSet& d, int k, const std::vector<FieldElem>& scaling) {
  const size_t n = d.n();
  if (k < 1 || static_cast<size_t>(k) > n)
    fail(Errc::invalid_dimension, "GRS dimension must satisfy 1 <= k <= n");
  if (scaling.size() != n) fail(Errc::invalid_params, "scaling vector length must equal n");
  const Field* f = &d.field();
  Matrix g(f, static_cast<size_t>(k), n);
  for (size_t j = 0; j < n; ++j) {
    FieldElem cur = scaling[j];
    if (cur.is_zero()) fail(Errc::invalid_params, "scaling entries must be nonzero");
    for (size_t i = 0; i < static_cast<size_t>(k); ++i) {
      g.at(i, j) = cur;
      cur = cur * d.points()[j];
    }
  }
  return LinearCode(d.field_ptr(), std::move(g), Provenance::grs);
}

LinearCode tgrs_generator(const TgrsParams& p) {
  const size_t n = p.n();
  const Field* f = &p.field();
  Matrix g(f, static_cast<size_t>(p.k), n);
  for (size_t j = 0; j < n; ++j) {
    const FieldElem& a = p.points.points()[j];
    size_t row = 0;
    for (int i = 0; i < p.k; ++i) {
      if (i == p.twist) continue;
      g.at(row++, j) = p.scaling[j] * a.pow(i);
    }
    // twisted row last: v_j (alpha_j^twist + eta alpha_j^{q-2})
    g.at(row, j) = p.scaling[j] * (a.pow(p.twist) + p.eta * a.pow(f->q() - 2));
  }
  return LinearCode(p.points.field_ptr(), std::move(g), Provenance::tgrs);
}

DualParityCheck dual_parity_check(const TgrsParams& p, bool allow_boundary) {
  const size_t n = p.n();
  const int k = p.k;
  const bool boundary = static_cast<size_t>(k) == n - 1;
  if (boundary && !allow_boundary)
    fail(Errc::invalid_params,
         "k = n-1 boundary: the GRS block of the parity check is empty (opt in explicitly)");
  const Field* f = &p.field();
  const auto& pts = p.points.points();
  std::vector<FieldElem> w = dual_weights(p.points);

  FieldElem s_top = power_sum(w, pts, static_cast<long long>(n) - 1);
  FieldElem s_bot = power_sum(w, pts, -1);

  // b_j = -( sum_{r<j} b_r S_{n+j-1-r} ) / S_{n-1}, j = 1..k-twist-1
  std::vector<FieldElem> b{f->one()};
  for (int j = 1; j <= k - p.twist - 1; ++j) {
    FieldElem num = f->zero();
    for (int r = 0; r < j; ++r)
      num = num + b[r] * power_sum(w, pts, static_cast<long long>(n) + j - 1 - r);
    b.push_back(-(num / s_top));
  }
  FieldElem constant = -(s_top / (p.eta * s_bot));

  // f(x) = x^{n-twist-1} + b_1 x^{n-twist-2} + ... + b_{k-twist-1} x^{n-k} + constant
  std::vector<FieldElem> fc(n - p.twist, f->zero());
  fc[n - p.twist - 1] = f->one();
  for (int j = 1; j <= k - p.twist - 1; ++j) fc[n - p.twist - 1 - j] = b[j];
  fc[0] = constant;
  Poly fx(f, std::move(fc));

  Matrix h(f, n - k, n);
  for (size_t j = 0; j < n; ++j) {
    FieldElem wv = w[j] / p.scaling[j];
    h.at(0, j) = wv * fx.eval(pts[j]);
    FieldElem cur = wv * pts[j];
    for (size_t i = 1; i < n - k; ++i) {
      h.at(i, j) = cur;
      cur = cur * pts[j];
    }
  }

  LinearCode code = tgrs_generator(p);
  if (!(code.gen * h.transpose()).is_zero())
    fail(Errc::internal_inconsistency, "parity check is not orthogonal to the generator");
  if (rank(h) != n - k) fail(Errc::internal_inconsistency, "parity check rank deficient");
  return DualParityCheck{std::move(b), constant, std::move(fx), std::move(h), boundary};
}

std::pair<TgrsParams, LinearCode> dual_as_tgrs(const TgrsParams& p) {
  const size_t n = p.n();
  if (p.twist != p.k - 1) fail(Errc::invalid_params, "TGRS dual form requires twist = k-1");
  if (static_cast<size_t>(p.k) > n - 2)
    fail(Errc::invalid_params, "TGRS dual form requires k <= n-2 (dual dimension >= 2)");
  const auto& pts = p.points.points();
  std::vector<FieldElem> w = dual_weights(p.points);
  FieldElem s_top = power_sum(w, pts, static_cast<long long>(n) - 1);
  FieldElem s_bot = power_sum(w, pts, -1);
  FieldElem eta_dual = -(s_top / (p.eta * s_bot));
  std::vector<FieldElem> scaling_dual;
  scaling_dual.reserve(n);
  for (size_t i = 0; i < n; ++i) scaling_dual.push_back(w[i] * pts[i] / p.scaling[i]);

  TgrsParams dual(p.points, static_cast<int>(n) - p.k, static_cast<int>(n) - p.k - 1, eta_dual,
                  std::move(scaling_dual));
  LinearCode code = tgrs_generator(dual);
  if (!span_equal(code.gen, null_space(tgrs_generator(p).gen)))
    fail(Errc::internal_inconsistency, "TGRS dual span does not match the null space");
  return {std::move(dual), std::move(code)};
}

SelfDualCertificate self_dual_check(const TgrsParams& p) {
  const size_t n = p.n();
  const auto& pts = p.points.points();
  std::vector<FieldElem> w = dual_weights(p.points);
  FieldElem s_top = power_sum(w, pts, static_cast<long long>(n) - 1);
  FieldElem s_bot = power_sum(w, pts, -1);

  SelfDualCertificate cert;
  cert.eta_sq_required = -(s_top / s_bot);
  if (n != 2 * static_cast<size_t>(p.k)) {
    cert.failure_reason = "length n != 2k";
    return cert;
  }
  if (p.twist != p.k - 1) {
    cert.failure_reason = "twist position l != k-1";
    return cert;
  }
  FieldElem lambda = p.scaling[0] * p.scaling[0] / (w[0] * pts[0]);
  for (size_t i = 1; i < n; ++i) {
    if (p.scaling[i] * p.scaling[i] / (w[i] * pts[i]) != lambda) {
      cert.failure_reason = "condition 1: v_i^2 / (u_i alpha_i) is not constant";
      return cert;
    }
  }
  cert.lambda = lambda;
  if (p.eta * p.eta != cert.eta_sq_required) {
    cert.failure_reason = "condition 2: eta^2 != -(sum u a^{n-1})/(sum u a^{-1})";
    return cert;
  }
  cert.holds = true;
  return cert;
}

TgrsParams self_dual_build_char2(const EvaluationSet& d) {
  const Field* f = &d.field();
  if (f->p() != 2) fail(Errc::wrong_characteristic, "synthesis requires characteristic 2");
  const size_t n = d.n();
  if (n % 2 != 0) fail(Errc::odd_length, "length must be even");
  if (n < 4) fail(Errc::invalid_dimension, "length must be at least 4 (k >= 2)");
  const int k = static_cast<int>(n) / 2;
  const auto& pts = d.points();
  std::vector<FieldElem> w = dual_weights(d);
  std::vector<FieldElem> scaling;
  scaling.reserve(n);
  for (size_t i = 0; i < n; ++i) scaling.push_back((w[i] * pts[i]).sqrt().value());
  FieldElem s_top = power_sum(w, pts, static_cast<long long>(n) - 1);
  FieldElem s_bot = power_sum(w, pts, -1);
  FieldElem eta = (s_top / s_bot).sqrt().value();
  TgrsParams p(d, k, k - 1, eta, std::move(scaling));
  if (!self_dual_check(p).holds)
    fail(Errc::internal_inconsistency, "characteristic-2 synthesis failed the self-dual check");
  return p;
}

std::optional<std::vector<size_t>> subset_product_enumerate(const EvaluationSet& d, int k,
                                                            const FieldElem& target) {
  if (!d.field().same(target.field())) fail(Errc::spec_mismatch, "target from a different field");
  if (target.is_zero()) fail(Errc::invalid_target, "target must be nonzero");
  const size_t n = d.n();
  if (k < 1 || static_cast<size_t>(k) > n)
    fail(Errc::invalid_params, "subset size out of range");
  if (binomial_capped(n, static_cast<uint64_t>(k), uint64_t(1) << 26) > (uint64_t(1) << 26))
    fail(Errc::too_large, "subset enumeration exceeds the search guard");
  const auto& pts = d.points();
  std::vector<size_t> c;
  first_combination(c, n, static_cast<size_t>(k));
  do {
    FieldElem prod = d.field().one();
    for (size_t i : c) prod = prod * pts[i];
    if (prod == target) return c;
  } while (next_combination(c, n));
  return std::nullopt;
}

std::optional<std::vector<size_t>> subset_product_mitm(const EvaluationSet& d, int k,
                                                       const FieldElem& target) {
  if (!d.field().same(target.field())) fail(Errc::spec_mismatch, "target from a different field");
  if (target.is_zero()) fail(Errc::invalid_target, "target must be nonzero");
  const Field& f = d.field();
  const size_t n = d.n();
  if (k < 1 || static_cast<size_t>(k) > n)
    fail(Errc::invalid_params, "subset size out of range");

  const uint64_t ord = f.q() - 1;
  FieldElem g = f.primitive_element();
  std::vector<uint64_t> e(n);
  for (size_t i = 0; i < n; ++i) e[i] = dlog(d.points()[i], g);
  const uint64_t t = dlog(target, g);

  std::vector<size_t> half_a, half_b;  // positions, split by index parity
  for (size_t i = 0; i < n; ++i) (i % 2 ? half_b : half_a).push_back(i);

  // feasibility guard over all size splits
  uint64_t work = 0;
  const uint64_t cap = uint64_t(1) << 26;
  for (int ka = 0; ka <= k; ++ka) {
    int kb = k - ka;
    if (ka > static_cast<int>(half_a.size()) || kb < 0 || kb > static_cast<int>(half_b.size()))
      continue;
    work += binomial_capped(half_a.size(), static_cast<uint64_t>(ka), cap);
    work += binomial_capped(half_b.size(), static_cast<uint64_t>(kb), cap);
    if (work > cap) fail(Errc::too_large, "meet-in-the-middle exceeds the search guard");
  }

  std::optional<std::vector<size_t>> best;
  for (int ka = 0; ka <= k; ++ka) {
    const int kb = k - ka;
    if (ka > static_cast<int>(half_a.size()) || kb < 0 || kb > static_cast<int>(half_b.size()))
      continue;
    // residue -> lex-first kb-subset of half_b (positions); lex enumeration
    // makes the first insertion the lex-min entry for its residue
    std::unordered_map<uint64_t, std::vector<size_t>> table;
    std::vector<size_t> cb;
    first_combination(cb, half_b.size(), static_cast<size_t>(kb));
    do {
      uint64_t s = 0;
      std::vector<size_t> posb;
      posb.reserve(cb.size());
      for (size_t i : cb) {
        s = (s + e[half_b[i]]) % ord;
        posb.push_back(half_b[i]);
      }
      table.emplace(s, std::move(posb));
    } while (next_combination(cb, half_b.size()));

    std::vector<size_t> ca;
    first_combination(ca, half_a.size(), static_cast<size_t>(ka));
    do {
      uint64_t s = 0;
      for (size_t i : ca) s = (s + e[half_a[i]]) % ord;
      uint64_t need = (t + ord - s) % ord;
      auto it = table.find(need);
      if (it != table.end()) {
        std::vector<size_t> cand;
        cand.reserve(static_cast<size_t>(k));
        for (size_t i : ca) cand.push_back(half_a[i]);
        cand.insert(cand.end(), it->second.begin(), it->second.end());
        std::sort(cand.begin(), cand.end());
        if (!best || cand < *best) best = std::move(cand);
      }
    } while (next_combination(ca, half_a.size()));
  }
  return best;
}

std::optional<std::vector<size_t>> subset_product_solve(const EvaluationSet& d, int k,
                                                        const FieldElem& target) {
  const uint64_t enum_cap = uint64_t(1) << 20;
  if (binomial_capped(d.n(), static_cast<uint64_t>(k), enum_cap) <= enum_cap)
    return subset_product_enumerate(d, k, target);
  return subset_product_mitm(d, k, target);
}

DistanceReport classify_distance(const TgrsParams& p) {
  const size_t n = p.n();
  const int k = p.k;
  const Field& f = p.field();
  const auto& pts = p.points.points();

  std::optional<std::vector<size_t>> s_pos;
  if (p.twist == k - 1) {
    // criterion specializes to the subset product eta = (-1)^k prod(S)
    FieldElem target = sign_elem(f, k) * p.eta;
    s_pos = subset_product_solve(p.points, k, target);
  } else {
    if (binomial_capped(n, static_cast<uint64_t>(k), uint64_t(1) << 26) > (uint64_t(1) << 26))
      fail(Errc::too_large, "subset criterion search exceeds the guard");
    FieldElem sign = sign_elem(f, p.twist + 1);
    std::vector<size_t> c;
    first_combination(c, n, static_cast<size_t>(k));
    do {
      Poly rp = Poly::from_roots(&f, pick(pts, c));
      // sigma_l(S) = (-1)^l coeff_{k-l}
      FieldElem sig_k = sign_elem(f, k) * rp.coeff(0);
      int low = k - 1 - p.twist;
      FieldElem sig_low = sign_elem(f, low) * rp.coeff(k - low);
      if (sig_low.is_zero()) continue;  // cannot witness (see classify notes)
      if (p.eta == sign * (sig_k / sig_low)) {
        s_pos = c;
        break;
      }
    } while (next_combination(c, n));
  }

  DistanceReport rep;
  if (!s_pos) {
    rep.d = static_cast<int>(n) - k + 1;
    rep.cls = DistanceClass::mds;
    return rep;
  }
  rep.d = static_cast<int>(n) - k;
  rep.cls = p.twist == k - 1 ? DistanceClass::near_mds : DistanceClass::almost_mds;
  rep.witness = pick(pts, *s_pos);
  if (p.twist == k - 1) {
    // dual witness T of size n-k with eta' = (-1)^{n-k} prod(T)
    std::vector<FieldElem> w = dual_weights(p.points);
    FieldElem s_top = power_sum(w, pts, static_cast<long long>(n) - 1);
    FieldElem s_bot = power_sum(w, pts, -1);
    FieldElem eta_dual = -(s_top / (p.eta * s_bot));
    FieldElem target_dual = sign_elem(f, static_cast<long long>(n) - k) * eta_dual;
    auto t_pos = subset_product_solve(p.points, static_cast<int>(n) - k, target_dual);
    if (t_pos)
      rep.dual_witness = pick(pts, *t_pos);
    else if (static_cast<size_t>(k) <= n - 2)
      fail(Errc::internal_inconsistency,
           "primal witness exists but the dual subset product has no solution");
  }
  return rep;
}

int min_distance_bruteforce(const LinearCode& c, int guard_bits) {
  const Field& f = *c.field;
  const size_t n = c.n, k = c.k;
  const uint64_t cap = uint64_t(1) << guard_bits;
  if (pow_capped(f.q(), k, cap) > cap)
    fail(Errc::too_large, "message space exceeds the brute-force guard");

  std::vector<std::vector<uint32_t>> rows(k, std::vector<uint32_t>(n));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) rows[i][j] = c.gen.at(i, j).packed();

  const int floor_w =
      c.tag == Provenance::raw ? 1 : std::max(1, static_cast<int>(n) - static_cast<int>(k));
  int best = static_cast<int>(n) + 1;

  // one representative per scalar orbit: leading coordinate fixed to 1
  std::vector<uint32_t> msg(k), cw(n);
  for (size_t lead = 0; lead < k && best > floor_w; ++lead) {
    std::fill(msg.begin(), msg.end(), 0);
    msg[lead] = f.one().packed();
    for (size_t j = 0; j < n; ++j) cw[j] = rows[lead][j];
    while (true) {
      int wgt = 0;
      for (size_t j = 0; j < n; ++j) wgt += cw[j] != 0;
      if (wgt < best) {
        best = wgt;
        if (best <= floor_w) break;
      }
      // odometer over coordinates after the leading one
      size_t pos = k;
      while (pos-- > lead + 1) {
        uint32_t old = msg[pos];
        uint32_t next = old + 1 == f.q() ? 0 : old + 1;
        uint32_t delta = f.sub_packed(next, old);
        msg[pos] = next;
        for (size_t j = 0; j < n; ++j)
          cw[j] = f.add_packed(cw[j], f.mul_packed(delta, rows[pos][j]));
        if (next != 0) break;
      }
      if (pos <= lead) break;  // odometer wrapped
    }
  }
  return best;
}

std::vector<uint64_t> weight_distribution(const LinearCode& c, int guard_bits) {
  const Field& f = *c.field;
  const size_t n = c.n, k = c.k;
  const uint64_t cap = uint64_t(1) << guard_bits;
  if (pow_capped(f.q(), k, cap) > cap)
    fail(Errc::too_large, "message space exceeds the brute-force guard");

  std::vector<std::vector<uint32_t>> rows(k, std::vector<uint32_t>(n));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) rows[i][j] = c.gen.at(i, j).packed();

  std::vector<uint64_t> counts(n + 1, 0);
  counts[0] = 1;
  // scalar orbits share a weight; count leading-1 representatives and scale
  std::vector<uint32_t> msg(k), cw(n);
  for (size_t lead = 0; lead < k; ++lead) {
    std::fill(msg.begin(), msg.end(), 0);
    msg[lead] = f.one().packed();
    for (size_t j = 0; j < n; ++j) cw[j] = rows[lead][j];
    while (true) {
      int wgt = 0;
      for (size_t j = 0; j < n; ++j) wgt += cw[j] != 0;
      counts[wgt] += f.q() - 1;
      size_t pos = k;
      while (pos-- > lead + 1) {
        uint32_t old = msg[pos];
        uint32_t next = old + 1 == f.q() ? 0 : old + 1;
        uint32_t delta = f.sub_packed(next, old);
        msg[pos] = next;
        for (size_t j = 0; j < n; ++j)
          cw[j] = f.add_packed(cw[j], f.mul_packed(delta, rows[pos][j]));
        if (next != 0) break;
      }
      if (pos <= lead) break;
    }
  }
  return counts;
}

bool mds_column_test(const LinearCode& c, uint64_t max_combinations) {
  const size_t n = c.n, k = c.k;
  if (binomial_capped(n, k, max_combinations) > max_combinations)
    fail(Errc::too_large, "column subset count exceeds the guard");
  const Field* f = &*c.field;
  std::vector<size_t> cols;
  first_combination(cols, n, k);
  do {
    Matrix sub(f, k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub.at(i, j) = c.gen.at(i, cols[j]);
    if (rank(sub) != k) return false;
  } while (next_combination(cols, n));
  return true;
}

bool inclusion_chain_check(const TgrsParams& p) {
  const size_t n = p.n();
  const Field* f = &p.field();
  LinearCode mid = tgrs_generator(p);

  std::vector<FieldElem> upper_scaling;
  upper_scaling.reserve(n);
  for (size_t i = 0; i < n; ++i) upper_scaling.push_back(p.scaling[i] / p.points.points()[i]);
  LinearCode upper = grs_generator(p.points, p.k + 1, upper_scaling);
  for (size_t i = 0; i < mid.k; ++i)
    if (!row_span_contains(upper.gen, mid.gen.row(i))) return false;

  if (p.twist >= 1) {
    LinearCode lower = grs_generator(p.points, p.twist, p.scaling);
    for (size_t i = 0; i < lower.k; ++i)
      if (!row_span_contains(mid.gen, lower.gen.row(i))) return false;
  }
  // strictness comes from the ranks: twist < k < k+1, all exact by rank checks
  (void)f;
  return true;
}

}  // namespace tgrs
