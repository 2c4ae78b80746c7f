#pragma once
// Twisted generalized Reed-Solomon codes: construction, explicit duals,
// self-duality testing and synthesis, distance classification, and the
// brute-force oracles that validate all of it at small scale.
//
// Conventions, used throughout:
//   - points alpha_1..alpha_n are distinct elements of F_q^* (the
//     EvaluationSet), n <= q-1;
//   - the dual weights w_i = 1 / G'(alpha_i) with G(x) = prod (x - alpha)
//     satisfy sum_i w_i alpha_i^j = 0 for j = 0..n-2 and are nonzero at
//     j = n-1 and j = -1;
//   - a TGRS generator has the monomial rows in ascending exponent order
//     with the twisted row (exponent `twist`, plus eta * alpha^{q-2}) last.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgrs/gf.hpp"
#include "tgrs/matrix.hpp"
#include "tgrs/poly.hpp"

namespace tgrs {

/// Ordered set of distinct nonzero evaluation points.
class EvaluationSet {
 public:
  EvaluationSet(FieldPtr field, std::vector<FieldElem> points);

  const Field& field() const { return *f_; }
  const FieldPtr& field_ptr() const { return f_; }
  const std::vector<FieldElem>& points() const { return pts_; }
  size_t n() const { return pts_.size(); }

 private:
  FieldPtr f_;
  std::vector<FieldElem> pts_;
};

/// The tuple (D, k, twist, eta, scaling) defining a TGRS code. Validated on
/// construction: 2 <= k <= n-1, 0 <= twist <= k-1, eta and every scaling
/// entry nonzero.
struct TgrsParams {
  TgrsParams(EvaluationSet points_in, int k_in, int twist_in, FieldElem eta_in,
             std::vector<FieldElem> scaling_in);

  EvaluationSet points;
  int k;
  int twist;
  FieldElem eta;
  std::vector<FieldElem> scaling;

  size_t n() const { return points.n(); }
  const Field& field() const { return points.field(); }

  bool operator==(const TgrsParams& o) const;
};

enum class Provenance { grs, tgrs, dual, raw };

/// A linear code presented by a full-rank generator matrix. The rank is
/// verified on construction.
struct LinearCode {
  LinearCode(FieldPtr field_in, Matrix gen_in, Provenance tag_in);

  FieldPtr field;
  Matrix gen;
  size_t n;
  size_t k;
  Provenance tag;
};

/// Output of the dual recursion: the coefficients b_0..b_{k-twist-1}
/// (b_0 = 1), the constant term, the assembled polynomial
/// f(x) = x^{n-twist-1} + b_1 x^{n-twist-2} + ... + b_{k-twist-1} x^{n-k} + const,
/// and the (n-k) x n parity-check matrix whose first row is
/// (w_i / v_i * f(alpha_i)) and whose remaining rows are the GRS block
/// G_{n-k-1}(D, w / v * alpha).
struct DualParityCheck {
  std::vector<FieldElem> coeffs;  // b_0..b_{k-twist-1}
  FieldElem constant;
  Poly f;
  Matrix h;
  bool boundary;  // true when k = n-1 (empty GRS block; see dual_parity_check)
};

struct SelfDualCertificate {
  bool holds = false;
  std::optional<FieldElem> lambda;  // common value of v_i^2 / (w_i alpha_i)
  FieldElem eta_sq_required;        // -(sum w a^{n-1}) / (sum w a^{-1})
  std::string failure_reason;       // empty when holds
};

enum class DistanceClass { mds, almost_mds, near_mds };

std::string to_string(DistanceClass c);

struct DistanceReport {
  int d = 0;
  DistanceClass cls = DistanceClass::mds;
  std::optional<std::vector<FieldElem>> witness;       // size-k subset, iff d = n-k
  std::optional<std::vector<FieldElem>> dual_witness;  // size-(n-k) subset, twist = k-1 only
};

// --- construction -----------------------------------------------------------

/// w_i = 1 / G'(alpha_i). Asserts the power-sum identities before returning.
std::vector<FieldElem> dual_weights(const EvaluationSet& d);

/// k x n generator of GRS(D, k, scaling), rows scaling_j * alpha_j^i.
LinearCode grs_generator(const EvaluationSet& d, int k, const std::vector<FieldElem>& scaling);

LinearCode tgrs_generator(const TgrsParams& p);

// --- duality ----------------------------------------------------------------

/// Parity check of the TGRS code via the coefficient recursion. Requires
/// k <= n-2 so the GRS block is nonempty; with allow_boundary the k = n-1
/// case emits the single-f-row matrix flagged as boundary. Verifies
/// G H^T = 0 and rank(H) = n-k before returning.
DualParityCheck dual_parity_check(const TgrsParams& p, bool allow_boundary = false);

/// For twist = k-1 and k <= n-2: the dual code as TGRS parameters
/// (D, n-k, n-k-1, eta', w / v * alpha) together with its generator.
/// Verifies span equality with the null space of the source generator.
std::pair<TgrsParams, LinearCode> dual_as_tgrs(const TgrsParams& p);

/// Self-duality test for n = 2k, twist = k-1 instances: condition 1 is
/// v_i^2 = lambda w_i alpha_i for a common lambda, condition 2 is
/// eta^2 = eta_sq_required. Reports failures through the certificate.
SelfDualCertificate self_dual_check(const TgrsParams& p);

/// Characteristic-2 synthesis: v_i = sqrt(w_i alpha_i),
/// eta = sqrt(sum w a^{n-1} / sum w a^{-1}); the result passes
/// self_dual_check by construction (verified).
TgrsParams self_dual_build_char2(const EvaluationSet& d);

// --- distance ---------------------------------------------------------------

/// Theorem-driven classification: d = n-k iff some size-k subset S of D has
/// eta = (-1)^{twist+1} sigma_k(S) / sigma_{k-1-twist}(S) (subsets with a
/// vanishing denominator cannot witness and are skipped). For twist = k-1
/// the criterion reduces to the subset product eta = (-1)^k prod(S) and the
/// search is delegated to subset_product_solve; the dual witness subset of
/// size n-k is computed as well.
DistanceReport classify_distance(const TgrsParams& p);

/// Size-k subset of D (as positions into D) whose element product equals
/// target, or nullopt. Dispatches to direct enumeration when C(n,k) <= 2^20
/// and to the meet-in-the-middle path otherwise.
std::optional<std::vector<size_t>> subset_product_solve(const EvaluationSet& d, int k,
                                                        const FieldElem& target);
/// Direct lexicographic enumeration (also the oracle path).
std::optional<std::vector<size_t>> subset_product_enumerate(const EvaluationSet& d, int k,
                                                            const FieldElem& target);
/// Meet-in-the-middle over index-parity halves of D, via discrete logs
/// modulo q-1 with a size-constrained collision table.
std::optional<std::vector<size_t>> subset_product_mitm(const EvaluationSet& d, int k,
                                                       const FieldElem& target);

// --- oracles ----------------------------------------------------------------

/// Exhaustive minimum weight over nonzero messages (one representative per
/// scalar orbit). Guarded by q^k <= 2^guard_bits. GRS/TGRS/dual-tagged codes
/// early-exit at the n-k lower bound; raw codes only at weight 1.
int min_distance_bruteforce(const LinearCode& c, int guard_bits = 26);

/// Counts A_0..A_n of codewords by Hamming weight. Guarded like the above.
std::vector<uint64_t> weight_distribution(const LinearCode& c, int guard_bits = 26);

/// True iff every k-subset of columns is nonsingular (equivalent to MDS).
bool mds_column_test(const LinearCode& c, uint64_t max_combinations = uint64_t(1) << 20);

/// Checks GRS(D,twist,v) < C < GRS(D,k+1, v/alpha) with both inclusions
/// strict (the twist = 0 left end is the zero code, trivially strict).
bool inclusion_chain_check(const TgrsParams& p);

}  // namespace tgrs
