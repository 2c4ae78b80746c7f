#pragma once
// The canonical self-dual family over GF(q^2): take D = the embedded copy of
// F_q^* (all elements of multiplicative order dividing q-1), k = (q-1)/2,
// twist = k-1, eta a fixed square root of -1, and v_i = sqrt(w_i alpha_i).
// The result is always self-dual; it is MDS exactly when q = 3 (mod 4) and
// near-MDS when q = 1 (mod 4).

#include <vector>

#include "tgrs/bundle.hpp"
#include "tgrs/codes.hpp"

namespace tgrs {

struct SubfieldExampleReport {
  int q = 0;  // subfield size (odd prime power)
  int n = 0, k = 0, twist = 0;
  Bundle bundle;  // the constructed parameters, serializable
  SelfDualCertificate certificate;
  DistanceReport distance;
  bool structural_path = false;  // verdict by subfield membership instead of search
  FieldElem subfield_generator;  // zeta used for exponent bookkeeping
  // prescribed witness exponents for q = 1 (mod 4): {1..(q-1)/2} when
  // q = 5 (mod 8), {0..(q-3)/2} when q = 1 (mod 8); empty otherwise
  std::vector<int> prescribed_exponents;
  bool prescribed_sum_ok = false;  // sum = 3(q-1)/4 (mod q-1)
};

/// Build and classify the subfield example for an odd prime power
/// 5 <= q <= 127. Falls back to a structural classification when the subset
/// search would exceed its guards (only relevant for large q).
SubfieldExampleReport build_subfield_example(int q);

}  // namespace tgrs
