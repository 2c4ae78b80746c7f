#pragma once
// Text bundle format for code parameters, one record per line:
//
//   GF(5^1; modulus=0,1)
//   D=1,2,3,4
//   k=2
//   l=1
//   eta=1
//   v=1,1,1,1
//
// Elements print as bare residues for prime fields and as coordinate tuples
// "(c0,...,c_{m-1})" otherwise; "g^e" is accepted on input as a power of the
// field's canonical primitive element. An optional "type=grs" line selects a
// plain GRS bundle, which omits the l= and eta= lines. Printing followed by
// parsing is the identity on parsed bundles.

#include <string>
#include <vector>

#include "tgrs/codes.hpp"
#include "tgrs/gf.hpp"

namespace tgrs {

struct Bundle {
  FieldPtr field;
  bool is_grs = false;
  std::vector<FieldElem> points;
  int k = 0;
  int twist = 0;       // unused for grs
  FieldElem eta;       // unused for grs
  std::vector<FieldElem> scaling;
};

/// Parse "GF(p)", "GF(p^m)" or "GF(p^m; modulus=c0,...,cm)".
FieldPtr parse_field_spec(const std::string& text);

/// Parse one element token: bare residue, "(c0,...,c_{m-1})", or "g^e".
FieldElem parse_element(const Field& f, const std::string& token);

/// Comma-separated element list (tuples keep their internal commas).
std::vector<FieldElem> parse_element_list(const Field& f, const std::string& text);

std::string element_list_str(const std::vector<FieldElem>& v);

Bundle parse_bundle_text(const std::string& text);
std::string bundle_to_text(const Bundle& b);

/// The TGRS parameters of a non-GRS bundle (validates invariants).
TgrsParams bundle_params(const Bundle& b);

Bundle bundle_from_params(const TgrsParams& p);

}  // namespace tgrs
