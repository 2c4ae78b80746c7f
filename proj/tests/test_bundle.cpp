#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tgrs/bundle.hpp"

using namespace tgrs;

namespace {

const char* kBundle5 =
    "GF(5^1; modulus=0,1)\n"
    "D=1,2,3,4\n"
    "k=2\n"
    "l=1\n"
    "eta=1\n"
    "v=1,1,1,1\n";

}  // namespace

TEST_CASE("field spec parsing") {
  auto f = parse_field_spec("GF(5)");
  CHECK(f->q() == 5);
  CHECK(f->str() == "GF(5^1; modulus=0,1)");

  auto f8 = parse_field_spec("GF(2^3; modulus=1,1,0,1)");
  CHECK(f8->q() == 8);
  CHECK(f8->modulus() == std::vector<uint32_t>{1, 1, 0, 1});

  auto f8d = parse_field_spec("GF(2^3)");
  CHECK(f8d->q() == 8);

  CHECK_THROWS_AS(parse_field_spec("GF[5]"), Error);
  CHECK_THROWS_AS(parse_field_spec("GF(5; junk=1)"), Error);
  CHECK_THROWS_AS(parse_field_spec("GF(x^2)"), Error);
  try {
    parse_field_spec("GF(4)");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_prime);  // validation error, not a parse error
  }
}

TEST_CASE("element token parsing") {
  auto f8 = parse_field_spec("GF(2^3; modulus=1,1,0,1)");
  CHECK(parse_element(*f8, "(1,0,1)") == f8->from_coeffs({1, 0, 1}));
  CHECK(parse_element(*f8, "g^0") == f8->one());
  CHECK(parse_element(*f8, "g^3") == f8->primitive_element().pow(3));
  CHECK(parse_element(*f8, "1") == f8->one());  // integer image works for m > 1

  auto f5 = parse_field_spec("GF(5)");
  CHECK(parse_element(*f5, "7") == f5->from_int(2));
  CHECK(parse_element(*f5, "-1") == f5->from_int(4));
  CHECK_THROWS_AS(parse_element(*f5, ""), Error);
  CHECK_THROWS_AS(parse_element(*f5, "x"), Error);
  CHECK_THROWS_AS(parse_element(*f8, "(1,0)"), Error);   // wrong arity
  CHECK_THROWS_AS(parse_element(*f8, "(1,0,1"), Error);  // unterminated
  CHECK_THROWS_AS(parse_element(*f8, "g^"), Error);

  auto lst = parse_element_list(*f8, "(1,0,0),(0,1,0),g^2");
  REQUIRE(lst.size() == 3);
  CHECK(lst[0] == f8->one());
  CHECK(lst[1] == f8->from_coeffs({0, 1}));
  CHECK(lst[2] == f8->primitive_element().pow(2));
}

TEST_CASE("bundle parse, print, fixpoint") {
  Bundle b = parse_bundle_text(kBundle5);
  CHECK(!b.is_grs);
  CHECK(b.k == 2);
  CHECK(b.twist == 1);
  CHECK(b.eta == b.field->one());
  REQUIRE(b.points.size() == 4);
  CHECK(b.points[2] == b.field->from_int(3));

  TgrsParams p = bundle_params(b);
  CHECK(p.k == 2);
  CHECK(p.n() == 4);

  std::string text = bundle_to_text(b);
  Bundle b2 = parse_bundle_text(text);
  CHECK(bundle_to_text(b2) == text);  // print-parse fixpoint
  CHECK(b2.points == b.points);
  CHECK(b2.scaling == b.scaling);
  CHECK(b2.eta == b.eta);

  // a tuple-syntax bundle over GF(8)
  std::string b8text =
      "GF(2^3; modulus=1,1,0,1)\n"
      "D=(0,1,0),(0,0,1),(1,1,0),(1,0,1)\n"
      "k=2\n"
      "l=1\n"
      "eta=g^1\n"
      "v=(1,0,0),(1,0,0),(1,0,0),(1,0,0)\n";
  Bundle b8 = parse_bundle_text(b8text);
  CHECK(b8.points.size() == 4);
  std::string canon = bundle_to_text(b8);
  CHECK(parse_bundle_text(canon).eta == b8.eta);
  CHECK(bundle_to_text(parse_bundle_text(canon)) == canon);

  // comments and blank lines are tolerated
  Bundle bc = parse_bundle_text("# comment\n\n" + std::string(kBundle5));
  CHECK(bc.k == 2);
}

TEST_CASE("grs bundles") {
  std::string text =
      "GF(5^1; modulus=0,1)\n"
      "type=grs\n"
      "D=1,2,3,4\n"
      "k=2\n"
      "v=1,1,1,1\n";
  Bundle b = parse_bundle_text(text);
  CHECK(b.is_grs);
  CHECK(bundle_to_text(b) == text);
  CHECK_THROWS_AS(bundle_params(b), Error);  // no TGRS params for a GRS bundle
}

TEST_CASE("bundle errors") {
  CHECK_THROWS_AS(parse_bundle_text(""), Error);
  CHECK_THROWS_AS(parse_bundle_text("D=1,2\nk=2\nl=1\neta=1\nv=1,1\n"), Error);  // no field
  CHECK_THROWS_AS(parse_bundle_text("GF(5)\nk=2\nl=1\neta=1\nv=1,1\n"), Error);  // no D
  CHECK_THROWS_AS(parse_bundle_text("GF(5)\nD=1,2\nl=1\neta=1\nv=1,1\n"), Error);
  CHECK_THROWS_AS(parse_bundle_text("GF(5)\nD=1,2\nk=2\neta=1\nv=1,1\n"), Error);
  CHECK_THROWS_AS(parse_bundle_text("GF(5)\nD=1,2\nk=2\nl=1\nv=1,1\n"), Error);
  CHECK_THROWS_AS(parse_bundle_text(std::string(kBundle5) + "zzz=1\n"), Error);
  CHECK_THROWS_AS(parse_bundle_text(std::string(kBundle5) + "GF(5)\n"), Error);  // dup field
  for (const char* bad :
       {"GF(5)\nD=1,2,3,4\nk=two\nl=1\neta=1\nv=1,1,1,1\n",
        "GF(5)\nD=1,(2\nk=2\nl=1\neta=1\nv=1,1,1,1\n", "GF(5)\nnonsense\n"}) {
    try {
      parse_bundle_text(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }
  // parses fine but violates the code invariants
  Bundle b = parse_bundle_text("GF(5)\nD=1,2,3,4\nk=2\nl=1\neta=0\nv=1,1,1,1\n");
  try {
    bundle_params(b);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_params);
    CHECK(std::string(e.what()).find("eta must be nonzero") != std::string::npos);
  }
}

TEST_CASE("round trip through params") {
  Bundle b = parse_bundle_text(kBundle5);
  TgrsParams p = bundle_params(b);
  Bundle b2 = bundle_from_params(p);
  CHECK(bundle_to_text(b2) == bundle_to_text(b));
}
