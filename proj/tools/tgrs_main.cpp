// Command-line front end: construct and inspect TGRS codes, compute duals,
// check and synthesize self-dual instances, classify distances, and run the
// brute-force oracles. Exit codes: 0 success, 2 parse error, 3 invariant or
// precondition violation, 4 oracle mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tgrs/bundle.hpp"
#include "tgrs/codes.hpp"
#include "tgrs/example.hpp"

using json = nlohmann::ordered_json;
using namespace tgrs;

namespace {

struct Options {
  std::string format = "text";
  std::string verify = "none";
  bool allow_boundary = false;
  int64_t seed = 0;  // reserved for randomized test generation
};

int guard_bits_from_env() {
  const char* s = std::getenv("TGRS_GUARD_BITS");
  if (!s) return 26;
  try {
    int v = std::stoi(s);
    if (v < 1 || v > 62) fail(Errc::invalid_params, "TGRS_GUARD_BITS out of range");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "TGRS_GUARD_BITS is not an integer");
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LinearCode code_from_bundle(const Bundle& b) {
  if (b.is_grs) {
    EvaluationSet d(b.field, b.points);
    return grs_generator(d, b.k, b.scaling);
  }
  return tgrs_generator(bundle_params(b));
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json elems_json(const std::vector<FieldElem>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json poly_json(const Poly& p) {  // coefficient list, constant term first
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// distance oracle within guards: brute force first, then the column test;
// nullopt when both guards are exceeded. For GRS/TGRS/dual codes a failed
// column test pins d = n-k, since d >= n-k holds for the whole family.
std::optional<int> distance_oracle(const LinearCode& code, int guard_bits) {
  try {
    return min_distance_bruteforce(code, guard_bits);
  } catch (const Error& e) {
    if (e.code() != Errc::too_large) throw;
  }
  try {
    bool mds = mds_column_test(code);
    if (mds) return static_cast<int>(code.n - code.k) + 1;
    if (code.tag != Provenance::raw) return static_cast<int>(code.n - code.k);
    return std::nullopt;  // raw matrix: only an upper bound is certified
  } catch (const Error& e) {
    if (e.code() != Errc::too_large) throw;
  }
  return std::nullopt;
}

int cmd_construct(const Options& opt, const std::string& path) {
  Bundle b = parse_bundle_text(read_input(path));
  LinearCode code = code_from_bundle(b);
  json j;
  j["command"] = "construct";
  j["bundle"] = bundle_to_text(b);
  j["type"] = b.is_grs ? "grs" : "tgrs";
  j["n"] = code.n;
  j["k"] = code.k;
  if (!b.is_grs) {
    j["l"] = b.twist;
    j["eta"] = b.eta.str();
  }
  j["generator"] = matrix_json(code.gen);

  std::ostringstream os;
  os << "field: " << b.field->str() << "\n";
  os << "code: " << (b.is_grs ? "GRS" : "TGRS") << " [n=" << code.n << ",k=" << code.k << "]\n";
  if (!b.is_grs) {
    os << "l: " << b.twist << "\n";
    os << "eta: " << b.eta.str() << "\n";
  }
  os << "generator:\n" << code.gen.str();
  if (opt.verify == "oracle") {
    j["rank"] = rank(code.gen);
    os << "rank: " << rank(code.gen) << "\n";
    if (!b.is_grs) {
      bool chain = inclusion_chain_check(bundle_params(b));
      j["inclusion_chain"] = chain;
      os << "inclusion-chain: " << (chain ? "true" : "false") << "\n";
      if (!chain) {
        emit(opt, j, os.str());
        fail(Errc::oracle_mismatch, "inclusion chain check failed");
      }
    }
  }
  emit(opt, j, os.str());
  return 0;
}

int cmd_dual(const Options& opt, const std::string& path) {
  Bundle b = parse_bundle_text(read_input(path));
  TgrsParams p = bundle_params(b);
  DualParityCheck dw = dual_parity_check(p, opt.allow_boundary);
  json j;
  j["command"] = "dual";
  j["bundle"] = bundle_to_text(b);
  j["b"] = elems_json(dw.coeffs);
  j["f"] = poly_json(dw.f);
  j["h"] = matrix_json(dw.h);
  j["boundary"] = dw.boundary;

  std::ostringstream os;
  os << "field: " << b.field->str() << "\n";
  if (dw.boundary) os << "warning: k = n-1 boundary, parity check is the f-row only\n";
  os << "b: " << element_list_str(dw.coeffs) << "\n";
  os << "f: " << dw.f.str() << "\n";
  os << "H:\n" << dw.h.str();
  if (p.twist == p.k - 1 && static_cast<size_t>(p.k) <= p.n() - 2) {
    auto [pd, cd] = dual_as_tgrs(p);
    j["eta_dual"] = pd.eta.str();
    j["v_dual"] = elems_json(pd.scaling);
    j["dual_bundle"] = bundle_to_text(bundle_from_params(pd));
    os << "eta': " << pd.eta.str() << "\n";
    os << "v': " << element_list_str(pd.scaling) << "\n";
  }
  if (opt.verify == "oracle") {
    bool match = span_equal(dw.h, null_space(tgrs_generator(p).gen));
    j["span_match"] = match;
    os << "span-match: " << (match ? "true" : "false") << "\n";
    if (!match) {
      emit(opt, j, os.str());
      fail(Errc::oracle_mismatch, "parity-check span does not match the null space");
    }
  }
  emit(opt, j, os.str());
  return 0;
}

int cmd_selfdual_check(const Options& opt, const std::string& path) {
  Bundle b = parse_bundle_text(read_input(path));
  TgrsParams p = bundle_params(b);
  if (p.n() != 2 * static_cast<size_t>(p.k))
    fail(Errc::invalid_params, "self-dual check requires n = 2k");
  if (p.twist != p.k - 1) fail(Errc::invalid_params, "self-dual check requires l = k-1");
  SelfDualCertificate cert = self_dual_check(p);
  json j;
  j["command"] = "selfdual-check";
  j["bundle"] = bundle_to_text(b);
  j["holds"] = cert.holds;
  if (cert.lambda) j["lambda"] = cert.lambda->str();
  j["eta_sq_required"] = cert.eta_sq_required.str();
  if (!cert.holds) j["reason"] = cert.failure_reason;

  std::ostringstream os;
  os << "holds: " << (cert.holds ? "true" : "false") << "\n";
  if (cert.lambda) os << "lambda: " << cert.lambda->str() << "\n";
  os << "eta_sq_required: " << cert.eta_sq_required.str() << "\n";
  if (!cert.holds) os << "reason: " << cert.failure_reason << "\n";
  if (opt.verify == "oracle") {
    LinearCode code = tgrs_generator(p);
    bool oracle = p.n() == 2 * static_cast<size_t>(p.k) &&
                  (code.gen * code.gen.transpose()).is_zero();
    bool match = oracle == cert.holds;
    j["oracle_match"] = match;
    os << "oracle-match: " << (match ? "true" : "false") << "\n";
    if (!match) {
      emit(opt, j, os.str());
      fail(Errc::oracle_mismatch, "certificate disagrees with G*G^T");
    }
  }
  emit(opt, j, os.str());
  return 0;
}

int cmd_selfdual_build(const Options& opt, const std::string& path, const std::string& out) {
  // the input needs only the field line and the D= line; full bundles work too
  std::string text = read_input(path);
  FieldPtr field;
  std::string d_line;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    line = line.substr(pos);
    if (line.substr(0, 3) == "GF(") field = parse_field_spec(line);
    if (line.substr(0, 2) == "D=") d_line = line.substr(2);
  }
  if (!field) fail(Errc::parse_error, "missing field line");
  if (d_line.empty()) fail(Errc::parse_error, "missing D= line");
  EvaluationSet d(field, parse_element_list(*field, d_line));
  TgrsParams p = self_dual_build_char2(d);
  Bundle b = bundle_from_params(p);
  std::string btext = bundle_to_text(b);
  if (!out.empty()) {
    std::ofstream of(out);
    if (!of) fail(Errc::invalid_params, "cannot write output file: " + out);
    of << btext;
  }
  json j;
  j["command"] = "selfdual-build";
  j["bundle"] = btext;
  emit(opt, j, out.empty() ? btext : "wrote " + out + "\n");
  return 0;
}

int cmd_classify(const Options& opt, const std::string& path) {
  Bundle b = parse_bundle_text(read_input(path));
  json j;
  j["command"] = "classify";
  j["bundle"] = bundle_to_text(b);
  std::ostringstream os;
  DistanceReport rep;
  LinearCode code = code_from_bundle(b);
  if (b.is_grs) {  // GRS codes are MDS
    rep.d = static_cast<int>(code.n - code.k) + 1;
    rep.cls = DistanceClass::mds;
  } else {
    rep = classify_distance(bundle_params(b));
  }
  j["d"] = rep.d;
  j["class"] = to_string(rep.cls);
  os << "d: " << rep.d << "\n";
  os << "class: " << to_string(rep.cls) << "\n";
  if (rep.witness) {
    j["witness"] = elems_json(*rep.witness);
    os << "witness: " << element_list_str(*rep.witness) << "\n";
  }
  if (rep.dual_witness) {
    j["dual_witness"] = elems_json(*rep.dual_witness);
    os << "dual-witness: " << element_list_str(*rep.dual_witness) << "\n";
  }
  if (opt.verify == "oracle") {
    auto od = distance_oracle(code, guard_bits_from_env());
    if (od) {
      j["oracle_d"] = *od;
      os << "oracle-d: " << *od << "\n";
      if (*od != rep.d) {
        emit(opt, j, os.str());
        fail(Errc::oracle_mismatch, "brute-force distance disagrees with the classification");
      }
    } else {
      j["oracle_d"] = nullptr;
      os << "oracle-d: skipped (guard)\n";
    }
  }
  emit(opt, j, os.str());
  return 0;
}

int cmd_mindist(const Options& opt, const std::string& path) {
  Bundle b = parse_bundle_text(read_input(path));
  LinearCode code = code_from_bundle(b);
  int d = min_distance_bruteforce(code, guard_bits_from_env());
  json j;
  j["command"] = "mindist";
  j["bundle"] = bundle_to_text(b);
  j["d"] = d;
  std::ostringstream os;
  os << "d: " << d << "\n";
  emit(opt, j, os.str());
  return 0;
}

int cmd_weights(const Options& opt, const std::string& path) {
  Bundle b = parse_bundle_text(read_input(path));
  LinearCode code = code_from_bundle(b);
  auto counts = weight_distribution(code, guard_bits_from_env());
  json j;
  j["command"] = "weights";
  j["bundle"] = bundle_to_text(b);
  j["counts"] = counts;
  std::ostringstream os;
  os << "weights: ";
  for (size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  os << "\n";
  emit(opt, j, os.str());
  return 0;
}

int cmd_example(const Options& opt, int q) {
  SubfieldExampleReport rep = build_subfield_example(q);
  json j;
  j["command"] = "example";
  j["q"] = rep.q;
  j["bundle"] = bundle_to_text(rep.bundle);
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["l"] = rep.twist;
  j["eta"] = rep.bundle.eta.str();
  j["self_dual"] = rep.certificate.holds;
  j["class"] = to_string(rep.distance.cls);
  j["d"] = rep.distance.d;
  if (rep.distance.witness) j["witness"] = elems_json(*rep.distance.witness);
  j["classification_path"] = rep.structural_path ? "structural" : "search";

  std::ostringstream os;
  os << "q: " << rep.q << "\n";
  os << "field: " << rep.bundle.field->str() << "\n";
  os << "n: " << rep.n << "\n";
  os << "k: " << rep.k << "\n";
  os << "l: " << rep.twist << "\n";
  os << "eta: " << rep.bundle.eta.str() << "\n";
  os << "self-dual: " << (rep.certificate.holds ? "true" : "false") << "\n";
  os << "class: " << to_string(rep.distance.cls) << "\n";
  os << "d: " << rep.distance.d << "\n";
  if (rep.distance.witness)
    os << "witness: " << element_list_str(*rep.distance.witness) << "\n";
  if (!rep.prescribed_exponents.empty()) {
    json pe = json::array();
    std::ostringstream ps;
    for (size_t i = 0; i < rep.prescribed_exponents.size(); ++i) {
      pe.push_back(rep.prescribed_exponents[i]);
      ps << (i ? "," : "") << rep.prescribed_exponents[i];
    }
    j["paper_witness_exponents"] = pe;
    j["paper_witness_sum_ok"] = rep.prescribed_sum_ok;
    os << "paper-witness-exponents: " << ps.str() << "\n";
    os << "paper-witness-sum-ok: " << (rep.prescribed_sum_ok ? "true" : "false") << "\n";
  }
  os << "classification-path: " << (rep.structural_path ? "structural" : "search") << "\n";

  if (opt.verify == "oracle") {
    TgrsParams p = bundle_params(rep.bundle);
    LinearCode code = tgrs_generator(p);
    bool sd_oracle = (code.gen * code.gen.transpose()).is_zero();
    j["oracle_self_dual"] = sd_oracle;
    os << "oracle-self-dual: " << (sd_oracle ? "true" : "false") << "\n";
    if (sd_oracle != rep.certificate.holds) {
      emit(opt, j, os.str());
      fail(Errc::oracle_mismatch, "self-dual certificate disagrees with G*G^T");
    }
    auto od = distance_oracle(code, guard_bits_from_env());
    if (od) {
      j["oracle_d"] = *od;
      os << "oracle-d: " << *od << "\n";
      if (*od != rep.distance.d) {
        emit(opt, j, os.str());
        fail(Errc::oracle_mismatch, "distance oracle disagrees with the classification");
      }
    } else {
      j["oracle_d"] = nullptr;
      os << "oracle-d: skipped (guard)\n";
    }
  }
  emit(opt, j, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted generalized Reed-Solomon code toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--verify", opt.verify, "verification level")
      ->check(CLI::IsMember({"none", "oracle"}));
  app.add_flag("--allow-boundary", opt.allow_boundary, "allow the k = n-1 dual boundary case");
  app.add_option("--seed", opt.seed, "reserved for randomized test generation");

  std::string path, out;
  int q = 0;

  auto* construct = app.add_subcommand("construct", "print the generator matrix of a bundle");
  construct->add_option("bundle", path, "bundle file (- for stdin)")->required();
  construct->fallthrough();

  auto* dual = app.add_subcommand("dual", "dual parity check via the coefficient recursion");
  dual->add_option("bundle", path)->required();
  dual->fallthrough();

  auto* selfdual = app.add_subcommand("selfdual", "self-duality check / synthesis");
  selfdual->require_subcommand(1);
  selfdual->fallthrough();
  auto* sd_check = selfdual->add_subcommand("check", "evaluate the self-duality conditions");
  sd_check->add_option("bundle", path)->required();
  sd_check->fallthrough();
  auto* sd_build = selfdual->add_subcommand("build", "synthesize a self-dual bundle");
  bool char2 = false;
  sd_build->add_flag("--char2", char2, "characteristic-2 synthesis")->required();
  sd_build->add_option("dspec", path, "file with the field line and D= line")->required();
  sd_build->add_option("--out", out, "write the bundle here instead of stdout");
  sd_build->fallthrough();

  auto* classify = app.add_subcommand("classify", "MDS / near-MDS classification");
  classify->add_option("bundle", path)->required();
  classify->fallthrough();

  auto* mindist = app.add_subcommand("mindist", "brute-force minimum distance");
  mindist->add_option("bundle", path)->required();
  mindist->fallthrough();

  auto* weights = app.add_subcommand("weights", "brute-force weight distribution");
  weights->add_option("bundle", path)->required();
  weights->fallthrough();

  auto* example = app.add_subcommand("example", "self-dual family over GF(q^2)");
  example->add_option("q", q, "odd prime power, 5 <= q <= 127")->required();
  example->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*construct) return cmd_construct(opt, path);
    if (*dual) return cmd_dual(opt, path);
    if (*sd_check) return cmd_selfdual_check(opt, path);
    if (*sd_build) return cmd_selfdual_build(opt, path, out);
    if (*classify) return cmd_classify(opt, path);
    if (*mindist) return cmd_mindist(opt, path);
    if (*weights) return cmd_weights(opt, path);
    if (*example) return cmd_example(opt, q);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::parse_error) return 2;
    if (e.code() == Errc::oracle_mismatch) return 4;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
