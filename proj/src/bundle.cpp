#include "tgrs/bundle.hpp"

#include <cctype>
#include <sstream>

namespace tgrs {
namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int64_t parse_int(const std::string& s, const char* what) {
  std::string t = trim(s);
  if (t.empty()) fail(Errc::parse_error, std::string("empty ") + what);
  size_t pos = 0;
  int64_t v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    fail(Errc::parse_error, std::string("bad integer in ") + what + ": '" + t + "'");
  }
  if (pos != t.size()) fail(Errc::parse_error, std::string("bad integer in ") + what + ": '" + t + "'");
  return v;
}

std::vector<int64_t> parse_int_list(const std::string& s, const char* what) {
  std::vector<int64_t> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(parse_int(cur, what));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(parse_int(cur, what));
  return out;
}

}  // namespace

FieldPtr parse_field_spec(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 5 || t.substr(0, 3) != "GF(" || t.back() != ')')
    fail(Errc::parse_error, "field spec must look like GF(p^m; modulus=...)");
  std::string body = t.substr(3, t.size() - 4);

  std::string head = body, modpart;
  size_t semi = body.find(';');
  if (semi != std::string::npos) {
    head = trim(body.substr(0, semi));
    modpart = trim(body.substr(semi + 1));
  }

  int64_t p, m = 1;
  size_t caret = head.find('^');
  if (caret == std::string::npos) {
    p = parse_int(head, "field characteristic");
  } else {
    p = parse_int(head.substr(0, caret), "field characteristic");
    m = parse_int(head.substr(caret + 1), "extension degree");
  }
  if (p < 2 || m < 1 || m > 16) fail(Errc::parse_error, "bad field parameters");

  if (modpart.empty()) return Field::make(static_cast<uint64_t>(p), static_cast<uint32_t>(m));
  if (modpart.substr(0, 8) != "modulus=")
    fail(Errc::parse_error, "expected 'modulus=' after ';' in field spec");
  auto coeffs = parse_int_list(modpart.substr(8), "modulus");
  return Field::make(static_cast<uint64_t>(p), static_cast<uint32_t>(m), coeffs);
}

FieldElem parse_element(const Field& f, const std::string& token) {
  std::string t = trim(token);
  if (t.empty()) fail(Errc::parse_error, "empty element token");
  if (t[0] == '(') {
    if (t.back() != ')') fail(Errc::parse_error, "unterminated element tuple");
    auto coeffs = parse_int_list(t.substr(1, t.size() - 2), "element tuple");
    if (coeffs.size() != f.m())
      fail(Errc::parse_error, "element tuple must have m coordinates");
    return f.from_coeffs(coeffs);
  }
  if (t[0] == 'g') {
    if (t.size() < 3 || t[1] != '^') fail(Errc::parse_error, "bad primitive power token");
    int64_t e = parse_int(t.substr(2), "primitive power exponent");
    return f.primitive_element().pow(e);
  }
  return f.from_int(parse_int(t, "element"));
}

std::vector<FieldElem> parse_element_list(const Field& f, const std::string& text) {
  // split on commas that are not inside a tuple
  std::vector<FieldElem> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(parse_element(f, cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) fail(Errc::parse_error, "unbalanced parentheses in element list");
  out.push_back(parse_element(f, cur));
  return out;
}

std::string element_list_str(const std::vector<FieldElem>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out;
}

Bundle parse_bundle_text(const std::string& text) {
  Bundle b;
  bool have_d = false, have_k = false, have_l = false, have_eta = false, have_v = false;
  std::string d_line, eta_line, v_line;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.substr(0, 3) == "GF(") {
      if (b.field) fail(Errc::parse_error, "duplicate field line");
      b.field = parse_field_spec(line);
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(Errc::parse_error, "expected key=value line: '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "type") {
      if (val == "grs")
        b.is_grs = true;
      else if (val != "tgrs")
        fail(Errc::parse_error, "type must be tgrs or grs");
    } else if (key == "D") {
      d_line = val;
      have_d = true;
    } else if (key == "k") {
      b.k = static_cast<int>(parse_int(val, "k"));
      have_k = true;
    } else if (key == "l") {
      b.twist = static_cast<int>(parse_int(val, "l"));
      have_l = true;
    } else if (key == "eta") {
      eta_line = val;
      have_eta = true;
    } else if (key == "v") {
      v_line = val;
      have_v = true;
    } else {
      fail(Errc::parse_error, "unknown bundle key '" + key + "'");
    }
  }
  if (!b.field) fail(Errc::parse_error, "missing field line");
  if (!have_d) fail(Errc::parse_error, "missing D= line");
  if (!have_k) fail(Errc::parse_error, "missing k= line");
  if (!have_v) fail(Errc::parse_error, "missing v= line");
  if (!b.is_grs && !have_l) fail(Errc::parse_error, "missing l= line");
  if (!b.is_grs && !have_eta) fail(Errc::parse_error, "missing eta= line");
  b.points = parse_element_list(*b.field, d_line);
  b.scaling = parse_element_list(*b.field, v_line);
  if (!b.is_grs) b.eta = parse_element(*b.field, eta_line);
  return b;
}

std::string bundle_to_text(const Bundle& b) {
  std::ostringstream os;
  os << b.field->str() << "\n";
  if (b.is_grs) os << "type=grs\n";
  os << "D=" << element_list_str(b.points) << "\n";
  os << "k=" << b.k << "\n";
  if (!b.is_grs) {
    os << "l=" << b.twist << "\n";
    os << "eta=" << b.eta.str() << "\n";
  }
  os << "v=" << element_list_str(b.scaling) << "\n";
  return os.str();
}

TgrsParams bundle_params(const Bundle& b) {
  if (b.is_grs) fail(Errc::invalid_params, "bundle is a plain GRS code (no twist)");
  EvaluationSet d(b.field, b.points);
  return TgrsParams(std::move(d), b.k, b.twist, b.eta, b.scaling);
}

Bundle bundle_from_params(const TgrsParams& p) {
  Bundle b;
  b.field = p.points.field_ptr();
  b.points = p.points.points();
  b.k = p.k;
  b.twist = p.twist;
  b.eta = p.eta;
  b.scaling = p.scaling;
  return b;
}

}  // namespace tgrs
