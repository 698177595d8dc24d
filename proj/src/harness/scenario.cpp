#include "harness/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gobelin {

const char* const kDataKeys[6] = {"f1", "f2", "c11", "c12", "c21", "c22"};

std::string Scenario::annotation(const std::string& key) const {
  for (const auto& [k, v] : annotations) {
    if (k == key) return v;
  }
  return {};
}

std::string Scenario::to_text() const {
  std::ostringstream os;
  for (const auto& [k, v] : annotations) os << "#@ " << k << " " << v << "\n";
  os << "field " << (field.is_rational() ? std::string("Q") : "Fp " + std::to_string(field.characteristic())) << "\n";
  os << "ring ";
  for (std::size_t i = 0; i < variables.size(); ++i) os << (i ? ", " : "") << variables[i];
  os << "\nrelations ";
  for (std::size_t i = 0; i < relations.size(); ++i) os << (i ? "; " : "") << relations[i];
  os << "\n";
  for (int i = 0; i < 6; ++i) os << kDataKeys[i] << " = " << data[i] << "\n";
  os << "max_degree " << max_degree << "\nseed " << seed << "\n";
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::uint64_t parse_uint(const std::string& text, std::size_t line, std::size_t col, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(std::string(what) + " must be a non-negative integer", line, col);
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " is out of range", line, col);
  }
}

struct Pending {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  Scenario sc;
  sc.name = name;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool have_ring = false, have_relations = false, have_field = false;
  std::vector<Pending> relations;
  Pending data[6];
  bool have_data[6] = {};

  while (std::getline(in, raw)) {
    ++line;
    if (raw.rfind("#@", 0) == 0) {
      const std::string body = trim(raw.substr(2));
      const auto sp = body.find_first_of(" \t");
      sc.annotations.emplace_back(body.substr(0, sp), sp == std::string::npos ? "" : trim(body.substr(sp)));
      continue;
    }
    const auto hash = raw.find('#');
    const std::string content = hash == std::string::npos ? raw : raw.substr(0, hash);
    const auto start = content.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t key_end = content.find_first_of(" \t=", start);
    if (key_end == std::string::npos) key_end = content.size();
    const std::string key = content.substr(start, key_end - start);
    std::size_t vpos = content.find_first_not_of(" \t", key_end);
    if (vpos == std::string::npos) vpos = content.size();
    std::string value = content.substr(vpos);
    std::size_t vcol = vpos + 1;

    int data_index = -1;
    for (int i = 0; i < 6; ++i) {
      if (key == kDataKeys[i]) data_index = i;
    }
    if (data_index >= 0) {
      if (value.empty() || value[0] != '=') throw ParseError("expected '=' after " + key, line, vpos + 1);
      const auto p = content.find_first_not_of(" \t", vpos + 1);
      vcol = (p == std::string::npos ? content.size() : p) + 1;
      value = p == std::string::npos ? "" : content.substr(p);
      if (trim(value).empty()) throw ParseError("missing polynomial after " + key + " =", line, vcol);
      if (have_data[data_index]) throw ParseError("duplicate " + key, line, start + 1);
      data[data_index] = {trim(value), line, vcol};
      have_data[data_index] = true;
      continue;
    }
    if (key == "field") {
      std::istringstream vs(value);
      std::string kind, p, extra;
      vs >> kind >> p >> extra;
      if (kind == "Q" && p.empty()) {
        sc.field = FieldSpec::rationals();
      } else if (kind == "Fp" && !p.empty() && extra.empty()) {
        const std::uint64_t prime = parse_uint(p, line, vcol + value.find(p), "characteristic");
        if (!is_prime(prime) || prime >= (1ull << 31)) {
          throw ParseError("characteristic must be a prime below 2^31", line, vcol + value.find(p));
        }
        sc.field = FieldSpec::prime(prime);
      } else {
        throw ParseError("expected 'field Q' or 'field Fp <p>'", line, vcol);
      }
      if (have_ring) throw ParseError("field must be declared before ring", line, start + 1);
      have_field = true;
    } else if (key == "ring") {
      if (have_ring) throw ParseError("duplicate ring", line, start + 1);
      std::size_t pos = 0;
      while (pos <= value.size()) {
        const auto comma = value.find(',', pos);
        const std::string v = trim(value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (!valid_identifier(v)) throw ParseError("bad variable name '" + v + "'", line, vcol + pos);
        for (const auto& w : sc.variables) {
          if (w == v) throw ParseError("variable " + v + " declared twice", line, vcol + pos);
        }
        sc.variables.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      have_ring = true;
    } else if (key == "relations") {
      if (have_relations) throw ParseError("duplicate relations", line, start + 1);
      std::size_t pos = 0;
      while (pos <= value.size()) {
        const auto semi = value.find(';', pos);
        const std::string piece = value.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        const auto lead = piece.find_first_not_of(" \t");
        if (lead == std::string::npos) throw ParseError("empty relation", line, vcol + pos);
        relations.push_back({trim(piece), line, vcol + pos + lead});
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
      have_relations = true;
    } else if (key == "max_degree") {
      sc.max_degree = parse_uint(trim(value), line, vcol, "max_degree");
      if (sc.max_degree > 64) throw ParseError("max_degree above 64", line, vcol);
    } else if (key == "seed") {
      sc.seed = parse_uint(trim(value), line, vcol, "seed");
    } else {
      throw ParseError("unknown keyword '" + key + "'", line, start + 1);
    }
  }
  (void)have_field;
  const std::size_t end_line = line + 1;
  if (!have_ring) throw ParseError("missing 'ring' line", end_line, 1);
  // Parse every polynomial now so that errors carry their position. A
  // malformed line is reported before a missing one.
  for (const auto& r : relations) {
    parse_poly(r.text, sc.variables, sc.field, r.line, r.column - 1);
    sc.relations.push_back(r.text);
  }
  for (int i = 0; i < 6; ++i) {
    if (!have_data[i]) continue;
    parse_poly(data[i].text, sc.variables, sc.field, data[i].line, data[i].column - 1);
    sc.data[i] = data[i].text;
  }
  if (!have_relations) throw ParseError("missing 'relations' line", end_line, 1);
  for (int i = 0; i < 6; ++i) {
    if (!have_data[i]) throw ParseError(std::string("missing '") + kDataKeys[i] + " = ...' line", end_line, 1);
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  const auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_scenario(ss.str(), name);
}

Instance instantiate(const Scenario& sc) {
  QuotientPresentation p;
  p.field = sc.field;
  p.variables = sc.variables;
  for (const auto& r : sc.relations) p.generators.push_back(parse_poly(r, sc.variables, sc.field));
  QuotientRing ring = QuotientRing::build(p);
  const AlgebraPtr& b = ring.algebra();
  TraceMap trace = choose_trace(*b);
  Vector v[6];
  for (int i = 0; i < 6; ++i) v[i] = ring.element(parse_poly(sc.data[i], sc.variables, sc.field));
  SyzygyPair pair = make_syzygy_pair(b, v[0], v[1], v[2], v[3], v[4], v[5]);
  check_syzygies(pair);
  KoszulData k = koszul(b, trace, pair.f1, pair.f2);
  return Instance{sc, std::move(ring), std::move(trace), std::move(pair), std::move(k)};
}

Diagnostics diagnostics(const Instance& in) {
  Diagnostics d;
  d.mu = in.algebra().mu();
  d.nu = in.koszul.nu;
  d.nu1 = in.koszul.nu1;
  d.nu2 = in.koszul.nu2;
  d.tau1_dim = class_module_dim(in.koszul, in.pair.tau1);
  d.tau2_dim = class_module_dim(in.koszul, in.pair.tau2);
  return d;
}

}  // namespace gobelin
