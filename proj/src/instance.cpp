#include "koszul/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace koszul {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  const std::string last = trim(cur);
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

InstanceSpec parse_instance(std::string_view text, std::string path) {
  InstanceSpec spec;
  spec.path = std::move(path);
  std::vector<std::pair<std::string, std::string>> entries;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      const std::string t = trim(line);
      if (t.empty()) continue;
      const auto colon = t.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected 'key: value' on line " + std::to_string(lineno), lineno);
      entries.emplace_back(trim(t.substr(0, colon)), trim(t.substr(colon + 1)));
    }
  }

  auto take = [&](const std::string& key) -> std::optional<std::string> {
    std::optional<std::string> found;
    for (const auto& [k, v] : entries) {
      if (k != key) continue;
      if (found) throw ParseError("duplicate key '" + key + "'", 0);
      found = v;
    }
    return found;
  };
  static const char* known[] = {"field", "vars", "gens", "bound", "koszul", "gens2"};
  for (const auto& [k, v] : entries) {
    bool ok = false;
    for (const char* kk : known) ok = ok || k == kk;
    if (!ok) throw ParseError("unknown key '" + k + "'", 0);
  }

  const auto field = take("field");
  if (!field) throw ParseError("missing key 'field'", 0);
  {
    unsigned long v = 0;
    try {
      v = std::stoul(*field);
    } catch (...) {
      throw ParseError("field: expected an integer, got '" + *field + "'", 0);
    }
    if (!PrimeField::is_prime(static_cast<std::uint32_t>(v)))
      throw ParseError("modulus must be prime: " + *field, 0);
    spec.p = static_cast<std::uint32_t>(v);
  }

  const auto vars = take("vars");
  if (!vars) throw ParseError("missing key 'vars'", 0);
  spec.vars = split_commas(*vars);
  for (const auto& v : spec.vars) {
    if (!valid_identifier(v)) throw ParseError("invalid variable name '" + v + "'", 0);
    if (std::count(spec.vars.begin(), spec.vars.end(), v) > 1)
      throw ParseError("duplicate variable name '" + v + "'", 0);
  }

  const auto gens = take("gens");
  if (!gens) throw ParseError("missing key 'gens'", 0);
  spec.gen_exprs = split_commas(*gens);
  if (spec.gen_exprs.empty()) throw ParseError("gens: expected at least one expression", 0);

  if (const auto bound = take("bound")) {
    unsigned long v = 0;
    try {
      v = std::stoul(*bound);
    } catch (...) {
      throw ParseError("bound: expected an integer", 0);
    }
    if (v < 1) throw ParseError("bound must be at least 1", 0);
    spec.bound = static_cast<unsigned>(v);
  }

  if (const auto k = take("koszul")) spec.koszul_exprs = split_commas(*k);
  if (const auto g2 = take("gens2")) spec.gens2_exprs = split_commas(*g2);
  if (!spec.koszul_exprs.empty() && !spec.gens2_exprs.empty())
    throw ParseError("'koszul' and 'gens2' are mutually exclusive", 0);

  // Validate each expression now: syntax, declared variables, constant terms.
  const PrimeField f(spec.p);
  const unsigned probe_bound = 16;
  for (const auto& e : spec.gen_exprs) {
    const TruncPoly g = parse_poly(e, spec.vars, f, probe_bound);
    if (g.constant_term() != 0)
      throw ParseError("generator with nonzero constant term: '" + e + "'", 0);
  }
  for (const auto& e : spec.gens2_exprs) {
    const TruncPoly g = parse_poly(e, spec.vars, f, probe_bound);
    if (g.constant_term() != 0)
      throw ParseError("generator with nonzero constant term: '" + e + "'", 0);
  }
  for (const auto& e : spec.koszul_exprs) (void)parse_poly(e, spec.vars, f, probe_bound);
  return spec;
}

InstanceSpec parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

CompiledInstance compile_instance(const InstanceSpec& spec, unsigned bound_max) {
  if (spec.tor_mode())
    throw InputError("this command takes a single-ideal instance; the file has 'gens2'");
  const PrimeField f(spec.p);
  const unsigned capacity = (spec.bound ? *spec.bound : bound_max) + 3;
  std::vector<TruncPoly> gens;
  for (const auto& e : spec.gen_exprs) gens.push_back(parse_poly(e, spec.vars, f, capacity));
  Presentation pres = certify(make_presentation(f, spec.vars, std::move(gens)), spec.bound,
                              bound_max);
  const unsigned bound = pres.bound;
  LocalAlgebra a = LocalAlgebra::build(std::move(pres));
  std::vector<std::vector<std::uint32_t>> xs;
  for (const auto& e : spec.koszul_exprs) {
    const TruncPoly x = parse_poly(e, spec.vars, f, capacity);
    auto coords = a.normal_form(x);
    if (!a.in_maximal_ideal(coords))
      throw InputError("koszul element outside the maximal ideal: '" + e + "'");
    xs.push_back(std::move(coords));
  }
  return CompiledInstance{std::move(a), std::move(xs), bound};
}

}  // namespace koszul
