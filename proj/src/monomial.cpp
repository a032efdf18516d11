#include "koszul/monomial.hpp"

#include <algorithm>

namespace koszul {

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

namespace {
void fill_degree(std::vector<Monomial>& out, Monomial& cur, std::size_t var, unsigned remaining) {
  if (var + 1 == cur.exps.size()) {
    cur.exps[var] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    cur.exps[var] = 0;
    return;
  }
  for (int e = static_cast<int>(remaining); e >= 0; --e) {
    cur.exps[var] = static_cast<std::uint16_t>(e);
    fill_degree(out, cur, var + 1, remaining - static_cast<unsigned>(e));
  }
  cur.exps[var] = 0;
}
}  // namespace

std::vector<Monomial> enumerate_monomials(std::size_t var_count, unsigned max_degree) {
  std::vector<Monomial> out;
  if (var_count == 0) {
    out.emplace_back(0);
    return out;
  }
  Monomial cur(var_count);
  for (unsigned d = 0; d <= max_degree; ++d) fill_degree(out, cur, 0, d);
  return out;
}

long long monomial_index(const std::vector<Monomial>& sorted, const Monomial& m) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m, GradedLexLess{});
  if (it == sorted.end() || !(*it == m)) return -1;
  return it - sorted.begin();
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (!m.exps[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace koszul
