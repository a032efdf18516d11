#include "koszul/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace koszul {

namespace {

using Mask = std::uint32_t;  // F_2 vector of dimension <= 12

// xor-basis keyed by leading bit; reduce() eliminates descending so the
// result is the canonical coset representative (zero at every slot position)
struct XorSpan {
  Mask slot[16] = {0};
  std::size_t dim_ = 0;
  Mask reduce(Mask v) const {
    for (int b = 15; b >= 0; --b)
      if (((v >> b) & 1) && slot[b]) v ^= slot[b];
    return v;
  }
  bool add(Mask v) {
    v = reduce(v);
    if (!v) return false;
    slot[31 - std::countl_zero(v)] = v;
    ++dim_;
    return true;
  }
  std::size_t dim() const { return dim_; }
};

std::size_t log2_exact(std::size_t count) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < count) ++k;
  if ((std::size_t{1} << k) != count) throw std::logic_error("oracle: count not a power of two");
  return k;
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct OracleContext {
  const LocalAlgebra* a;
  std::size_t l;
  // columns of the F_2 multiplication operator of each algebra basis element
  std::vector<std::vector<Mask>> mult_cols;

  Mask act(std::size_t basis_index, Mask block_vec) const {
    Mask out = 0;
    const auto& cols = mult_cols[basis_index];
    for (std::size_t j = 0; j < l; ++j)
      if (block_vec & (Mask{1} << j)) out ^= cols[j];
    return out;
  }
  Mask act_blockwise(std::size_t basis_index, std::size_t rank, Mask v) const {
    Mask out = 0;
    for (std::size_t b = 0; b < rank; ++b) {
      const Mask block = (v >> (b * l)) & ((Mask{1} << l) - 1);
      out |= act(basis_index, block) << (b * l);
    }
    return out;
  }
};

// columns of d_i rebuilt from the derivation formula, independently of the
// engine's block assembly
std::vector<Mask> differential_columns(const OracleContext& ctx,
                                       const std::vector<std::vector<std::uint32_t>>& xs,
                                       std::size_t i) {
  const std::size_t n = xs.size(), l = ctx.l;
  const auto here = subsets_lex(n, i);
  const auto below = subsets_lex(n, i - 1);
  std::vector<Mask> cols(here.size() * l, 0);
  for (std::size_t s = 0; s < here.size(); ++s) {
    for (std::size_t c = 0; c < l; ++c) {
      Mask out = 0;
      for (std::size_t t = 0; t < here[s].size(); ++t) {
        std::vector<std::size_t> face = here[s];
        face.erase(face.begin() + static_cast<long>(t));
        const std::size_t rb = static_cast<std::size_t>(
            std::lower_bound(below.begin(), below.end(), face) - below.begin());
        // x_{j_t} * e_c, signs vanish over F_2
        Mask prod = 0;
        const auto& x = xs[here[s][t]];
        for (std::size_t u = 0; u < l; ++u)
          if (x[u] & 1) prod ^= ctx.act(u, Mask{1} << c);
        out ^= prod << (rb * l);
      }
      cols[s * l + c] = out;
    }
  }
  return cols;
}

Mask apply_columns(const std::vector<Mask>& cols, Mask v) {
  Mask out = 0;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (v & (Mask{1} << j)) out ^= cols[j];
  return out;
}

// least t such that some t-multiset of class representatives generates Z/B
std::size_t exhaustive_nu(const OracleContext& ctx, std::size_t rank,
                          const std::vector<Mask>& cycles, const XorSpan& bspan,
                          std::size_t zdim) {
  // representatives of distinct classes modulo the boundaries
  std::vector<Mask> reps;
  {
    std::set<Mask> seen;
    for (Mask z : cycles) {
      const Mask canon = bspan.reduce(z);
      if (canon && seen.insert(canon).second) reps.push_back(z);
    }
  }

  std::vector<Mask> chosen;
  auto generates = [&]() {
    XorSpan span = bspan;
    for (Mask h : chosen)
      for (std::size_t bi = 0; bi < ctx.l; ++bi) span.add(ctx.act_blockwise(bi, rank, h));
    return span.dim() == zdim;
  };
  for (std::size_t t = 0;; ++t) {
    if (t == 0) {
      if (generates()) return 0;
      continue;
    }
    bool found = false;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (found) return;
      if (chosen.size() == t) {
        if (generates()) found = true;
        return;
      }
      for (std::size_t r = start; r < reps.size() && !found; ++r) {
        chosen.push_back(reps[r]);
        self(self, r);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
    if (found) return t;
    if (t > zdim) throw std::logic_error("oracle: nu search exceeded dim Z");
  }
}

}  // namespace

bool oracle_eligible(const LocalAlgebra& a, std::size_t n) {
  if (a.field().p() != 2 || a.length() > 4 || n > 2) return false;
  // max expanded chain dimension is C(n, floor(n/2)) * l
  const std::size_t worst = (n == 2 ? 2 : 1) * a.length();
  return worst <= 12;
}

OracleResult brute_force_oracle(const LocalAlgebra& a,
                                const std::vector<std::vector<std::uint32_t>>& xs) {
  if (!oracle_eligible(a, xs.size()))
    throw std::invalid_argument("brute_force_oracle: size guard violated");
  const std::size_t n = xs.size(), l = a.length();

  OracleContext ctx{&a, l, {}};
  ctx.mult_cols.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    ctx.mult_cols[i].resize(l, 0);
    for (std::size_t j = 0; j < l; ++j) {
      Mask col = 0;
      for (std::size_t t = 0; t < l; ++t)
        if (a.basis_mult_op(i).at(t, j) & 1) col |= Mask{1} << t;
      ctx.mult_cols[i][j] = col;
    }
  }

  std::vector<std::vector<Mask>> d(n + 1);  // d[i] columns for i in [1, n]
  for (std::size_t i = 1; i <= n; ++i) d[i] = differential_columns(ctx, xs, i);

  auto chain_dim = [&](std::size_t i) {
    const auto subs = subsets_lex(n, i);
    return subs.size() * l;
  };

  OracleResult out;
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t dim_i = chain_dim(i);
    if (dim_i > 12) throw std::invalid_argument("brute_force_oracle: expanded dimension > 12");

    std::vector<Mask> cycles;
    for (Mask v = 0; v < (Mask{1} << dim_i); ++v)
      if (i == 0 || apply_columns(d[i], v) == 0) cycles.push_back(v);

    XorSpan bspan;
    std::size_t bcount = 1;
    if (i < n) {
      const std::size_t src_dim = chain_dim(i + 1);
      std::set<Mask> image;
      for (Mask w = 0; w < (Mask{1} << src_dim); ++w) image.insert(apply_columns(d[i + 1], w));
      bcount = image.size();
      for (Mask b : image) bspan.add(b);
    }

    const std::size_t zdim = log2_exact(cycles.size());
    const std::size_t bdim = log2_exact(bcount);
    out.h_dims.push_back(zdim - bdim);
    const std::size_t rank_i = subsets_lex(n, i).size();
    out.h_nus.push_back(exhaustive_nu(ctx, rank_i, cycles, bspan, zdim));
  }
  return out;
}

}  // namespace koszul
