// Buchberger engine: standard pair criteria (coprime leading terms, chain
// criterion) with the normal selection strategy (minimal lcm degree, ties by
// pair creation order). Output bases are reduced, monic, and sorted ascending
// by leading term, so they are canonical for the ideal and order.
#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>

#include "charp/budget.hpp"
#include "charp/errors.hpp"
#include "charp/ideal.hpp"

namespace charp {
namespace gbdetail {

using TList = std::vector<Term>;

struct Ctx {
  const MonomialOrder* ord;
  std::uint32_t max_degree;
};

std::uint64_t degree_of(const TList& f) {
  std::uint64_t d = 0;
  for (const auto& t : f) d = std::max(d, exp_total_degree(t.exp));
  return d;
}

void check_degree(const Ctx& ctx, const TList& f) {
  if (degree_of(f) > ctx.max_degree)
    throw ResourceLimitError("polynomial degree exceeds " +
                             std::to_string(ctx.max_degree));
}

TList resort(const Ctx& ctx, TList f) {
  std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) {
    return monomial_compare(*ctx.ord, a.exp, b.exp) > 0;
  });
  return f;
}

TList add(const Ctx& ctx, const TList& a, const TList& b) {
  TList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = monomial_compare(*ctx.ord, a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

TList mul_term(const TList& a, const ExpVec& e, const Scalar& c) {
  TList out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(Term{exp_add(t.exp, e), t.coeff * c});
  return out;
}

void make_monic(TList& f) {
  if (f.empty()) return;
  if (f.front().coeff.is_one()) return;
  Scalar inv = f.front().coeff.inverse();
  for (auto& t : f) t.coeff = t.coeff * inv;
}

// Fully reduced normal form of f against basis (first matching divisor wins).
TList reduce_full(const Ctx& ctx, TList f, const std::vector<TList>& basis) {
  TList out;
  while (!f.empty()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.empty()) continue;
      if (exp_divides(g.front().exp, f.front().exp)) {
        ExpVec q = exp_sub(f.front().exp, g.front().exp);
        Scalar c = -(f.front().coeff / g.front().coeff);
        f = add(ctx, f, mul_term(g, q, c));
        check_degree(ctx, f);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.push_back(f.front());
      f.erase(f.begin());
    }
  }
  return out;
}

TList spoly(const Ctx& ctx, const TList& f, const TList& g) {
  const ExpVec l = exp_lcm(f.front().exp, g.front().exp);
  TList a = mul_term(f, exp_sub(l, f.front().exp), f.front().coeff.inverse());
  TList b = mul_term(g, exp_sub(l, g.front().exp), -(g.front().coeff.inverse()));
  return add(ctx, a, b);
}

struct Pair {
  std::size_t i, j;  // i < j
  std::uint64_t lcm_degree;
  std::uint64_t serial;
};

std::vector<TList> buchberger(const Ctx& ctx, std::vector<TList> gens,
                              const ResourceBudget& budget) {
  std::vector<TList> G;
  for (auto& f : gens) {
    if (f.empty()) continue;
    check_degree(ctx, f);
    make_monic(f);
    G.push_back(std::move(f));
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> processed;
  std::uint64_t serial = 0;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      ExpVec l = exp_lcm(G[i].front().exp, G[j].front().exp);
      pending.push_back(Pair{i, j, exp_total_degree(l), serial++});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const Pair& a = pending[k];
      const Pair& b = pending[best];
      if (std::tie(a.lcm_degree, a.serial) < std::tie(b.lcm_degree, b.serial))
        best = k;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + best);
    processed.insert({pr.i, pr.j});

    const ExpVec& lti = G[pr.i].front().exp;
    const ExpVec& ltj = G[pr.j].front().exp;
    if (exp_coprime(lti, ltj)) continue;  // Buchberger's first criterion

    ExpVec l = exp_lcm(lti, ltj);
    bool chain_skip = false;
    for (std::size_t k = 0; k < G.size() && !chain_skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!exp_divides(G[k].front().exp, l)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (processed.count({key_ik.first, key_ik.second}) &&
          processed.count({key_jk.first, key_jk.second}))
        chain_skip = true;
    }
    if (chain_skip) continue;

    TList s = spoly(ctx, G[pr.i], G[pr.j]);
    check_degree(ctx, s);
    TList r = reduce_full(ctx, std::move(s), G);
    if (r.empty()) continue;
    make_monic(r);
    G.push_back(std::move(r));
    if (G.size() > budget.max_basis_size)
      throw ResourceLimitError("basis size exceeds " +
                               std::to_string(budget.max_basis_size));
    push_pairs_for(G.size() - 1);
  }

  // minimalize: keep only elements whose leading term no kept element divides
  std::vector<std::size_t> idx(G.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = monomial_compare(*ctx.ord, G[a].front().exp, G[b].front().exp);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<TList> kept;
  for (std::size_t k : idx) {
    bool divisible = false;
    for (const auto& h : kept)
      if (exp_divides(h.front().exp, G[k].front().exp)) {
        divisible = true;
        break;
      }
    if (!divisible) kept.push_back(G[k]);
  }

  // tail-reduce each element against the others
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<TList> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != k) others.push_back(kept[j]);
    kept[k] = reduce_full(ctx, kept[k], others);
    make_monic(kept[k]);
  }

  std::sort(kept.begin(), kept.end(), [&](const TList& a, const TList& b) {
    return monomial_compare(*ctx.ord, a.front().exp, b.front().exp) < 0;
  });
  return kept;
}

}  // namespace gbdetail
}  // namespace charp
