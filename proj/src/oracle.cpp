#include "charp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "charp/errors.hpp"

namespace charp {

std::vector<ExpVec> all_monomials_up_to(std::size_t nvars, unsigned maxdeg) {
  std::vector<ExpVec> out;
  ExpVec cur(nvars, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t k,
                                                        unsigned used) {
    if (k == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e + used <= maxdeg; ++e) {
      cur[k] = e;
      walk(k + 1, used + e);
    }
    cur[k] = 0;
  };
  walk(0, 0);
  std::sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& b) {
    auto da = exp_total_degree(a), db = exp_total_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  return out;
}

namespace {

std::vector<ExpVec> monomials_of_degree(const RingPtr& R, unsigned d) {
  std::vector<ExpVec> out;
  for (auto& m : all_monomials_up_to(R->nvars(), d))
    if (exp_total_degree(m) == d) out.push_back(m);
  // descending under the ring order, deterministic basis layout
  std::sort(out.begin(), out.end(), [&](const ExpVec& a, const ExpVec& b) {
    return monomial_compare(R->order(), a, b) > 0;
  });
  return out;
}

// rank via fraction-free Bareiss elimination over F_p[u_1..u_m]
std::size_t bareiss_rank(std::vector<std::vector<ParamPoly>> M, std::uint32_t p) {
  if (M.empty()) return 0;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t rank = 0;
  ParamPoly prev;  // previous pivot; starts as 1
  bool have_prev = false;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[rank], M[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c2 = col + 1; c2 < cols; ++c2) {
        ParamPoly t = pp_sub(pp_mul(M[rank][col], M[r][c2], p),
                             pp_mul(M[r][col], M[rank][c2], p), p);
        M[r][c2] = have_prev ? pp_divexact(t, prev, p) : std::move(t);
      }
      M[r][col] = ParamPoly::zero(M[r][col].width());
    }
    prev = M[rank][col];
    have_prev = true;
    ++rank;
  }
  return rank;
}

// clears denominators row-wise; row scaling preserves the row space
std::vector<ParamPoly> clear_denominators(const std::vector<Scalar>& row,
                                          std::uint32_t p) {
  ParamPoly common;
  bool first = true;
  for (const auto& s : row) {
    if (s.is_zero()) continue;
    common = first ? s.denominator()
                   : pp_divexact(pp_mul(common, s.denominator(), p),
                                 pp_gcd(common, s.denominator(), p), p);
    first = false;
  }
  std::vector<ParamPoly> out;
  out.reserve(row.size());
  for (const auto& s : row) {
    if (s.is_zero()) {
      out.push_back(ParamPoly::zero(common.width()));
    } else {
      out.push_back(pp_mul(s.numerator(),
                           pp_divexact(common, s.denominator(), p), p));
    }
  }
  return out;
}

std::vector<Scalar> coords_of(const Polynomial& f,
                              const std::vector<ExpVec>& basis) {
  std::vector<Scalar> row(basis.size(), Scalar::zero(f.ring()->field()));
  for (const auto& t : f.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t.exp);
    if (it == basis.end())
      throw InvalidArgumentError("monomial outside the graded slice basis");
    row[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
  }
  return row;
}

}  // namespace

GradedSlice graded_slice(const IdealHandle& I, unsigned degree) {
  GradedSlice slice;
  slice.ring = I.ring();
  slice.degree = degree;
  slice.basis = monomials_of_degree(I.ring(), degree);
  for (const auto& g : I.generators()) {
    long long dg = g.homogeneous_degree();
    if (dg < 0) throw NotHomogeneousError("ideal generator " + g.to_string());
    if (static_cast<unsigned>(dg) > degree || g.is_zero()) continue;
    for (const auto& m : monomials_of_degree(I.ring(),
                                             degree - static_cast<unsigned>(dg))) {
      Polynomial mult = g.mul_term(m, Scalar::one(I.ring()->field()));
      slice.rows.push_back(coords_of(mult, slice.basis));
    }
  }
  return slice;
}

bool linalg_membership(const Polynomial& f, const IdealHandle& I,
                       unsigned degree) {
  if (f.is_zero()) return true;
  long long df = f.homogeneous_degree();
  if (df < 0 || static_cast<unsigned>(df) != degree)
    throw NotHomogeneousError("membership probe " + f.to_string());
  GradedSlice slice = graded_slice(I, degree);
  std::uint32_t p = f.ring()->field()->characteristic();
  std::vector<std::vector<ParamPoly>> M;
  for (const auto& row : slice.rows) M.push_back(clear_denominators(row, p));
  std::size_t rank_without = bareiss_rank(M, p);
  M.push_back(clear_denominators(coords_of(f, slice.basis), p));
  std::size_t rank_with = bareiss_rank(std::move(M), p);
  return rank_with == rank_without;
}

bool monomial_membership_bruteforce(const ExpVec& m,
                                    const std::vector<ExpVec>& gens) {
  for (const auto& g : gens)
    if (exp_divides(g, m)) return true;
  return false;
}

bool monomial_membership_bruteforce(const Polynomial& m, const IdealHandle& M) {
  if (!m.is_monomial())
    throw NotMonomialError();
  std::vector<ExpVec> gens;
  for (const auto& g : M.generators()) {
    if (!g.is_monomial()) throw NotMonomialError();
    gens.push_back(g.leading_term().exp);
  }
  return monomial_membership_bruteforce(m.leading_term().exp, gens);
}

RandomInstance random_instance(std::uint64_t seed, const RandomProfile& profile) {
  std::mt19937_64 rng(seed);
  auto F = make_field(profile.p);
  std::vector<std::string> names;
  const char* pool[] = {"x", "y", "z", "w", "s", "t"};
  for (std::size_t i = 0; i < profile.nvars; ++i)
    names.push_back(i < 6 ? pool[i] : "v" + std::to_string(i));
  RingPtr R = make_poly_ring(F, names);

  // raw engine draws (no distributions) keep the stream portable
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  auto random_poly = [&](bool generator) {
    unsigned deg = 1 + unsigned(draw(profile.max_degree));
    std::vector<Term> ts;
    unsigned nterms = 2 + unsigned(draw(3));
    for (unsigned t = 0; t < nterms; ++t) {
      ExpVec e(profile.nvars, 0);
      // generators carry no constant term, keeping the ideal proper
      unsigned total = profile.homogeneous
                           ? deg
                           : (generator ? 1 + unsigned(draw(deg))
                                        : unsigned(draw(deg + 1)));
      for (unsigned d = 0; d < total; ++d) e[draw(profile.nvars)] += 1;
      std::uint32_t c = 1 + std::uint32_t(draw(profile.p - 1));
      ts.push_back(Term{std::move(e), Scalar::from_int(F, c)});
    }
    Polynomial f = Polynomial::from_terms(R, std::move(ts));
    if (generator && f.is_zero())
      f = Polynomial::variable(R, draw(profile.nvars)).pow(deg);
    return f;
  };

  RandomInstance inst;
  inst.ring = R;
  std::vector<Polynomial> gens;
  for (std::size_t g = 0; g < profile.generators; ++g)
    gens.push_back(random_poly(true));
  inst.ideal = IdealHandle(R, std::move(gens));
  inst.probe = random_poly(false);
  return inst;
}

}  // namespace charp
