#include "charp/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charp/budget.hpp"
#include "charp/errors.hpp"

namespace charp {

namespace gbdetail {
using TList = std::vector<Term>;
struct Ctx {
  const MonomialOrder* ord;
  std::uint32_t max_degree;
};
TList resort(const Ctx& ctx, TList f);
TList reduce_full(const Ctx& ctx, TList f, const std::vector<TList>& basis);
TList spoly(const Ctx& ctx, const TList& f, const TList& g);
std::vector<TList> buchberger(const Ctx& ctx, std::vector<TList> gens,
                              const ResourceBudget& budget);
}  // namespace gbdetail

using gbdetail::TList;

struct IdealHandle::Cache {
  std::mutex mu;
  // per order: basis stored both as canonical Polynomials (ring order) and as
  // term lists sorted under the key order, for reduction
  struct Entry {
    std::vector<Polynomial> canonical;
    std::shared_ptr<const std::vector<TList>> internal;
  };
  std::map<MonomialOrder, Entry> entries;
};

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  std::vector<Polynomial> kept;
  for (auto& g : gens) {
    if (!g.ring() || !g.ring()->same_as(*ring_))
      throw RingMismatchError("ideal generator in a different ring");
    if (g.is_zero()) continue;
    kept.push_back(std::move(g));
  }
  gens_ = std::make_shared<const std::vector<Polynomial>>(std::move(kept));
  cache_ = std::make_shared<Cache>();
}

namespace {

std::vector<TList> to_internal(const std::vector<Polynomial>& polys,
                               const gbdetail::Ctx& ctx, bool needs_resort) {
  std::vector<TList> out;
  out.reserve(polys.size());
  for (const auto& f : polys) {
    TList t = f.terms();
    out.push_back(needs_resort ? gbdetail::resort(ctx, std::move(t))
                               : std::move(t));
  }
  return out;
}

}  // namespace

const std::vector<Polynomial>& IdealHandle::groebner_basis(
    const MonomialOrder& order) const {
  if (!ring_) throw InvalidArgumentError("invalid ideal handle");
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto it = cache_->entries.find(order);
  if (it == cache_->entries.end()) {
    ResourceBudget budget = ResourceBudget::current();
    gbdetail::Ctx ctx{&order, budget.max_degree};
    bool resort = !(order == ring_->order());
    std::vector<TList> basis =
        gbdetail::buchberger(ctx, to_internal(*gens_, ctx, resort), budget);
    Cache::Entry entry;
    for (const auto& f : basis)
      entry.canonical.push_back(Polynomial::from_terms(ring_, f));
    entry.internal =
        std::make_shared<const std::vector<TList>>(std::move(basis));
    it = cache_->entries.emplace(order, std::move(entry)).first;
  }
  return it->second.canonical;
}

std::shared_ptr<const std::vector<std::vector<Term>>> IdealHandle::basis_terms(
    const MonomialOrder& order) const {
  groebner_basis(order);
  std::lock_guard<std::mutex> lk(cache_->mu);
  return cache_->entries.at(order).internal;
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& I,
                       const MonomialOrder& order) {
  if (!f.ring() || !I.ring() || !f.ring()->same_as(*I.ring()))
    throw RingMismatchError("normal form across rings");
  auto internal = I.basis_terms(order);
  ResourceBudget budget = ResourceBudget::current();
  gbdetail::Ctx ctx{&order, budget.max_degree};
  TList ft = f.terms();
  if (!(order == I.ring()->order())) ft = gbdetail::resort(ctx, std::move(ft));
  TList r = gbdetail::reduce_full(ctx, std::move(ft), *internal);
  return Polynomial::from_terms(f.ring(), std::move(r));
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& I) {
  return normal_form(f, I, I.ring()->order());
}

bool ideal_membership(const Polynomial& f, const IdealHandle& I) {
  return normal_form(f, I).is_zero();
}

bool ideal_contains(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_as(*J.ring())) throw RingMismatchError();
  for (const auto& g : J.generators())
    if (!ideal_membership(g, I)) return false;
  return true;
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_as(*J.ring())) throw RingMismatchError();
  const auto& a = I.groebner_basis();
  const auto& b = J.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool ideal_is_proper(const IdealHandle& I) {
  const auto& gb = I.groebner_basis();
  return !(gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero());
}

bool ideal_is_zero(const IdealHandle& I) {
  return I.groebner_basis().empty();
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_as(*J.ring())) throw RingMismatchError();
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : J.generators()) gens.push_back(g);
  return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_as(*J.ring())) throw RingMismatchError();
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return IdealHandle(I.ring(), std::move(gens));
}

RingPtr extend_ring_front(const RingPtr& ring, std::size_t count,
                          const std::string& stem) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < count; ++i)
    vars.push_back(stem + std::to_string(i));
  for (const auto& v : ring->variables()) vars.push_back(v);
  MonomialOrder ord =
      MonomialOrder::elimination(vars.size(), static_cast<unsigned>(count));
  return make_poly_ring(ring->field(), std::move(vars), std::move(ord));
}

RingPtr combine_rings_front(const RingPtr& front, const RingPtr& back,
                            const FieldPtr& field) {
  // front-block variables get fresh internal names so the two rings may share
  // variable names (Frobenius graphs map a ring to itself)
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < front->nvars(); ++i)
    vars.push_back("@k" + std::to_string(i));
  for (const auto& v : back->variables()) vars.push_back(v);
  MonomialOrder ord = MonomialOrder::elimination(
      vars.size(), static_cast<unsigned>(front->nvars()));
  return make_poly_ring(field, std::move(vars), std::move(ord));
}

Polynomial embed_at(const RingPtr& big, const Polynomial& f, std::size_t offset) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    ExpVec e(big->nvars(), 0);
    for (std::size_t k = 0; k < t.exp.size(); ++k) e[offset + k] = t.exp[k];
    out.push_back(Term{std::move(e), promote_scalar(t.coeff, big->field())});
  }
  return Polynomial::from_terms(big, std::move(out));
}

Polynomial project_window(const RingPtr& small, const Polynomial& f,
                          std::size_t offset) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    ExpVec e(small->nvars(), 0);
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (k < offset || k >= offset + small->nvars())
        throw InvalidArgumentError("projection: support outside window");
      e[k - offset] = t.exp[k];
    }
    Scalar c = t.coeff;
    if (!(*f.ring()->field() == *small->field())) {
      if (!c.is_constant())
        throw RingMismatchError("projection across coefficient fields");
      c = Scalar::from_int(small->field(), c.constant_value());
    }
    out.push_back(Term{std::move(e), std::move(c)});
  }
  return Polynomial::from_terms(small, std::move(out));
}

IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_as(*J.ring())) throw RingMismatchError();
  const RingPtr& R = I.ring();
  RingPtr W = extend_ring_front(R, 1);
  Polynomial t = Polynomial::variable(W, 0);
  Polynomial one_minus_t = Polynomial::one(W) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * embed_at(W, f, 1));
  for (const auto& g : J.generators())
    gens.push_back(one_minus_t * embed_at(W, g, 1));
  IdealHandle H(W, std::move(gens));
  std::vector<Polynomial> result;
  for (const auto& b : H.groebner_basis()) {
    bool uses_t = false;
    for (const auto& term : b.terms())
      if (term.exp[0] != 0) uses_t = true;
    if (!uses_t) result.push_back(project_window(R, b, 1));
  }
  return IdealHandle(R, std::move(result));
}

Polynomial poly_divexact(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  if (g.is_zero()) throw DivisionByZeroError();
  Polynomial rem = f;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& rl = rem.leading_term();
    const Term& gl = g.leading_term();
    if (!exp_divides(gl.exp, rl.exp))
      throw InvalidArgumentError("polynomial division is not exact");
    Term qt{exp_sub(rl.exp, gl.exp), rl.coeff / gl.coeff};
    rem = rem - g.mul_term(qt.exp, qt.coeff);
    quot.push_back(std::move(qt));
  }
  return Polynomial::from_terms(f.ring(), std::move(quot));
}

namespace {

IdealHandle colon_principal(const IdealHandle& I, const Polynomial& g) {
  // (I : g) = (I cap (g)) / g
  IdealHandle N = ideal_intersection(I, IdealHandle(I.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : N.generators()) gens.push_back(poly_divexact(h, g));
  return IdealHandle(I.ring(), std::move(gens));
}

}  // namespace

IdealHandle ideal_colon(const IdealHandle& I, const IdealHandle& J) {
  if (!I.ring()->same_as(*J.ring())) throw RingMismatchError();
  std::vector<Polynomial> nonzero;
  for (const auto& g : J.generators())
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty())
    return IdealHandle(I.ring(), {Polynomial::one(I.ring())});  // (I : 0) = (1)
  bool first = true;
  IdealHandle acc;
  for (const auto& g : nonzero) {
    IdealHandle c = colon_principal(I, g);
    acc = first ? c : ideal_intersection(acc, c);
    first = false;
  }
  return acc;
}

IdealHandle saturation(const IdealHandle& I, const IdealHandle& J) {
  ResourceBudget budget = ResourceBudget::current();
  IdealHandle prev = I;
  for (std::size_t step = 0; step < budget.max_saturation_steps; ++step) {
    IdealHandle next = ideal_colon(prev, J);
    if (ideal_equal(next, prev)) return prev;
    prev = next;
  }
  throw ResourceLimitError("saturation chain did not stabilize within budget");
}

IdealHandle ring_map_kernel(const RingMap& map,
                            const IdealHandle& target_relations) {
  if (map.coeff_frobenius_e != 0)
    throw InvalidArgumentError(
        "kernel computation requires identity coefficient action");
  if (!(*map.source->field() == *map.target->field()))
    throw RingMismatchError("kernel requires identical coefficient fields");
  if (target_relations.valid() &&
      !target_relations.ring()->same_as(*map.target))
    throw RingMismatchError("relations not in the target ring");

  const std::size_t nt = map.target->nvars();
  RingPtr W = combine_rings_front(map.target, map.source, map.target->field());
  std::vector<Polynomial> gens;
  if (target_relations.valid())
    for (const auto& r : target_relations.generators())
      gens.push_back(embed_at(W, r, 0));
  for (std::size_t i = 0; i < map.source->nvars(); ++i) {
    Polynomial xi = Polynomial::variable(W, nt + i);
    gens.push_back(xi - embed_at(W, map.images[i], 0));
  }
  IdealHandle H(W, std::move(gens));
  std::vector<Polynomial> kernel;
  for (const auto& b : H.groebner_basis()) {
    bool uses_target = false;
    for (const auto& term : b.terms())
      for (std::size_t k = 0; k < nt && !uses_target; ++k)
        if (term.exp[k] != 0) uses_target = true;
    if (!uses_target) kernel.push_back(project_window(map.source, b, nt));
  }
  return IdealHandle(map.source, std::move(kernel));
}

std::size_t krull_dimension(const IdealHandle& I) {
  if (!ideal_is_proper(I)) throw EmptyRingError();
  const std::size_t n = I.ring()->nvars();
  if (n > 20) throw InvalidArgumentError("dimension search limited to 20 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.groebner_basis()) {
    std::uint32_t mask = 0;
    const ExpVec& e = g.leading_term().exp;
    for (std::size_t k = 0; k < n; ++k)
      if (e[k] != 0) mask |= (1u << k);
    supports.push_back(mask);
  }
  std::size_t best = 0;
  for (std::uint32_t U = 0; U < (1u << n); ++U) {
    bool independent = true;
    for (std::uint32_t s : supports)
      if ((s & ~U) == 0) {
        independent = false;
        break;
      }
    if (independent) {
      std::size_t size = static_cast<std::size_t>(__builtin_popcount(U));
      best = std::max(best, size);
    }
  }
  return best;
}

bool is_m_primary(const IdealHandle& I, const IdealHandle& relations) {
  IdealHandle total = relations.valid() ? ideal_sum(I, relations) : I;
  if (!ideal_is_proper(total)) return false;
  return krull_dimension(total) == 0;
}

IdealHandle bracket_power_ideal(const IdealHandle& I, unsigned e) {
  if (e == 0) return I;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.frobenius_power(e));
  return IdealHandle(I.ring(), std::move(gens));
}

// ---- monomial ideal combinatorics ----

namespace {

using Mono = ExpVec;

bool mono_divides_any(const Mono& m, const std::vector<Mono>& gens) {
  for (const auto& g : gens)
    if (exp_divides(g, m)) return true;
  return false;
}

std::vector<Mono> minimalize(std::vector<Mono> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mono> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && exp_divides(gens[j], gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Mono> mono_intersect(const std::vector<Mono>& a,
                                 const std::vector<Mono>& b) {
  std::vector<Mono> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(exp_lcm(x, y));
  return minimalize(std::move(out));
}

// A subseteq B for monomial ideals
bool mono_contained(const std::vector<Mono>& A, const std::vector<Mono>& B) {
  for (const auto& m : A)
    if (!mono_divides_any(m, B)) return false;
  return true;
}

int support_size(const Mono& m) {
  int s = 0;
  for (auto x : m)
    if (x) ++s;
  return s;
}

}  // namespace

std::vector<IdealHandle> monomial_irreducible_decomposition(const IdealHandle& M) {
  const RingPtr& R = M.ring();
  std::vector<Mono> gens;
  for (const auto& g : M.generators()) {
    if (!g.is_monomial()) throw NotMonomialError();
    gens.push_back(g.leading_term().exp);
  }
  gens = minimalize(std::move(gens));
  if (gens.empty())
    throw NotMonomialError();  // the zero ideal has no monomial decomposition

  std::vector<std::vector<Mono>> work{gens};
  std::vector<std::vector<Mono>> components;
  while (!work.empty()) {
    std::vector<Mono> G = std::move(work.back());
    work.pop_back();
    std::size_t split = G.size();
    for (std::size_t i = 0; i < G.size(); ++i)
      if (support_size(G[i]) >= 2) {
        split = i;
        break;
      }
    if (split == G.size()) {
      components.push_back(std::move(G));
      continue;
    }
    Mono m = G[split];
    std::size_t k = 0;
    while (m[k] == 0) ++k;
    Mono pure(m.size(), 0);
    pure[k] = m[k];
    Mono rest = m;
    rest[k] = 0;
    std::vector<Mono> G1, G2;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (i == split) continue;
      G1.push_back(G[i]);
      G2.push_back(G[i]);
    }
    G1.push_back(pure);
    G2.push_back(rest);
    work.push_back(minimalize(std::move(G1)));
    work.push_back(minimalize(std::move(G2)));
  }

  // dedupe
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()),
                   components.end());

  // irredundance: drop any component containing the intersection of the rest
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (components.size() == 1) break;
      std::vector<Mono> inter;
      bool first = true;
      for (std::size_t j = 0; j < components.size(); ++j) {
        if (j == i) continue;
        inter = first ? components[j] : mono_intersect(inter, components[j]);
        first = false;
      }
      if (mono_contained(inter, components[i])) {
        components.erase(components.begin() + i);
        changed = true;
        break;
      }
    }
  }

  std::vector<IdealHandle> out;
  for (const auto& c : components) {
    std::vector<Polynomial> polys;
    for (const auto& m : c)
      polys.push_back(Polynomial::monomial(R, m, Scalar::one(R->field())));
    out.push_back(IdealHandle(R, std::move(polys)));
  }
  return out;
}

bool buchberger_criterion_holds(const std::vector<Polynomial>& basis,
                                const MonomialOrder& order) {
  if (basis.empty()) return true;
  ResourceBudget budget = ResourceBudget::current();
  gbdetail::Ctx ctx{&order, budget.max_degree};
  bool resort = !(order == basis[0].ring()->order());
  std::vector<TList> internal = to_internal(basis, ctx, resort);
  for (std::size_t i = 0; i < internal.size(); ++i)
    for (std::size_t j = i + 1; j < internal.size(); ++j) {
      TList s = gbdetail::spoly(ctx, internal[i], internal[j]);
      if (!gbdetail::reduce_full(ctx, std::move(s), internal).empty())
        return false;
    }
  return true;
}

}  // namespace charp
