#include "charp/runner.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <map>
#include <set>

#include "charp/errors.hpp"
#include "charp/oracle.hpp"
#include "charp/tight.hpp"

namespace charp {

namespace {

// ---------------------------------------------------------------- bind/exec

struct RingEntry {
  RingPresPtr pres;
  std::optional<SubringPresentation> sub;
  std::string source_name;  // for subrings
};

struct ElementEntry {
  std::string ring;
  Polynomial value;  // ambient representative, reduced
};

struct Env {
  RunConfig config;
  std::map<std::string, RingEntry> rings;
  std::map<std::string, QuotientIdeal> ideals;
  std::map<std::string, std::string> ideal_ring;  // ideal name -> ring name
  std::map<std::string, ElementEntry> elements;
  std::string current_ring;
};

void collect_idents(const ExprPtr& e, std::vector<const Expr*>& out) {
  if (!e) return;
  if (e->kind == Expr::Kind::Ident) out.push_back(e.get());
  collect_idents(e->lhs, out);
  collect_idents(e->rhs, out);
}

enum class ArgKind { Elem, Ideal, Int, NameRef };

struct CheckSig {
  std::vector<ArgKind> args;
  bool variadic_elems = false;
};

const std::map<std::string, CheckSig>& signatures() {
  static const std::map<std::string, CheckSig> table = {
      {"member", {{ArgKind::Elem, ArgKind::Ideal}}},
      {"ideal_equal", {{ArgKind::Ideal, ArgKind::Ideal}}},
      {"element_equal", {{ArgKind::Elem, ArgKind::Elem}}},
      {"parameter_ideal", {{ArgKind::Ideal}}},
      {"regular_sequence", {{}, true}},
      {"filter_regular", {{}, true}},
      {"m_primary", {{ArgKind::Ideal}}},
      {"dimension", {{ArgKind::NameRef, ArgKind::Int}}},
      {"frobenius_member", {{ArgKind::Elem, ArgKind::Ideal}}},
      {"frobenius_closed", {{ArgKind::Ideal}}},
      {"bracket_commute", {{ArgKind::Ideal}}},
      {"tight_member", {{ArgKind::Elem, ArgKind::Ideal}}},
      {"special_part", {{ArgKind::Elem, ArgKind::Ideal}}},
      {"product_identity", {{ArgKind::Ideal, ArgKind::Ideal}}},
      {"briancon_skoda", {{ArgKind::Ideal}}},
      {"socle_bound", {{ArgKind::Ideal, ArgKind::Ideal}}},
  };
  return table;
}

const std::set<std::string>& valid_statuses() {
  static const std::set<std::string> s = {"IN",   "OUT",           "UNKNOWN",
                                          "PASS", "FAIL",          "ERROR",
                                          "RESOURCE_LIMIT"};
  return s;
}

// --------------------------------------------------------------- name sets

struct NameSets {
  std::set<std::string> own;     // variables, parameters, own elements
  std::set<std::string> source;  // source-ring names (subrings only)
};

NameSets name_sets(const Env& env, const std::string& ring_name) {
  NameSets ns;
  auto it = env.rings.find(ring_name);
  if (it == env.rings.end()) return ns;
  const RingEntry& e = it->second;
  for (const auto& v : e.pres->ambient()->variables()) ns.own.insert(v);
  for (const auto& p : e.pres->ambient()->field()->parameters()) {
    ns.own.insert(p);
    ns.source.insert(p);
  }
  for (const auto& [name, el] : env.elements)
    if (el.ring == ring_name) ns.own.insert(name);
  if (e.sub) {
    const auto& src = env.rings.at(e.source_name);
    for (const auto& v : src.pres->ambient()->variables()) ns.source.insert(v);
    for (const auto& [name, el] : env.elements)
      if (el.ring == e.source_name) ns.source.insert(name);
  }
  return ns;
}

// route an expression: true = own ring, false = source ring (contract)
bool expr_route(const Env& env, const std::string& ring_name, const ExprPtr& e) {
  std::vector<const Expr*> idents;
  collect_idents(e, idents);
  NameSets ns = name_sets(env, ring_name);
  bool all_own = true, all_source = true;
  for (const Expr* id : idents) {
    if (!ns.own.count(id->name)) all_own = false;
    if (!ns.source.count(id->name)) all_source = false;
  }
  if (all_own) return true;
  if (all_source && env.rings.at(ring_name).sub) return false;
  for (const Expr* id : idents)
    if (!ns.own.count(id->name) && !ns.source.count(id->name))
      throw NameError(id->pos.line, id->pos.col,
                      "unknown name '" + id->name + "' in ring " + ring_name);
  throw TypeError(e->pos.line, e->pos.col,
                  "expression mixes presentation and source-ring variables");
}

Polynomial eval_in_ring(const Env& env, const RingPtr& R,
                        const std::string& ring_name, const ExprPtr& e);

Polynomial eval_node(const Env& env, const RingPtr& R,
                     const std::string& ring_name, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Int:
      return Polynomial::constant(R, Scalar::from_int(R->field(), e->value));
    case Expr::Kind::Ident: {
      int vi = R->variable_index(e->name);
      if (vi >= 0) return Polynomial::variable(R, static_cast<std::size_t>(vi));
      int pi = R->field()->parameter_index(e->name);
      if (pi >= 0)
        return Polynomial::constant(
            R, Scalar::parameter(R->field(), static_cast<std::size_t>(pi)));
      auto it = env.elements.find(e->name);
      if (it != env.elements.end() && it->second.ring == ring_name)
        return it->second.value;
      throw NameError(e->pos.line, e->pos.col, "unknown name '" + e->name + "'");
    }
    case Expr::Kind::Add:
      return eval_node(env, R, ring_name, e->lhs) +
             eval_node(env, R, ring_name, e->rhs);
    case Expr::Kind::Sub:
      return eval_node(env, R, ring_name, e->lhs) -
             eval_node(env, R, ring_name, e->rhs);
    case Expr::Kind::Mul:
      return eval_node(env, R, ring_name, e->lhs) *
             eval_node(env, R, ring_name, e->rhs);
    case Expr::Kind::Div: {
      Polynomial denom = eval_node(env, R, ring_name, e->rhs);
      if (!denom.is_constant())
        throw TypeError(e->pos.line, e->pos.col,
                        "division only by coefficient scalars");
      if (denom.is_zero()) throw DivisionByZeroError();
      Scalar inv = denom.terms()[0].coeff.inverse();
      return eval_node(env, R, ring_name, e->lhs).scale(inv);
    }
    case Expr::Kind::Neg:
      return -eval_node(env, R, ring_name, e->lhs);
    case Expr::Kind::Pow: {
      if (e->value < 0)
        throw TypeError(e->pos.line, e->pos.col, "negative exponent");
      return eval_node(env, R, ring_name, e->lhs)
          .pow(static_cast<std::uint64_t>(e->value));
    }
  }
  throw InvalidArgumentError("unreachable expression kind");
}

Polynomial eval_in_ring(const Env& env, const RingPtr& R,
                        const std::string& ring_name, const ExprPtr& e) {
  return eval_node(env, R, ring_name, e);
}

// Evaluates an element expression in the named ring, contracting through the
// subring presentation when the expression lives in the source ring.
Polynomial eval_element(const Env& env, const std::string& ring_name,
                        const ExprPtr& e) {
  const RingEntry& entry = env.rings.at(ring_name);
  if (expr_route(env, ring_name, e))
    return entry.pres->reduce(
        eval_in_ring(env, entry.pres->ambient(), ring_name, e));
  const RingEntry& src = env.rings.at(entry.source_name);
  Polynomial s =
      src.pres->reduce(eval_in_ring(env, src.pres->ambient(), entry.source_name, e));
  return entry.pres->reduce(entry.sub->contract(s));
}

unsigned exponent_of_power(std::uint32_t p, long long q, const SourcePos& pos) {
  if (q < 1) throw TypeError(pos.line, pos.col, "bracket power must be >= 1");
  unsigned e = 0;
  long long v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1)
    throw TypeError(pos.line, pos.col,
                    "bracket power " + std::to_string(q) +
                        " is not a power of the characteristic " +
                        std::to_string(p));
  return e;
}

QuotientIdeal eval_ideal(const Env& env, const std::string& ring_ctx,
                         const IdealExprPtr& e);

std::string ideal_ring_name(const Env& env, const std::string& ring_ctx,
                            const IdealExprPtr& e) {
  switch (e->kind) {
    case IdealExpr::Kind::Named: {
      auto it = env.ideal_ring.find(e->name);
      if (it == env.ideal_ring.end())
        throw NameError(e->pos.line, e->pos.col,
                        "unknown ideal '" + e->name + "'");
      return it->second;
    }
    case IdealExpr::Kind::MaxIdeal:
      return e->name.empty() ? ring_ctx : e->name;
    case IdealExpr::Kind::Gens:
      return ring_ctx;
    case IdealExpr::Kind::Bracket:
    case IdealExpr::Kind::SocleBound:
      return ideal_ring_name(env, ring_ctx, e->a);
    default:
      return ideal_ring_name(env, ring_ctx, e->a);
  }
}

QuotientIdeal eval_ideal(const Env& env, const std::string& ring_ctx,
                         const IdealExprPtr& e) {
  switch (e->kind) {
    case IdealExpr::Kind::Gens: {
      std::vector<Polynomial> gens;
      for (const auto& g : e->gens)
        gens.push_back(eval_element(env, ring_ctx, g));
      return QuotientIdeal(env.rings.at(ring_ctx).pres, std::move(gens));
    }
    case IdealExpr::Kind::Named: {
      auto it = env.ideals.find(e->name);
      if (it == env.ideals.end())
        throw NameError(e->pos.line, e->pos.col,
                        "unknown ideal '" + e->name + "'");
      return it->second;
    }
    case IdealExpr::Kind::Product:
    case IdealExpr::Kind::Sum:
    case IdealExpr::Kind::Intersection:
    case IdealExpr::Kind::Colon: {
      std::string rn = ideal_ring_name(env, ring_ctx, e->a);
      QuotientIdeal a = eval_ideal(env, rn, e->a);
      QuotientIdeal b = eval_ideal(env, rn, e->b);
      switch (e->kind) {
        case IdealExpr::Kind::Product: return quotient_ideal_product(a, b);
        case IdealExpr::Kind::Sum: return quotient_ideal_sum(a, b);
        case IdealExpr::Kind::Intersection:
          return quotient_ideal_intersection(a, b);
        default: return quotient_ideal_colon(a, b);
      }
    }
    case IdealExpr::Kind::Bracket: {
      std::string rn = ideal_ring_name(env, ring_ctx, e->a);
      QuotientIdeal a = eval_ideal(env, rn, e->a);
      unsigned ex = exponent_of_power(
          a.ring()->ambient()->field()->characteristic(), e->bracket_q, e->pos);
      return bracket_power(a, ex);
    }
    case IdealExpr::Kind::MaxIdeal: {
      std::string rn = e->name.empty() ? ring_ctx : e->name;
      auto it = env.rings.find(rn);
      if (it == env.rings.end())
        throw NameError(e->pos.line, e->pos.col, "unknown ring '" + rn + "'");
      return max_ideal(it->second.pres);
    }
    case IdealExpr::Kind::SocleBound: {
      std::string rn = ideal_ring_name(env, ring_ctx, e->a);
      return colon_socle_bound(eval_ideal(env, rn, e->a));
    }
  }
  throw InvalidArgumentError("unreachable ideal expression kind");
}

// ------------------------------------------------------------ bind checks

void bind_expr(const Env& env, const std::string& ring_name, const ExprPtr& e) {
  expr_route(env, ring_name, e);  // raises NameError / TypeError
}

// --------------------------------------------------------------- reporting

nlohmann::json poly_list_json(const std::vector<Polynomial>& ps) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["status"] = status_string(v.status);
  if (v.certificate_exponent) j["certificate_exponent"] = *v.certificate_exponent;
  if (v.witness) j["witness"] = v.witness->to_string();
  if (v.witness_exponent) j["witness_exponent"] = *v.witness_exponent;
  if (v.refuting_multiplier)
    j["refuting_multiplier"] = v.refuting_multiplier->to_string();
  j["explored_emax"] = v.explored_emax;
  j["narrative"] = v.narrative;
  nlohmann::json facts = nlohmann::json::array();
  for (const auto& f : v.certificate) {
    nlohmann::json fj;
    fj["label"] = f.label;
    fj["element"] = f.element.to_string();
    fj["ideal"] = poly_list_json(f.ideal.generators());
    fj["holds"] = f.holds;
    facts.push_back(std::move(fj));
  }
  j["facts"] = std::move(facts);
  return j;
}

nlohmann::json tight_probe_json(const TightProbe& p) {
  nlohmann::json j;
  j["element"] = p.element.to_string();
  j["in_product_star"] = verdict_json(p.in_product_star);
  j["in_factor_closure_product"] = p.in_factor_closure_product;
  return j;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void strip_times(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("time_ms");
    j.erase("total_time_ms");
    j.erase("hash");
    for (auto& [k, v] : j.items()) strip_times(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_times(v);
  }
}

// -------------------------------------------------------------- the runner

struct BoundCheck {
  CheckStmt stmt;
  int index;
  std::string ring_ctx;
  std::string scenario;
};

class SessionRunner {
public:
  SessionRunner(const Session& session, const RunConfig& config,
                const std::string& scenario = "") {
    scenario_ = scenario;
    env_.config = config;
    bind_and_declare(session);
  }

  // exposes env construction for a second session appended to the same report
  std::vector<CheckResult> run_checks() {
    std::vector<CheckResult> results(checks_.size());
    auto run_one = [this](const BoundCheck& bc) { return execute(bc); };
    if (env_.config.parallel) {
      std::vector<std::future<CheckResult>> futures;
      futures.reserve(checks_.size());
      for (const auto& bc : checks_)
        futures.push_back(std::async(std::launch::async, run_one, std::cref(bc)));
      for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
      for (std::size_t i = 0; i < checks_.size(); ++i)
        results[i] = run_one(checks_[i]);
    }
    return results;
  }

private:
  // ---- binding + declaration execution (sequential, ordered) ----
  void bind_and_declare(const Session& session) {
    // pass 1: pure name/type binding; nothing executes on error
    Env shadow;
    shadow.config = env_.config;
    int check_index = 0;
    for (const auto& stmt : session.statements) bind_stmt(shadow, stmt, check_index);
    // pass 2: execute declarations, queue checks
    check_index = 0;
    for (const auto& stmt : session.statements) exec_stmt(stmt, check_index);
  }

  void declare_name(Env& env, const std::string& name, const SourcePos& pos) {
    if (env.rings.count(name) || env.ideals.count(name) ||
        env.elements.count(name))
      throw NameError(pos.line, pos.col, "name '" + name + "' already declared");
    (void)env;
  }

  MonomialOrder order_for(std::size_t nvars) const {
    return env_.config.order == "lex" ? MonomialOrder::lex(nvars)
                                      : MonomialOrder::grevlex(nvars);
  }

  // shadow binding: registers names with dummy structures so resolution can
  // be validated without running the engine
  void bind_stmt(Env& shadow, const Stmt& stmt, int& check_index) {
    if (const auto* d = std::get_if<RingDecl>(&stmt)) {
      declare_name(shadow, d->name, d->pos);
      std::set<std::string> seen;
      for (const auto& v : d->vars)
        if (!seen.insert(v).second)
          throw NameError(d->pos.line, d->pos.col, "duplicate variable '" + v + "'");
      for (const auto& p : d->params)
        if (!seen.insert(p).second)
          throw NameError(d->pos.line, d->pos.col,
                          "parameter '" + p + "' collides with a variable");
      // a throwaway presentation for name resolution only
      auto F = make_field(d->p, d->params);
      auto R = make_poly_ring(F, d->vars, order_for(d->vars.size()));
      RingEntry entry;
      entry.pres = RingPresentation::polynomial(R);
      shadow.rings[d->name] = entry;
      shadow.current_ring = d->name;
      for (const auto& rel : d->relations) bind_expr(shadow, d->name, rel);
    } else if (const auto* d = std::get_if<SubringDecl>(&stmt)) {
      declare_name(shadow, d->name, d->pos);
      auto it = shadow.rings.find(d->source);
      if (it == shadow.rings.end())
        throw NameError(d->pos.line, d->pos.col,
                        "unknown ring '" + d->source + "'");
      if (d->degree < 1)
        throw TypeError(d->pos.line, d->pos.col, "veronese degree must be >= 1");
      // placeholder entry: variables are unknown until execution, so register
      // the source route and an empty own-variable set
      RingEntry entry;
      auto F = it->second.pres->ambient()->field();
      entry.pres = RingPresentation::polynomial(
          make_poly_ring(F, {"@sub" + d->name}));
      entry.sub.emplace();
      entry.source_name = d->source;
      shadow.rings[d->name] = entry;
      shadow.current_ring = d->name;
    } else if (const auto* d = std::get_if<IdealDecl>(&stmt)) {
      declare_name(shadow, d->name, d->pos);
      std::string rn = d->in_ring.empty() ? shadow.current_ring : d->in_ring;
      if (!shadow.rings.count(rn))
        throw NameError(d->pos.line, d->pos.col,
                        rn.empty() ? "no ring declared yet"
                                   : "unknown ring '" + rn + "'");
      bind_ideal_shallow(shadow, rn, d->expr);
      shadow.ideals[d->name] = QuotientIdeal();
      shadow.ideal_ring[d->name] = rn;
    } else if (const auto* d = std::get_if<ElementDecl>(&stmt)) {
      declare_name(shadow, d->name, d->pos);
      std::string rn = d->in_ring.empty() ? shadow.current_ring : d->in_ring;
      if (!shadow.rings.count(rn))
        throw NameError(d->pos.line, d->pos.col,
                        rn.empty() ? "no ring declared yet"
                                   : "unknown ring '" + rn + "'");
      bind_expr_shallow(shadow, rn, d->expr);
      shadow.elements[d->name] = ElementEntry{rn, Polynomial()};
    } else if (const auto* d = std::get_if<CheckStmt>(&stmt)) {
      bind_check(shadow, *d);
      ++check_index;
    }
  }

  // subring shadow entries cannot resolve own variable names before
  // execution; accept idents resolvable in either route during binding
  void bind_expr_shallow(const Env& shadow, const std::string& rn,
                         const ExprPtr& e) {
    const RingEntry& entry = shadow.rings.at(rn);
    if (entry.sub) {
      std::vector<const Expr*> idents;
      collect_idents(e, idents);
      NameSets ns = name_sets(shadow, rn);
      for (const Expr* id : idents)
        if (!ns.own.count(id->name) && !ns.source.count(id->name))
          throw NameError(id->pos.line, id->pos.col,
                          "unknown name '" + id->name + "'");
      return;
    }
    bind_expr(shadow, rn, e);
  }

  void bind_ideal_shallow(const Env& shadow, const std::string& rn,
                          const IdealExprPtr& e) {
    switch (e->kind) {
      case IdealExpr::Kind::Gens:
        for (const auto& g : e->gens) bind_expr_shallow(shadow, rn, g);
        return;
      case IdealExpr::Kind::Named:
        if (!shadow.ideal_ring.count(e->name))
          throw NameError(e->pos.line, e->pos.col,
                          "unknown ideal '" + e->name + "'");
        return;
      case IdealExpr::Kind::MaxIdeal:
        if (!e->name.empty() && !shadow.rings.count(e->name))
          throw NameError(e->pos.line, e->pos.col,
                          "unknown ring '" + e->name + "'");
        return;
      case IdealExpr::Kind::Bracket:
      case IdealExpr::Kind::SocleBound:
        bind_ideal_shallow(shadow, rn, e->a);
        return;
      default:
        bind_ideal_shallow(shadow, rn, e->a);
        bind_ideal_shallow(shadow, rn, e->b);
        return;
    }
  }

  void bind_check(const Env& shadow, const CheckStmt& d) {
    auto sig_it = signatures().find(d.name);
    if (sig_it == signatures().end())
      throw NameError(d.pos.line, d.pos.col, "unknown check '" + d.name + "'");
    const CheckSig& sig = sig_it->second;
    if (sig.variadic_elems) {
      if (d.args.empty())
        throw TypeError(d.pos.line, d.pos.col, "check needs arguments");
    } else if (d.args.size() != sig.args.size()) {
      throw TypeError(d.pos.line, d.pos.col,
                      "check '" + d.name + "' expects " +
                          std::to_string(sig.args.size()) + " arguments");
    }
    std::string rn = shadow.current_ring;
    if (rn.empty()) throw NameError(d.pos.line, d.pos.col, "no ring declared yet");
    for (std::size_t i = 0; i < d.args.size(); ++i) {
      ArgKind kind = sig.variadic_elems ? ArgKind::Elem : sig.args[i];
      const CheckArg& a = d.args[i];
      switch (kind) {
        case ArgKind::Ideal:
          if (a.ideal) {
            bind_ideal_shallow(shadow, rn, a.ideal);
          } else if (a.expr->kind == Expr::Kind::Ident) {
            if (!shadow.ideal_ring.count(a.expr->name))
              throw NameError(a.expr->pos.line, a.expr->pos.col,
                              "unknown ideal '" + a.expr->name + "'");
          } else {
            throw TypeError(d.pos.line, d.pos.col,
                            "argument " + std::to_string(i + 1) +
                                " of '" + d.name + "' must be an ideal");
          }
          break;
        case ArgKind::Elem:
          if (a.ideal)
            throw TypeError(d.pos.line, d.pos.col,
                            "argument " + std::to_string(i + 1) +
                                " of '" + d.name + "' must be an element");
          bind_expr_shallow(shadow, rn, a.expr);
          break;
        case ArgKind::Int:
          if (a.ideal || a.expr->kind != Expr::Kind::Int)
            throw TypeError(d.pos.line, d.pos.col,
                            "argument " + std::to_string(i + 1) +
                                " of '" + d.name + "' must be an integer");
          break;
        case ArgKind::NameRef:
          if (a.ideal || a.expr->kind != Expr::Kind::Ident)
            throw TypeError(d.pos.line, d.pos.col,
                            "argument " + std::to_string(i + 1) +
                                " of '" + d.name + "' must be a name");
          if (!shadow.rings.count(a.expr->name) &&
              !shadow.ideal_ring.count(a.expr->name))
            throw NameError(a.expr->pos.line, a.expr->pos.col,
                            "unknown ring or ideal '" + a.expr->name + "'");
          break;
      }
    }
    for (const auto& u : d.usings) {
      if (u.key != "c")
        throw TypeError(d.pos.line, d.pos.col,
                        "unknown binding '" + u.key + "' (only 'using c=...')");
      if (!u.is_auto) bind_expr_shallow(shadow, rn, u.value);
    }
    for (const auto& p : d.probes) bind_expr_shallow(shadow, rn, p);
    if (d.expect && !valid_statuses().count(*d.expect))
      throw TypeError(d.pos.line, d.pos.col,
                      "invalid expected status '" + *d.expect + "'");
    if (d.emax && (*d.emax < 0 || *d.emax > 16))
      throw TypeError(d.pos.line, d.pos.col, "emax out of range [0,16]");
    if (d.window && (*d.window < 1 || *d.window > 8))
      throw TypeError(d.pos.line, d.pos.col, "window out of range [1,8]");
  }

  // ---- execution ----
  void exec_stmt(const Stmt& stmt, int& check_index) {
    if (const auto* d = std::get_if<RingDecl>(&stmt)) {
      auto F = make_field(d->p, d->params);
      auto R = make_poly_ring(F, d->vars, order_for(d->vars.size()));
      RingEntry entry;
      if (d->relations.empty()) {
        entry.pres = RingPresentation::polynomial(R);
      } else {
        // relation expressions only reference variables and parameters
        std::vector<Polynomial> rels;
        for (const auto& rel : d->relations)
          rels.push_back(eval_in_ring(env_, R, d->name, rel));
        entry.pres = quotient_ring(R, IdealHandle(R, std::move(rels)));
      }
      env_.rings[d->name] = std::move(entry);
      env_.current_ring = d->name;
    } else if (const auto* d = std::get_if<SubringDecl>(&stmt)) {
      const RingEntry& src = env_.rings.at(d->source);
      RingEntry entry;
      entry.sub = veronese_presentation(src.pres,
                                        static_cast<unsigned>(d->degree));
      entry.pres = entry.sub->presented;
      entry.source_name = d->source;
      env_.rings[d->name] = std::move(entry);
      env_.current_ring = d->name;
    } else if (const auto* d = std::get_if<IdealDecl>(&stmt)) {
      std::string rn = d->in_ring.empty() ? env_.current_ring : d->in_ring;
      env_.ideals[d->name] = eval_ideal(env_, rn, d->expr);
      env_.ideal_ring[d->name] = ideal_ring_name(env_, rn, d->expr);
    } else if (const auto* d = std::get_if<ElementDecl>(&stmt)) {
      std::string rn = d->in_ring.empty() ? env_.current_ring : d->in_ring;
      env_.elements[d->name] = ElementEntry{rn, eval_element(env_, rn, d->expr)};
    } else if (const auto* d = std::get_if<CheckStmt>(&stmt)) {
      BoundCheck bc;
      bc.stmt = *d;
      bc.index = check_index++;
      bc.ring_ctx = env_.current_ring;
      bc.scenario = scenario_;
      checks_.push_back(std::move(bc));
    }
  }

  // ring context of a check: the ring of its first ideal argument, else the
  // statement-position current ring
  std::string check_ring(const BoundCheck& bc) const {
    const CheckSig& sig = signatures().at(bc.stmt.name);
    for (std::size_t i = 0; i < bc.stmt.args.size(); ++i) {
      ArgKind kind = sig.variadic_elems ? ArgKind::Elem : sig.args[i];
      if (kind != ArgKind::Ideal) continue;
      const CheckArg& a = bc.stmt.args[i];
      if (a.ideal) return ideal_ring_name(env_, bc.ring_ctx, a.ideal);
      return env_.ideal_ring.at(a.expr->name);
    }
    return bc.ring_ctx;
  }

  QuotientIdeal ideal_arg(const BoundCheck& bc, std::size_t i,
                          const std::string& rn) const {
    const CheckArg& a = bc.stmt.args[i];
    if (a.ideal) return eval_ideal(env_, rn, a.ideal);
    return env_.ideals.at(a.expr->name);
  }

  MultiplierCertificate multiplier_for(const BoundCheck& bc,
                                       const RingPresPtr& pres,
                                       const std::string& rn,
                                       nlohmann::json& detail) const {
    for (const auto& u : bc.stmt.usings) {
      if (u.is_auto) {
        auto cands = jacobian_test_element_candidates(pres);
        detail["multiplier"] = cands[0].element.to_string();
        detail["multiplier_origin"] = "auto (first jacobian candidate)";
        return cands[0];
      }
      Polynomial c = eval_element(env_, rn, u.value);
      auto cert =
          make_multiplier(pres, c, MultiplierCertificate::TestStatus::Asserted);
      detail["multiplier"] = c.to_string();
      detail["multiplier_origin"] = "user-supplied, test status asserted";
      return cert;
    }
    detail["multiplier"] = "1";
    detail["multiplier_origin"] =
        "default c = 1 without test-element status (cannot refute)";
    return MultiplierCertificate{
        Polynomial::one(pres->ambient()),
        MultiplierCertificate::Admissibility::PrincipalVerified,
        MultiplierCertificate::TestStatus::None, "default"};
  }

  CheckResult execute(const BoundCheck& bc) const {
    CheckResult res;
    res.index = bc.index;
    res.scenario = bc.scenario;
    res.name = bc.stmt.name;
    for (const auto& a : bc.stmt.args)
      res.inputs.push_back(a.ideal ? print_ideal_expr(a.ideal)
                                   : print_expr(a.expr));
    res.expected = bc.stmt.expect;
    auto start = std::chrono::steady_clock::now();
    try {
      run_check(bc, res);
    } catch (const ResourceLimitError& e) {
      res.status = "RESOURCE_LIMIT";
      res.detail["error"] = e.what();
    } catch (const Error& e) {
      res.status = "ERROR";
      res.detail["error"] = e.what();
    }
    res.time_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (res.expected) {
      res.match = (res.status == *res.expected);
    } else {
      res.match = res.status != "FAIL" && res.status != "ERROR";
    }
    return res;
  }

  void set_verdict(CheckResult& res, const Verdict& v) const {
    res.status = status_string(v.status);
    res.detail["verdict"] = verdict_json(v);
    res.certificate_verified = replay_certificate(v);
    if (!res.certificate_verified) res.status = "ERROR";
  }

  ClosedParams closed_params(const BoundCheck& bc, const std::string& rn) const {
    ClosedParams p;
    p.emax = bc.stmt.emax ? unsigned(*bc.stmt.emax) : env_.config.emax;
    p.window = bc.stmt.window ? unsigned(*bc.stmt.window) : env_.config.window;
    p.probe_degree = env_.config.probe_degree;
    for (const auto& pe : bc.stmt.probes)
      p.probes.push_back(eval_element(env_, rn, pe));
    return p;
  }

  void run_check(const BoundCheck& bc, CheckResult& res) const {
    const std::string& name = bc.stmt.name;
    std::string rn = check_ring(bc);
    const RingEntry& entry = env_.rings.at(rn);
    const RingPresPtr& pres = entry.pres;
    ClosedParams params = closed_params(bc, rn);
    res.detail["ring"] = pres->to_string();

    auto elem_arg = [&](std::size_t i) {
      return eval_element(env_, rn, bc.stmt.args[i].expr);
    };

    if (name == "member") {
      Polynomial x = elem_arg(0);
      QuotientIdeal I = ideal_arg(bc, 1, rn);
      bool in = I.contains(x);
      res.status = in ? "IN" : "OUT";
      res.detail["normal_form"] = normal_form(x, I.lift()).to_string();
    } else if (name == "ideal_equal") {
      QuotientIdeal I = ideal_arg(bc, 0, rn);
      QuotientIdeal J = ideal_arg(bc, 1, rn);
      bool eq = I.equals(J);
      res.status = eq ? "PASS" : "FAIL";
      res.detail["lhs_basis"] = poly_list_json(I.lift().groebner_basis());
      res.detail["rhs_basis"] = poly_list_json(J.lift().groebner_basis());
    } else if (name == "element_equal") {
      Polynomial f = elem_arg(0), g = elem_arg(1);
      bool eq = pres->elements_equal(f, g);
      res.status = eq ? "PASS" : "FAIL";
      res.detail["difference_normal_form"] = pres->reduce(f - g).to_string();
    } else if (name == "parameter_ideal") {
      QuotientIdeal I = ideal_arg(bc, 0, rn);
      bool ok = false;
      try {
        ok = is_parameter_ideal(I);
      } catch (const TooManyElementsError& e) {
        res.detail["note"] = e.what();
      }
      res.status = ok ? "PASS" : "FAIL";
    } else if (name == "regular_sequence" || name == "filter_regular") {
      std::vector<Polynomial> xs;
      for (std::size_t i = 0; i < bc.stmt.args.size(); ++i)
        xs.push_back(elem_arg(i));
      bool ok = name == "regular_sequence"
                    ? is_regular_sequence(xs, pres)
                    : is_filter_regular_sequence(xs, pres);
      res.status = ok ? "PASS" : "FAIL";
    } else if (name == "m_primary") {
      QuotientIdeal I = ideal_arg(bc, 0, rn);
      bool ok = is_m_primary(I.lift(), IdealHandle(pres->ambient(), {}));
      res.status = ok ? "PASS" : "FAIL";
    } else if (name == "dimension") {
      const std::string& ref = bc.stmt.args[0].expr->name;
      long long expected = bc.stmt.args[1].expr->value;
      std::size_t dim;
      if (env_.rings.count(ref)) {
        dim = env_.rings.at(ref).pres->dimension();
      } else {
        dim = krull_dimension(env_.ideals.at(ref).lift());
      }
      res.status = (static_cast<long long>(dim) == expected) ? "PASS" : "FAIL";
      res.detail["computed"] = dim;
      res.detail["expected"] = expected;
    } else if (name == "frobenius_member") {
      Polynomial x = elem_arg(0);
      QuotientIdeal I = ideal_arg(bc, 1, rn);
      set_verdict(res, frobenius_membership(x, I, params.emax));
    } else if (name == "frobenius_closed") {
      QuotientIdeal I = ideal_arg(bc, 0, rn);
      set_verdict(res, is_frobenius_closed(I, params));
    } else if (name == "bracket_commute") {
      QuotientIdeal q = ideal_arg(bc, 0, rn);
      BracketCommuteReport rep = bracket_commute_check(q, params.emax, params.window);
      res.status = rep.certified ? (rep.pass ? "PASS" : "FAIL") : "UNKNOWN";
      res.detail["lhs"] = poly_list_json(rep.lhs.lift().groebner_basis());
      res.detail["rhs"] = poly_list_json(rep.rhs.lift().groebner_basis());
      res.detail["lhs_chain_stable"] = rep.lhs_chain.stable;
      res.detail["rhs_chain_stable"] = rep.rhs_chain.stable;
    } else if (name == "tight_member") {
      Polynomial x = elem_arg(0);
      QuotientIdeal I = ideal_arg(bc, 1, rn);
      MultiplierCertificate c = multiplier_for(bc, pres, rn, res.detail);
      set_verdict(res, tight_membership(x, I, c, params.emax));
    } else if (name == "special_part") {
      Polynomial x = elem_arg(0);
      QuotientIdeal I = ideal_arg(bc, 1, rn);
      set_verdict(res, special_part_membership(x, I, params.emax));
    } else if (name == "product_identity") {
      QuotientIdeal q1 = ideal_arg(bc, 0, rn);
      QuotientIdeal q2 = ideal_arg(bc, 1, rn);
      std::optional<MultiplierCertificate> mult;
      if (!bc.stmt.usings.empty())
        mult = multiplier_for(bc, pres, rn, res.detail);
      ProductIdentityReport rep = product_identity_check(q1, q2, mult, params);
      res.status = status_string(rep.status());
      res.detail["q1_subseteq_q2"] = rep.q1_subseteq_q2;
      res.detail["q2_subseteq_q1"] = rep.q2_subseteq_q1;
      res.detail["hypothesis_flagged"] = rep.hypothesis_flagged;
      res.detail["q1_parameter_ideal"] = rep.q1_parameter;
      res.detail["q2_parameter_ideal"] = rep.q2_parameter;
      res.detail["q1_closed"] = verdict_json(rep.q1_closed);
      res.detail["q2_closed"] = verdict_json(rep.q2_closed);
      res.detail["product_closed"] = verdict_json(rep.product_closed);
      res.detail["frobenius_equality"] =
          layer_result_string(rep.frobenius_equality);
      res.detail["frobenius_method"] = rep.frobenius_method;
      if (rep.decomposition_checked) {
        res.detail["decomposition_components"] = rep.decomposition_components;
        res.detail["decomposition_valid"] = rep.decomposition_valid;
      }
      nlohmann::json evidence = nlohmann::json::array();
      for (const auto& pr : rep.tight_evidence)
        evidence.push_back(tight_probe_json(pr));
      res.detail["tight_evidence"] = std::move(evidence);
    } else if (name == "briancon_skoda") {
      QuotientIdeal q = ideal_arg(bc, 0, rn);
      MultiplierCertificate c =
          bc.stmt.usings.empty()
              ? default_bs_multiplier(pres, res.detail)
              : multiplier_for(bc, pres, rn, res.detail);
      BriansonSkodaReport rep = briancon_skoda_check(q, c, params);
      res.status = status_string(rep.status());
      res.detail["q_parameter_ideal"] = rep.q_parameter;
      res.detail["surrogate"] = layer_result_string(rep.surrogate);
      res.detail["surrogate_method"] = rep.surrogate_method;
      res.detail["counterexample"] = rep.counterexample;
      nlohmann::json evidence = nlohmann::json::array();
      for (const auto& pr : rep.evidence) evidence.push_back(tight_probe_json(pr));
      res.detail["evidence"] = std::move(evidence);
    } else if (name == "socle_bound") {
      QuotientIdeal q = ideal_arg(bc, 0, rn);
      QuotientIdeal expected = ideal_arg(bc, 1, rn);
      QuotientIdeal bound = colon_socle_bound(q);
      res.status = bound.equals(expected) ? "PASS" : "FAIL";
      res.detail["computed"] = poly_list_json(bound.lift().groebner_basis());
      res.detail["improper"] = !bound.is_proper();
      res.detail["label"] =
          "lower bound for q^* valid under Gorenstein + non-F-rational "
          "hypotheses; the operation only computes (q : m)";
    } else {
      throw InvalidArgumentError("unhandled check '" + name + "'");
    }
  }

  MultiplierCertificate default_bs_multiplier(const RingPresPtr& pres,
                                              nlohmann::json& detail) const {
    try {
      auto cands = jacobian_test_element_candidates(pres);
      detail["multiplier"] = cands[0].element.to_string();
      detail["multiplier_origin"] = "auto (first jacobian candidate)";
      return cands[0];
    } catch (const EmptyJacobianError&) {
      detail["multiplier"] = "1";
      detail["multiplier_origin"] =
          "jacobian empty; default c = 1 without test-element status";
      return MultiplierCertificate{
          Polynomial::one(pres->ambient()),
          MultiplierCertificate::Admissibility::PrincipalVerified,
          MultiplierCertificate::TestStatus::None, "default"};
    }
  }

  Env env_;
  std::vector<BoundCheck> checks_;
  std::string scenario_;
};

}  // namespace

int Report::exit_code() const {
  bool limited = false, mismatch = false;
  for (const auto& c : checks) {
    if (c.status == "RESOURCE_LIMIT") limited = true;
    if (!c.match) mismatch = true;
  }
  if (limited) return 3;
  if (mismatch) return 1;
  return 0;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = "charp-report/1";
  j["tool"] = "charp 1.0.0";
  j["assumption"] =
      "local rings are modeled as graded/affine quotients with m = "
      "(variables); the ideals checked are m-primary or monomial in "
      "parameters, for which the graded computations represent the local "
      "statements";
  nlohmann::json cfg;
  cfg["emax"] = config.emax;
  cfg["window"] = config.window;
  cfg["order"] = config.order;
  cfg["seed"] = config.seed;
  cfg["probe_degree"] = config.probe_degree;
  cfg["parallel"] = config.parallel;
  cfg["budget"] = {{"max_degree", config.budget.max_degree},
                   {"max_basis", config.budget.max_basis_size}};
  j["config"] = std::move(cfg);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["index"] = c.index;
    if (!c.scenario.empty()) cj["scenario"] = c.scenario;
    cj["name"] = c.name;
    cj["inputs"] = c.inputs;
    cj["status"] = c.status;
    cj["detail"] = c.detail;
    if (c.expected) cj["expected"] = *c.expected;
    cj["match"] = c.match;
    cj["certificate_verified"] = c.certificate_verified;
    cj["time_ms"] = c.time_ms;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  int mismatches = 0, limited = 0;
  for (const auto& c : checks) {
    if (!c.match) ++mismatches;
    if (c.status == "RESOURCE_LIMIT") ++limited;
  }
  j["summary"] = {{"total", checks.size()},
                  {"mismatches", mismatches},
                  {"resource_limited", limited}};
  j["exit"] = exit_code();
  j["hash"] = determinism_hash();
  return j;
}

std::string Report::determinism_hash() const {
  nlohmann::json j;
  j["schema"] = "charp-report/1";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["index"] = c.index;
    cj["scenario"] = c.scenario;
    cj["name"] = c.name;
    cj["inputs"] = c.inputs;
    cj["status"] = c.status;
    cj["detail"] = c.detail;
    cj["expected"] = c.expected ? *c.expected : "";
    cj["match"] = c.match;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["seed"] = config.seed;
  strip_times(j);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(j.dump())));
  return std::string("fnv1a:") + buf;
}

std::string Report::summary_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += "[" + std::to_string(c.index) + "] ";
    if (!c.scenario.empty()) out += c.scenario + ": ";
    out += c.name + "(";
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
      if (i) out += ", ";
      out += c.inputs[i];
    }
    out += ") -> " + c.status;
    if (c.expected) out += std::string(" (expected ") + *c.expected + ")";
    if (!c.match) out += " MISMATCH";
    out += "\n";
  }
  int code = exit_code();
  out += "exit " + std::to_string(code) + "\n";
  return out;
}

Report run_session(const Session& session, const RunConfig& config) {
  ResourceBudget::set_current(config.budget);
  SessionRunner runner(session, config);
  Report rep;
  rep.config = config;
  rep.checks = runner.run_checks();
  return rep;
}

Report run_session_text(const std::string& text, const RunConfig& config) {
  return run_session(parse_session(text), config);
}

// ------------------------------------------------------------- scenarios

namespace {

const std::map<std::string, std::string>& scenario_table() {
  static const std::map<std::string, std::string> table = {
      {"hypersurface-255", R"(# two-dimensional hypersurface of minimal multiplicity
ring R = quotient(poly(F(2), [x, y, z]), [x^2 + y^3 + z^5]);
ideal q = ideal(y, z);
ideal m = maxideal(R);
check frobenius_member(x, q) emax 1 --expect IN;
check frobenius_closed(q) --expect OUT;
check ideal_equal(bracket(m, 2), bracket(q, 2)) --expect PASS;
check socle_bound(q, m) --expect PASS;
)"},
      {"one-dim-xy", R"(# one-dimensional non-domain: parameter ideals from x^n + u*y^m
ring R = quotient(poly(F(2, [u]), [x, y]), [x*y]);
element g112 = (x + u*y)*(x^2 + u^2*y^2);
element g122 = (x + u*y^2)*(x^2 + u^2*y^4);
element g234 = (x^2 + u*y^3)*(x^8 + u^4*y^12);
check element_equal(g112, x^3 + u^3*y^3) --expect PASS;
check element_equal(g122, x^3 + u^3*y^6) --expect PASS;
check element_equal(g234, x^10 + u^5*y^15) --expect PASS;
check tight_member(x^3, ideal(g112)) using c = x + y emax 4 --expect UNKNOWN;
check tight_member(x^3, ideal(g122)) using c = x + y emax 4 --expect UNKNOWN;
check tight_member(x^10, ideal(g234)) using c = x + y emax 4 --expect UNKNOWN;
)"},
      {"veronese-F2uv", R"(# second Veronese of a quadric over F_2(u,v)
ring S = quotient(poly(F(2, [u, v]), [x, y, z]), [x^2 + u*y^2 + v*z^2]);
subring V = veronese(S, 2);
check dimension(V, 2) --expect PASS;
ideal q1 = ideal(x^2, y^2) in V;
ideal q2 = ideal(x*y, z^2) in V;
check parameter_ideal(q1) --expect PASS;
check parameter_ideal(q2) --expect PASS;
ideal qq = product(q1, q2);
check member(y*z^3, qq) --expect OUT;
check member((y*z^3)^2, bracket(qq, 2)) --expect IN;
check frobenius_closed(qq) probes [y*z^3] --expect OUT;
)"},
  };
  return table;
}

}  // namespace

std::vector<std::string> paper_example_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : scenario_table()) names.push_back(k);
  return names;
}

const std::string& paper_example_source(const std::string& name) {
  auto it = scenario_table().find(name);
  if (it == scenario_table().end())
    throw InvalidArgumentError("unknown scenario '" + name + "'");
  return it->second;
}

Report paper_examples(const RunConfig& config) {
  ResourceBudget::set_current(config.budget);
  Report rep;
  rep.config = config;
  int base = 0;
  for (const auto& name : paper_example_names()) {
    Session s = parse_session(paper_example_source(name));
    SessionRunner runner(s, config, name);
    std::vector<CheckResult> results = runner.run_checks();
    for (auto& r : results) {
      r.index += base;
      rep.checks.push_back(std::move(r));
    }
    base = static_cast<int>(rep.checks.size());
  }
  return rep;
}

}  // namespace charp
