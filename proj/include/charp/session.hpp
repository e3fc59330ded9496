#ifndef CHARP_SESSION_HPP
#define CHARP_SESSION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace charp {

// Session DSL abstract syntax. Parsing is total: a session either parses and
// type-checks completely or raises Syntax/Name/TypeError with a position;
// nothing executes on error.

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Add, Sub, Mul, Div, Pow, Neg, Ident, Int };
  Kind kind;
  ExprPtr lhs, rhs;        // binary nodes and Neg (lhs)
  std::string name;        // Ident
  long long value = 0;     // Int literal or Pow exponent
  SourcePos pos;
};

struct IdealExpr;
using IdealExprPtr = std::shared_ptr<const IdealExpr>;

struct IdealExpr {
  enum class Kind {
    Gens,          // ideal(f1, ..., fk)
    Named,         // identifier
    Product,       // product(A, B)
    Sum,           // sum(A, B)
    Intersection,  // intersection(A, B)
    Colon,         // colon(A, B)
    Bracket,       // bracket(A, q), q a power of p
    MaxIdeal,      // maxideal(R) or maxideal()
    SocleBound     // socle_bound(A)
  };
  Kind kind;
  std::vector<ExprPtr> gens;
  std::string name;  // Named ideal or MaxIdeal ring
  IdealExprPtr a, b;
  long long bracket_q = 0;
  SourcePos pos;
};

struct RingDecl {
  std::string name;
  std::uint32_t p = 2;
  std::vector<std::string> params;
  std::vector<std::string> vars;
  std::vector<ExprPtr> relations;  // empty for a plain polynomial ring
  bool is_quotient = false;
  SourcePos pos;
};

struct SubringDecl {
  std::string name;
  std::string source;
  long long degree = 2;
  SourcePos pos;
};

struct IdealDecl {
  std::string name;
  IdealExprPtr expr;
  std::string in_ring;  // optional
  SourcePos pos;
};

struct ElementDecl {
  std::string name;
  ExprPtr expr;
  std::string in_ring;  // optional
  SourcePos pos;
};

struct CheckArg {
  // exactly one of the two is set
  IdealExprPtr ideal;
  ExprPtr expr;
};

struct UsingBinding {
  std::string key;  // e.g. "c"
  ExprPtr value;    // null for auto
  bool is_auto = false;
};

struct CheckStmt {
  std::string name;
  std::vector<CheckArg> args;
  std::vector<UsingBinding> usings;
  std::optional<long long> emax;
  std::optional<long long> window;
  std::vector<ExprPtr> probes;
  std::optional<std::string> expect;
  SourcePos pos;
};

using Stmt = std::variant<RingDecl, SubringDecl, IdealDecl, ElementDecl, CheckStmt>;

struct Session {
  std::vector<Stmt> statements;
};

// Throws SyntaxError with position on malformed input; the prime check on
// F(n) happens here so `F(4)` is a parse-time failure.
Session parse_session(const std::string& text);

// Canonical re-emission; parse(print(s)) prints identically.
std::string print_session(const Session& s);
std::string print_expr(const ExprPtr& e);
std::string print_ideal_expr(const IdealExprPtr& e);

}  // namespace charp

#endif
