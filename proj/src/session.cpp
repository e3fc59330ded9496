#include "charp/session.hpp"

#include <cctype>

#include "charp/errors.hpp"
#include "charp/field.hpp"

namespace charp {

namespace {

enum class Tok {
  Ident, Int, LParen, RParen, LBracket, RBracket, Comma, Semi, Equals,
  Plus, Minus, Star, Slash, Caret, DoubleDash, End
};

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  SourcePos pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_ws();
    current_.pos = pos_;
    if (i_ >= text_.size()) {
      current_ = Token{Tok::End, "", 0, pos_};
      return;
    }
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
              text_[i_] == '_'))
        bump();
      current_ = Token{Tok::Ident, text_.substr(start, i_ - start), 0,
                       current_.pos};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      std::size_t start = i_;
      while (i_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        v = v * 10 + (text_[i_] - '0');
        if (v > (1ll << 40))
          throw SyntaxError(pos_.line, pos_.col, "integer literal too large");
        bump();
      }
      current_ =
          Token{Tok::Int, text_.substr(start, i_ - start), v, current_.pos};
      return;
    }
    if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
      bump();
      bump();
      current_ = Token{Tok::DoubleDash, "--", 0, current_.pos};
      return;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Equals; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      default:
        throw SyntaxError(pos_.line, pos_.col,
                          std::string("unexpected character '") + c + "'");
    }
    bump();
    current_ = Token{kind, std::string(1, c), 0, current_.pos};
  }

  void skip_ws() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++i_;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  SourcePos pos_;
  Token current_{Tok::End, "", 0, {}};
};

bool is_ideal_keyword(const std::string& s) {
  return s == "ideal" || s == "product" || s == "sum" || s == "intersection" ||
         s == "colon" || s == "bracket" || s == "maxideal" ||
         s == "socle_bound";
}

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Session parse() {
    Session s;
    while (lex_.peek().kind != Tok::End) s.statements.push_back(statement());
    return s;
  }

private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw SyntaxError(t.pos.line, t.pos.col, msg);
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != kind) fail(t, "expected " + what);
    return t;
  }

  Token expect_keyword(const std::string& kw) {
    Token t = lex_.take();
    if (t.kind != Tok::Ident || t.text != kw) fail(t, "expected '" + kw + "'");
    return t;
  }

  std::string ident(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Tok::Ident) fail(t, "expected " + what);
    return t.text;
  }

  Stmt statement() {
    Token t = lex_.peek();
    if (t.kind != Tok::Ident) fail(t, "expected a statement");
    if (t.text == "ring") return ring_decl();
    if (t.text == "subring") return subring_decl();
    if (t.text == "ideal") return ideal_decl();
    if (t.text == "element") return element_decl();
    if (t.text == "check") return check_stmt();
    fail(t, "unknown statement '" + t.text + "'");
  }

  // ring R = quotient(poly(F(p[,params]), [vars]), [rels]); | ring R = poly(...);
  Stmt ring_decl() {
    Token kw = lex_.take();
    RingDecl d;
    d.pos = kw.pos;
    d.name = ident("ring name");
    expect(Tok::Equals, "'='");
    Token head = lex_.take();
    if (head.kind != Tok::Ident) fail(head, "expected quotient(...) or poly(...)");
    if (head.text == "quotient") {
      d.is_quotient = true;
      expect(Tok::LParen, "'('");
      parse_poly_ring(d);
      expect(Tok::Comma, "','");
      expect(Tok::LBracket, "'['");
      if (lex_.peek().kind != Tok::RBracket) {
        d.relations.push_back(expr());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          d.relations.push_back(expr());
        }
      }
      expect(Tok::RBracket, "']'");
      expect(Tok::RParen, "')'");
    } else if (head.text == "poly") {
      parse_poly_tail(d);
    } else {
      fail(head, "expected quotient(...) or poly(...)");
    }
    expect(Tok::Semi, "';'");
    return d;
  }

  void parse_poly_ring(RingDecl& d) {
    expect_keyword("poly");
    parse_poly_tail(d);
  }

  void parse_poly_tail(RingDecl& d) {
    expect(Tok::LParen, "'('");
    Token f = expect(Tok::Ident, "field F(p)");
    if (f.text != "F") fail(f, "expected field F(p)");
    expect(Tok::LParen, "'('");
    Token p = expect(Tok::Int, "prime characteristic");
    if (!is_prime(static_cast<std::uint64_t>(p.value)))
      throw SyntaxError(p.pos.line, p.pos.col,
                        "characteristic must be prime, got " + p.text);
    d.p = static_cast<std::uint32_t>(p.value);
    if (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      expect(Tok::LBracket, "'['");
      d.params.push_back(ident("parameter name"));
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        d.params.push_back(ident("parameter name"));
      }
      expect(Tok::RBracket, "']'");
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Comma, "','");
    expect(Tok::LBracket, "'['");
    d.vars.push_back(ident("variable name"));
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      d.vars.push_back(ident("variable name"));
    }
    expect(Tok::RBracket, "']'");
    expect(Tok::RParen, "')'");
  }

  Stmt subring_decl() {
    Token kw = lex_.take();
    SubringDecl d;
    d.pos = kw.pos;
    d.name = ident("subring name");
    expect(Tok::Equals, "'='");
    expect_keyword("veronese");
    expect(Tok::LParen, "'('");
    d.source = ident("source ring name");
    expect(Tok::Comma, "','");
    d.degree = expect(Tok::Int, "veronese degree").value;
    expect(Tok::RParen, "')'");
    expect(Tok::Semi, "';'");
    return d;
  }

  Stmt ideal_decl() {
    Token kw = lex_.take();
    IdealDecl d;
    d.pos = kw.pos;
    d.name = ident("ideal name");
    expect(Tok::Equals, "'='");
    d.expr = ideal_expr();
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "in") {
      lex_.take();
      d.in_ring = ident("ring name");
    }
    expect(Tok::Semi, "';'");
    return d;
  }

  Stmt element_decl() {
    Token kw = lex_.take();
    ElementDecl d;
    d.pos = kw.pos;
    d.name = ident("element name");
    expect(Tok::Equals, "'='");
    d.expr = expr();
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "in") {
      lex_.take();
      d.in_ring = ident("ring name");
    }
    expect(Tok::Semi, "';'");
    return d;
  }

  Stmt check_stmt() {
    Token kw = lex_.take();
    CheckStmt d;
    d.pos = kw.pos;
    d.name = ident("check name");
    expect(Tok::LParen, "'('");
    if (lex_.peek().kind != Tok::RParen) {
      d.args.push_back(check_arg());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        d.args.push_back(check_arg());
      }
    }
    expect(Tok::RParen, "')'");
    // options in any order
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Tok::Ident && t.text == "using") {
        lex_.take();
        UsingBinding b;
        b.key = ident("binding name");
        expect(Tok::Equals, "'='");
        if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "auto") {
          lex_.take();
          b.is_auto = true;
        } else {
          b.value = expr();
        }
        d.usings.push_back(std::move(b));
      } else if (t.kind == Tok::Ident && t.text == "emax") {
        lex_.take();
        d.emax = expect(Tok::Int, "emax value").value;
      } else if (t.kind == Tok::Ident && t.text == "window") {
        lex_.take();
        d.window = expect(Tok::Int, "window value").value;
      } else if (t.kind == Tok::Ident && t.text == "probes") {
        lex_.take();
        expect(Tok::LBracket, "'['");
        d.probes.push_back(expr());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          d.probes.push_back(expr());
        }
        expect(Tok::RBracket, "']'");
      } else if (t.kind == Tok::DoubleDash) {
        lex_.take();
        expect_keyword("expect");
        d.expect = ident("expected status");
      } else {
        break;
      }
    }
    expect(Tok::Semi, "';'");
    return d;
  }

  CheckArg check_arg() {
    Token t = lex_.peek();
    CheckArg a;
    if (t.kind == Tok::Ident && is_ideal_keyword(t.text)) {
      a.ideal = ideal_expr();
    } else {
      a.expr = expr();
    }
    return a;
  }

  IdealExprPtr ideal_expr() {
    Token t = lex_.take();
    if (t.kind != Tok::Ident) fail(t, "expected an ideal expression");
    auto node = std::make_shared<IdealExpr>();
    node->pos = t.pos;
    const std::string& kw = t.text;
    if (kw == "ideal") {
      node->kind = IdealExpr::Kind::Gens;
      expect(Tok::LParen, "'('");
      node->gens.push_back(expr());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        node->gens.push_back(expr());
      }
      expect(Tok::RParen, "')'");
    } else if (kw == "product" || kw == "sum" || kw == "intersection" ||
               kw == "colon") {
      node->kind = kw == "product" ? IdealExpr::Kind::Product
                   : kw == "sum" ? IdealExpr::Kind::Sum
                   : kw == "intersection" ? IdealExpr::Kind::Intersection
                                          : IdealExpr::Kind::Colon;
      expect(Tok::LParen, "'('");
      node->a = ideal_expr();
      expect(Tok::Comma, "','");
      node->b = ideal_expr();
      expect(Tok::RParen, "')'");
    } else if (kw == "bracket") {
      node->kind = IdealExpr::Kind::Bracket;
      expect(Tok::LParen, "'('");
      node->a = ideal_expr();
      expect(Tok::Comma, "','");
      node->bracket_q = expect(Tok::Int, "bracket power q").value;
      expect(Tok::RParen, "')'");
    } else if (kw == "maxideal") {
      node->kind = IdealExpr::Kind::MaxIdeal;
      expect(Tok::LParen, "'('");
      if (lex_.peek().kind != Tok::RParen) node->name = ident("ring name");
      expect(Tok::RParen, "')'");
    } else if (kw == "socle_bound") {
      node->kind = IdealExpr::Kind::SocleBound;
      expect(Tok::LParen, "'('");
      node->a = ideal_expr();
      expect(Tok::RParen, "')'");
    } else {
      node->kind = IdealExpr::Kind::Named;
      node->name = kw;
    }
    return node;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
        lex_.take();
        auto node = std::make_shared<Expr>();
        node->kind = t.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
        node->pos = t.pos;
        node->lhs = lhs;
        node->rhs = term();
        lhs = node;
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Tok::Star || t.kind == Tok::Slash) {
        lex_.take();
        auto node = std::make_shared<Expr>();
        node->kind = t.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
        node->pos = t.pos;
        node->lhs = lhs;
        node->rhs = unary();
        lhs = node;
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    Token t = lex_.peek();
    if (t.kind == Tok::Minus) {
      lex_.take();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Neg;
      node->pos = t.pos;
      node->lhs = unary();
      return node;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      Token c = lex_.take();
      Token e = expect(Tok::Int, "exponent");
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Pow;
      node->pos = c.pos;
      node->lhs = base;
      node->value = e.value;
      return node;
    }
    return base;
  }

  ExprPtr atom() {
    Token t = lex_.take();
    auto node = std::make_shared<Expr>();
    node->pos = t.pos;
    if (t.kind == Tok::Int) {
      node->kind = Expr::Kind::Int;
      node->value = t.value;
      return node;
    }
    if (t.kind == Tok::Ident) {
      node->kind = Expr::Kind::Ident;
      node->name = t.text;
      return node;
    }
    if (t.kind == Tok::LParen) {
      ExprPtr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail(t, "expected a value");
  }

  Lexer lex_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void print_expr_impl(const ExprPtr& e, std::string& out, int parent_prec) {
  int prec = precedence(e->kind);
  bool parens = prec < parent_prec;
  if (parens) out += "(";
  switch (e->kind) {
    case Expr::Kind::Add:
      print_expr_impl(e->lhs, out, prec);
      out += " + ";
      print_expr_impl(e->rhs, out, prec + 1);
      break;
    case Expr::Kind::Sub:
      print_expr_impl(e->lhs, out, prec);
      out += " - ";
      print_expr_impl(e->rhs, out, prec + 1);
      break;
    case Expr::Kind::Mul:
      print_expr_impl(e->lhs, out, prec);
      out += "*";
      print_expr_impl(e->rhs, out, prec + 1);
      break;
    case Expr::Kind::Div:
      print_expr_impl(e->lhs, out, prec);
      out += "/";
      print_expr_impl(e->rhs, out, prec + 1);
      break;
    case Expr::Kind::Neg:
      out += "-";
      print_expr_impl(e->lhs, out, prec);
      break;
    case Expr::Kind::Pow:
      print_expr_impl(e->lhs, out, prec + 1);
      out += "^" + std::to_string(e->value);
      break;
    case Expr::Kind::Ident:
      out += e->name;
      break;
    case Expr::Kind::Int:
      out += std::to_string(e->value);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

Session parse_session(const std::string& text) {
  return Parser(text).parse();
}

std::string print_expr(const ExprPtr& e) {
  std::string out;
  print_expr_impl(e, out, 0);
  return out;
}

std::string print_ideal_expr(const IdealExprPtr& e) {
  switch (e->kind) {
    case IdealExpr::Kind::Gens: {
      std::string s = "ideal(";
      for (std::size_t i = 0; i < e->gens.size(); ++i) {
        if (i) s += ", ";
        s += print_expr(e->gens[i]);
      }
      return s + ")";
    }
    case IdealExpr::Kind::Named:
      return e->name;
    case IdealExpr::Kind::Product:
      return "product(" + print_ideal_expr(e->a) + ", " + print_ideal_expr(e->b) + ")";
    case IdealExpr::Kind::Sum:
      return "sum(" + print_ideal_expr(e->a) + ", " + print_ideal_expr(e->b) + ")";
    case IdealExpr::Kind::Intersection:
      return "intersection(" + print_ideal_expr(e->a) + ", " +
             print_ideal_expr(e->b) + ")";
    case IdealExpr::Kind::Colon:
      return "colon(" + print_ideal_expr(e->a) + ", " + print_ideal_expr(e->b) + ")";
    case IdealExpr::Kind::Bracket:
      return "bracket(" + print_ideal_expr(e->a) + ", " +
             std::to_string(e->bracket_q) + ")";
    case IdealExpr::Kind::MaxIdeal:
      return "maxideal(" + e->name + ")";
    case IdealExpr::Kind::SocleBound:
      return "socle_bound(" + print_ideal_expr(e->a) + ")";
  }
  return "";
}

namespace {

std::string print_stmt(const Stmt& stmt) {
  struct Printer {
    std::string operator()(const RingDecl& d) const {
      std::string s = "ring " + d.name + " = ";
      std::string poly = "poly(F(" + std::to_string(d.p);
      if (!d.params.empty()) {
        poly += ", [";
        for (std::size_t i = 0; i < d.params.size(); ++i) {
          if (i) poly += ", ";
          poly += d.params[i];
        }
        poly += "]";
      }
      poly += "), [";
      for (std::size_t i = 0; i < d.vars.size(); ++i) {
        if (i) poly += ", ";
        poly += d.vars[i];
      }
      poly += "])";
      if (d.is_quotient) {
        s += "quotient(" + poly + ", [";
        for (std::size_t i = 0; i < d.relations.size(); ++i) {
          if (i) s += ", ";
          s += print_expr(d.relations[i]);
        }
        s += "])";
      } else {
        s += poly;
      }
      return s + ";";
    }
    std::string operator()(const SubringDecl& d) const {
      return "subring " + d.name + " = veronese(" + d.source + ", " +
             std::to_string(d.degree) + ");";
    }
    std::string operator()(const IdealDecl& d) const {
      std::string s = "ideal " + d.name + " = " + print_ideal_expr(d.expr);
      if (!d.in_ring.empty()) s += " in " + d.in_ring;
      return s + ";";
    }
    std::string operator()(const ElementDecl& d) const {
      std::string s = "element " + d.name + " = " + print_expr(d.expr);
      if (!d.in_ring.empty()) s += " in " + d.in_ring;
      return s + ";";
    }
    std::string operator()(const CheckStmt& d) const {
      std::string s = "check " + d.name + "(";
      for (std::size_t i = 0; i < d.args.size(); ++i) {
        if (i) s += ", ";
        s += d.args[i].ideal ? print_ideal_expr(d.args[i].ideal)
                             : print_expr(d.args[i].expr);
      }
      s += ")";
      for (const auto& u : d.usings)
        s += " using " + u.key + " = " + (u.is_auto ? "auto" : print_expr(u.value));
      if (d.emax) s += " emax " + std::to_string(*d.emax);
      if (d.window) s += " window " + std::to_string(*d.window);
      if (!d.probes.empty()) {
        s += " probes [";
        for (std::size_t i = 0; i < d.probes.size(); ++i) {
          if (i) s += ", ";
          s += print_expr(d.probes[i]);
        }
        s += "]";
      }
      if (d.expect) s += " --expect " + *d.expect;
      return s + ";";
    }
  };
  return std::visit(Printer{}, stmt);
}

}  // namespace

std::string print_session(const Session& s) {
  std::string out;
  for (const auto& stmt : s.statements) {
    out += print_stmt(stmt);
    out += "\n";
  }
  return out;
}

}  // namespace charp
