#include "absint/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace absint {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && text.front() != '_') return false;
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  static const std::set<std::string_view> keywords = {"while", "do", "done",
                                                      "true", "false"};
  return !keywords.contains(text);
}

namespace {

void require_identifier(std::string_view name) {
  if (!is_identifier(name)) {
    throw std::invalid_argument("invalid identifier: '" + std::string(name) +
                                "'");
  }
}

}  // namespace

ArithPtr num(Int value) {
  return std::make_shared<const ArithExpr>(Num{std::move(value)});
}

ArithPtr var(std::string name) {
  require_identifier(name);
  return std::make_shared<const ArithExpr>(Var{std::move(name)});
}

ArithPtr plus(ArithPtr left, ArithPtr right) {
  return std::make_shared<const ArithExpr>(
      Plus{std::move(left), std::move(right)});
}

bool operator==(const ArithExpr& a, const ArithExpr& b) {
  return std::visit(
      overloaded{
          [](const Num& x, const Num& y) { return x.value == y.value; },
          [](const Var& x, const Var& y) { return x.name == y.name; },
          [](const Plus& x, const Plus& y) {
            return *x.left == *y.left && *x.right == *y.right;
          },
          [](const auto&, const auto&) { return false; }},
      a.node(), b.node());
}

BoolExpr lt(ArithPtr left, ArithPtr right) {
  return BoolExpr{std::move(left), std::move(right)};
}

bool operator==(const BoolExpr& a, const BoolExpr& b) {
  return *a.left == *b.left && *a.right == *b.right;
}

InstrPtr assign(std::string var, ArithPtr rhs) {
  require_identifier(var);
  return std::make_shared<const Instr>(Assign{std::move(var), std::move(rhs)});
}

InstrPtr seq(InstrPtr first, InstrPtr second) {
  return std::make_shared<const Instr>(
      Seq{std::move(first), std::move(second)});
}

InstrPtr while_loop(BoolExpr test, InstrPtr body) {
  return std::make_shared<const Instr>(While{std::move(test), std::move(body)});
}

bool operator==(const Instr& a, const Instr& b) {
  return std::visit(
      overloaded{
          [](const Assign& x, const Assign& y) {
            return x.var == y.var && *x.rhs == *y.rhs;
          },
          [](const Seq& x, const Seq& y) {
            return *x.first == *y.first && *x.second == *y.second;
          },
          [](const While& x, const While& y) {
            return x.test == y.test && *x.body == *y.body;
          },
          [](const auto&, const auto&) { return false; }},
      a.node(), b.node());
}

AssertPtr pred(std::string name, std::vector<ArithPtr> args) {
  require_identifier(name);
  return std::make_shared<const Assertion>(
      Pred{std::move(name), std::move(args)});
}

AssertPtr bool_holds(BoolExpr test) {
  return std::make_shared<const Assertion>(BoolHolds{std::move(test)});
}

AssertPtr conj(AssertPtr left, AssertPtr right) {
  return std::make_shared<const Assertion>(
      Conj{std::move(left), std::move(right)});
}

AssertPtr not_a(AssertPtr arg) {
  return std::make_shared<const Assertion>(Not{std::move(arg)});
}

AssertPtr true_a() {
  static const AssertPtr instance = std::make_shared<const Assertion>(TrueA{});
  return instance;
}

AssertPtr false_a() {
  static const AssertPtr instance = std::make_shared<const Assertion>(FalseA{});
  return instance;
}

bool operator==(const Assertion& a, const Assertion& b) {
  return std::visit(
      overloaded{
          [](const Pred& x, const Pred& y) {
            if (x.name != y.name || x.args.size() != y.args.size())
              return false;
            for (std::size_t k = 0; k < x.args.size(); ++k) {
              if (!(*x.args[k] == *y.args[k])) return false;
            }
            return true;
          },
          [](const BoolHolds& x, const BoolHolds& y) {
            return x.test == y.test;
          },
          [](const Conj& x, const Conj& y) {
            return *x.left == *y.left && *x.right == *y.right;
          },
          [](const Not& x, const Not& y) { return *x.arg == *y.arg; },
          [](const TrueA&, const TrueA&) { return true; },
          [](const FalseA&, const FalseA&) { return true; },
          [](const auto&, const auto&) { return false; }},
      a.node(), b.node());
}

AnnPtr pre_ann(AssertPtr assertion, AnnPtr body) {
  return std::make_shared<const AnnInstr>(
      PreAnn{std::move(assertion), std::move(body)});
}

AnnPtr a_assign(std::string var, ArithPtr rhs) {
  require_identifier(var);
  return std::make_shared<const AnnInstr>(
      AAssign{std::move(var), std::move(rhs)});
}

AnnPtr a_seq(AnnPtr first, AnnPtr second) {
  return std::make_shared<const AnnInstr>(
      ASeq{std::move(first), std::move(second)});
}

AnnPtr a_while(BoolExpr test, AssertPtr invariant, AnnPtr body) {
  return std::make_shared<const AnnInstr>(
      AWhile{std::move(test), std::move(invariant), std::move(body)});
}

bool operator==(const AnnInstr& a, const AnnInstr& b) {
  return std::visit(
      overloaded{
          [](const PreAnn& x, const PreAnn& y) {
            return *x.assertion == *y.assertion && *x.body == *y.body;
          },
          [](const AAssign& x, const AAssign& y) {
            return x.var == y.var && *x.rhs == *y.rhs;
          },
          [](const ASeq& x, const ASeq& y) {
            return *x.first == *y.first && *x.second == *y.second;
          },
          [](const AWhile& x, const AWhile& y) {
            return x.test == y.test && *x.invariant == *y.invariant &&
                   *x.body == *y.body;
          },
          [](const auto&, const auto&) { return false; }},
      a.node(), b.node());
}

bool operator==(const Condition& a, const Condition& b) {
  return *a.hyp == *b.hyp && *a.concl == *b.concl;
}

InstrPtr cleanup(const AnnInstr& i) {
  return std::visit(
      overloaded{
          [](const PreAnn& p) { return cleanup(*p.body); },
          [](const AAssign& a) { return assign(a.var, a.rhs); },
          [](const ASeq& s) {
            return seq(cleanup(*s.first), cleanup(*s.second));
          },
          [](const AWhile& w) { return while_loop(w.test, cleanup(*w.body)); }},
      i.node());
}

void collect_vars(const ArithExpr& e, std::set<std::string>& out) {
  std::visit(overloaded{[](const Num&) {},
                        [&](const Var& v) { out.insert(v.name); },
                        [&](const Plus& p) {
                          collect_vars(*p.left, out);
                          collect_vars(*p.right, out);
                        }},
             e.node());
}

void collect_vars(const BoolExpr& b, std::set<std::string>& out) {
  collect_vars(*b.left, out);
  collect_vars(*b.right, out);
}

void collect_vars(const Assertion& a, std::set<std::string>& out) {
  std::visit(overloaded{[&](const Pred& p) {
                          for (const auto& arg : p.args)
                            collect_vars(*arg, out);
                        },
                        [&](const BoolHolds& h) { collect_vars(h.test, out); },
                        [&](const Conj& c) {
                          collect_vars(*c.left, out);
                          collect_vars(*c.right, out);
                        },
                        [&](const Not& n) { collect_vars(*n.arg, out); },
                        [](const TrueA&) {}, [](const FalseA&) {}},
             a.node());
}

void collect_vars(const Condition& c, std::set<std::string>& out) {
  collect_vars(*c.hyp, out);
  collect_vars(*c.concl, out);
}

std::set<std::string> free_vars(const Condition& c) {
  std::set<std::string> out;
  collect_vars(c, out);
  return out;
}

// ---------------------------------------------------------------------------
// Lexing

namespace {

enum class Tok {
  Ident,
  Integer,
  KwWhile,
  KwDo,
  KwDone,
  KwTrue,
  KwFalse,
  Becomes,  // :=
  Semi,
  PlusSign,
  Less,
  LessEq,
  Wedge,  // /\ (conjunction)
  Tilde,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Integer: return "integer";
    case Tok::KwWhile: return "'while'";
    case Tok::KwDo: return "'do'";
    case Tok::KwDone: return "'done'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::Becomes: return "':='";
    case Tok::Semi: return "';'";
    case Tok::PlusSign: return "'+'";
    case Tok::Less: return "'<'";
    case Tok::LessEq: return "'<='";
    case Tok::Wedge: return "'/\\'";
    case Tok::Tilde: return "'~'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void lex_fail(int line, int col, const std::string& what) {
  std::ostringstream msg;
  msg << line << ":" << col << ": " << what;
  throw ParseError(line, col, msg.str());
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  };
  auto peek = [&](std::size_t k = 0) -> char {
    return pos + k < src.size() ? src[pos + k] : '\0';
  };

  while (pos < src.size()) {
    char c = peek();
    auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      advance(1);
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (pos < src.size() && src[pos] != '\n') advance(1);
      continue;
    }
    int tl = line;
    int tc = col;
    if (std::isalpha(u) || c == '_') {
      std::string word;
      while (pos < src.size()) {
        char d = peek();
        auto ud = static_cast<unsigned char>(d);
        if (!std::isalnum(ud) && d != '_') break;
        word += d;
        advance(1);
      }
      Tok kind = Tok::Ident;
      if (word == "while") kind = Tok::KwWhile;
      else if (word == "do") kind = Tok::KwDo;
      else if (word == "done") kind = Tok::KwDone;
      else if (word == "true") kind = Tok::KwTrue;
      else if (word == "false") kind = Tok::KwFalse;
      out.push_back({kind, std::move(word), tl, tc});
      continue;
    }
    if (std::isdigit(u) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      std::string digits;
      if (c == '-') {
        digits += '-';
        advance(1);
      }
      while (pos < src.size() &&
             std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance(1);
      }
      out.push_back({Tok::Integer, std::move(digits), tl, tc});
      continue;
    }
    switch (c) {
      case ':':
        if (peek(1) == '=') {
          advance(2);
          out.push_back({Tok::Becomes, ":=", tl, tc});
          continue;
        }
        lex_fail(tl, tc, "expected ':=' after ':'");
      case '<':
        if (peek(1) == '=') {
          advance(2);
          out.push_back({Tok::LessEq, "<=", tl, tc});
        } else {
          advance(1);
          out.push_back({Tok::Less, "<", tl, tc});
        }
        continue;
      case '/':
        if (peek(1) == '\\') {
          advance(2);
          out.push_back({Tok::Wedge, "/\\", tl, tc});
          continue;
        }
        lex_fail(tl, tc, "expected '//' or '/\\' after '/'");
      case ';': advance(1); out.push_back({Tok::Semi, ";", tl, tc}); continue;
      case '+':
        advance(1);
        out.push_back({Tok::PlusSign, "+", tl, tc});
        continue;
      case '~': advance(1); out.push_back({Tok::Tilde, "~", tl, tc}); continue;
      case '(':
        advance(1);
        out.push_back({Tok::LParen, "(", tl, tc});
        continue;
      case ')':
        advance(1);
        out.push_back({Tok::RParen, ")", tl, tc});
        continue;
      case '{':
        advance(1);
        out.push_back({Tok::LBrace, "{", tl, tc});
        continue;
      case '}':
        advance(1);
        out.push_back({Tok::RBrace, "}", tl, tc});
        continue;
      case ',': advance(1); out.push_back({Tok::Comma, ",", tl, tc}); continue;
      default:
        lex_fail(tl, tc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Parsing (recursive descent)
//
//   program := instr EOF
//   instr   := stmt (";" instr)?          -- ';' right-associative
//   stmt    := IDENT ":=" aexpr | "while" bexpr "do" instr "done"
//   aexpr   := term ("+" term)*           -- '+' left-associative
//   term    := INT | IDENT | "(" aexpr ")"
//   bexpr   := aexpr "<" aexpr

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  const Token& peek(std::size_t k = 0) const {
    std::size_t at = std::min(pos + k, toks.size() - 1);
    return toks[at];
  }

  bool at(Tok t) const { return peek().kind == t; }

  bool accept(Tok t) {
    if (!at(t)) return false;
    ++pos;
    return true;
  }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    const Token& t = peek();
    std::vector<std::string> names;
    names.reserve(expected.size());
    for (Tok e : expected) names.emplace_back(tok_name(e));
    std::ostringstream msg;
    msg << t.line << ":" << t.col << ": expected ";
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (k > 0) msg << (k + 1 == names.size() ? " or " : ", ");
      msg << names[k];
    }
    msg << ", found " << tok_name(t.kind);
    if (!t.text.empty() && t.kind != Tok::End) msg << " '" << t.text << "'";
    throw ParseError(t.line, t.col, msg.str(), std::move(names));
  }

  Token take(Tok t) {
    if (!at(t)) fail({t});
    return toks[pos++];
  }

  ArithPtr term() {
    if (at(Tok::Integer)) return num(Int(take(Tok::Integer).text));
    if (at(Tok::Ident)) return var(take(Tok::Ident).text);
    if (accept(Tok::LParen)) {
      ArithPtr e = aexpr();
      take(Tok::RParen);
      return e;
    }
    fail({Tok::Integer, Tok::Ident, Tok::LParen});
  }

  ArithPtr aexpr() {
    ArithPtr e = term();
    while (accept(Tok::PlusSign)) e = plus(e, term());
    return e;
  }

  BoolExpr bexpr() {
    ArithPtr l = aexpr();
    take(Tok::Less);
    return lt(l, aexpr());
  }

  InstrPtr stmt() {
    if (at(Tok::Ident)) {
      std::string x = take(Tok::Ident).text;
      take(Tok::Becomes);
      return assign(std::move(x), aexpr());
    }
    if (accept(Tok::KwWhile)) {
      BoolExpr b = bexpr();
      take(Tok::KwDo);
      InstrPtr body = instr();
      take(Tok::KwDone);
      return while_loop(b, body);
    }
    fail({Tok::Ident, Tok::KwWhile});
  }

  InstrPtr instr() {
    InstrPtr i = stmt();
    if (accept(Tok::Semi)) return seq(i, instr());
    return i;
  }

  // Assertions:
  //   assert := unary ("/\" unary)*       -- folded to the right
  //   unary  := "~" "(" assert ")" | atom
  //   atom   := "true" | "false" | IDENT "(" (aexpr ("," aexpr)*)? ")"
  //           | aexpr "<" aexpr | aexpr "<=" aexpr

  AssertPtr atom() {
    if (accept(Tok::KwTrue)) return true_a();
    if (accept(Tok::KwFalse)) return false_a();
    if (at(Tok::Ident) && peek(1).kind == Tok::LParen) {
      std::string name = take(Tok::Ident).text;
      take(Tok::LParen);
      std::vector<ArithPtr> args;
      if (!at(Tok::RParen)) {
        args.push_back(aexpr());
        while (accept(Tok::Comma)) args.push_back(aexpr());
      }
      take(Tok::RParen);
      return pred(std::move(name), std::move(args));
    }
    ArithPtr l = aexpr();
    if (accept(Tok::Less)) return bool_holds(lt(l, aexpr()));
    if (accept(Tok::LessEq)) return pred("leq", {l, aexpr()});
    fail({Tok::Less, Tok::LessEq});
  }

  AssertPtr unary() {
    if (accept(Tok::Tilde)) {
      take(Tok::LParen);
      AssertPtr a = assertion();
      take(Tok::RParen);
      return not_a(a);
    }
    return atom();
  }

  AssertPtr assertion() {
    AssertPtr a = unary();
    if (accept(Tok::Wedge)) return conj(a, assertion());
    return a;
  }

  // Annotated instructions:
  //   ann_instr := ann_stmt (";" ann_instr)?
  //   ann_stmt  := "{" assert "}" ann_stmt
  //             | IDENT ":=" aexpr
  //             | "while" bexpr "do" "{" assert "}" ann_instr "done"
  //             | "(" ann_instr ")"

  AnnPtr ann_stmt() {
    if (accept(Tok::LBrace)) {
      AssertPtr a = assertion();
      take(Tok::RBrace);
      return pre_ann(a, ann_stmt());
    }
    if (at(Tok::Ident)) {
      std::string x = take(Tok::Ident).text;
      take(Tok::Becomes);
      return a_assign(std::move(x), aexpr());
    }
    if (accept(Tok::KwWhile)) {
      BoolExpr b = bexpr();
      take(Tok::KwDo);
      take(Tok::LBrace);
      AssertPtr inv = assertion();
      take(Tok::RBrace);
      AnnPtr body = ann_instr();
      take(Tok::KwDone);
      return a_while(b, inv, body);
    }
    if (accept(Tok::LParen)) {
      AnnPtr i = ann_instr();
      take(Tok::RParen);
      return i;
    }
    fail({Tok::LBrace, Tok::Ident, Tok::KwWhile, Tok::LParen});
  }

  AnnPtr ann_instr() {
    AnnPtr i = ann_stmt();
    if (accept(Tok::Semi)) return a_seq(i, ann_instr());
    return i;
  }
};

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message,
                       std::vector<std::string> expected)
    : std::runtime_error(message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

InstrPtr parse_instr(std::string_view text) {
  Parser p{lex(text)};
  InstrPtr i = p.instr();
  p.take(Tok::End);
  return i;
}

ArithPtr parse_arith(std::string_view text) {
  Parser p{lex(text)};
  ArithPtr e = p.aexpr();
  p.take(Tok::End);
  return e;
}

AssertPtr parse_assertion(std::string_view text) {
  Parser p{lex(text)};
  AssertPtr a = p.assertion();
  p.take(Tok::End);
  return a;
}

AnnPtr parse_ann_instr(std::string_view text) {
  Parser p{lex(text)};
  AnnPtr i = p.ann_instr();
  p.take(Tok::End);
  return i;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_arith_into(const ArithExpr& e, std::string& out,
                       bool paren_if_plus) {
  std::visit(overloaded{[&](const Num& n) { out += n.value.str(); },
                        [&](const Var& v) { out += v.name; },
                        [&](const Plus& p) {
                          if (paren_if_plus) out += '(';
                          render_arith_into(*p.left, out, false);
                          out += " + ";
                          render_arith_into(*p.right, out, true);
                          if (paren_if_plus) out += ')';
                        }},
             e.node());
}

void render_bool_into(const BoolExpr& b, std::string& out) {
  render_arith_into(*b.left, out, false);
  out += " < ";
  render_arith_into(*b.right, out, false);
}

void render_instr_into(const Instr& i, std::string& out) {
  std::visit(overloaded{[&](const Assign& a) {
                          out += a.var;
                          out += " := ";
                          render_arith_into(*a.rhs, out, false);
                        },
                        [&](const Seq& s) {
                          render_instr_into(*s.first, out);
                          out += "; ";
                          render_instr_into(*s.second, out);
                        },
                        [&](const While& w) {
                          out += "while ";
                          render_bool_into(w.test, out);
                          out += " do ";
                          render_instr_into(*w.body, out);
                          out += " done";
                        }},
             i.node());
}

void render_assert_into(const Assertion& a, std::string& out) {
  std::visit(overloaded{[&](const Pred& p) {
                          if (p.name == "leq" && p.args.size() == 2) {
                            render_arith_into(*p.args[0], out, false);
                            out += " <= ";
                            render_arith_into(*p.args[1], out, false);
                            return;
                          }
                          out += p.name;
                          out += '(';
                          for (std::size_t k = 0; k < p.args.size(); ++k) {
                            if (k > 0) out += ", ";
                            render_arith_into(*p.args[k], out, false);
                          }
                          out += ')';
                        },
                        [&](const BoolHolds& h) {
                          render_bool_into(h.test, out);
                        },
                        [&](const Conj& c) {
                          render_assert_into(*c.left, out);
                          out += " /\\ ";
                          render_assert_into(*c.right, out);
                        },
                        [&](const Not& n) {
                          out += "~(";
                          render_assert_into(*n.arg, out);
                          out += ')';
                        },
                        [&](const TrueA&) { out += "true"; },
                        [&](const FalseA&) { out += "false"; }},
             a.node());
}

void render_ann_into(const AnnInstr& i, std::string& out) {
  std::visit(overloaded{[&](const PreAnn& p) {
                          out += "{ ";
                          render_assert_into(*p.assertion, out);
                          out += " } ";
                          bool group =
                              std::holds_alternative<ASeq>(p.body->node());
                          if (group) out += '(';
                          render_ann_into(*p.body, out);
                          if (group) out += ')';
                        },
                        [&](const AAssign& a) {
                          out += a.var;
                          out += " := ";
                          render_arith_into(*a.rhs, out, false);
                        },
                        [&](const ASeq& s) {
                          render_ann_into(*s.first, out);
                          out += "; ";
                          render_ann_into(*s.second, out);
                        },
                        [&](const AWhile& w) {
                          out += "while ";
                          render_bool_into(w.test, out);
                          out += " do { ";
                          render_assert_into(*w.invariant, out);
                          out += " } ";
                          render_ann_into(*w.body, out);
                          out += " done";
                        }},
             i.node());
}

void pretty_into(const AnnInstr& i, int indent, bool trailing_semi,
                 std::vector<std::string>& lines) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  std::visit(
      overloaded{
          [&](const PreAnn& p) {
            const AnnInstr* leaf = p.body.get();
            std::string prefix = "{ " + render_assert(*p.assertion) + " } ";
            while (const auto* nested = std::get_if<PreAnn>(&leaf->node())) {
              prefix += "{ " + render_assert(*nested->assertion) + " } ";
              leaf = nested->body.get();
            }
            if (std::holds_alternative<AAssign>(leaf->node())) {
              lines.push_back(pad + prefix + render_ann_instr(*leaf) +
                              (trailing_semi ? ";" : ""));
            } else {
              lines.push_back(pad + prefix);
              pretty_into(*leaf, indent, trailing_semi, lines);
            }
          },
          [&](const AAssign&) {
            lines.push_back(pad + render_ann_instr(i) +
                            (trailing_semi ? ";" : ""));
          },
          [&](const ASeq& s) {
            pretty_into(*s.first, indent, true, lines);
            pretty_into(*s.second, indent, trailing_semi, lines);
          },
          [&](const AWhile& w) {
            lines.push_back(pad + "while " + render_bool(w.test) + " do { " +
                            render_assert(*w.invariant) + " }");
            pretty_into(*w.body, indent + 2, false, lines);
            lines.push_back(pad + "done" + (trailing_semi ? ";" : ""));
          }},
      i.node());
}

}  // namespace

std::string render_arith(const ArithExpr& e) {
  std::string out;
  render_arith_into(e, out, false);
  return out;
}

std::string render_bool(const BoolExpr& b) {
  std::string out;
  render_bool_into(b, out);
  return out;
}

std::string render_instr(const Instr& i) {
  std::string out;
  render_instr_into(i, out);
  return out;
}

std::string render_assert(const Assertion& a) {
  std::string out;
  render_assert_into(a, out);
  return out;
}

std::string render_ann_instr(const AnnInstr& i) {
  std::string out;
  render_ann_into(i, out);
  return out;
}

std::string render_ann_instr_pretty(const AnnInstr& i, int indent) {
  std::vector<std::string> lines;
  pretty_into(i, indent, false, lines);
  std::string out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (k > 0) out += '\n';
    out += lines[k];
  }
  return out;
}

std::string render_condition(const Condition& c) {
  return render_assert(*c.hyp) + " ==> " + render_assert(*c.concl);
}

}  // namespace absint
