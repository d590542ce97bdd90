#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Abstract syntax of the analyzed while-language: arithmetic and boolean
// expressions, instructions, logical assertions, annotated instructions,
// and the implications emitted by the verification-condition generator.
// All nodes are immutable after construction and share subtrees freely.

namespace absint {

using Int = boost::multiprecision::cpp_int;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool is_identifier(std::string_view text);

// --- arithmetic expressions: e ::= n | x | e1 + e2

class ArithExpr;
using ArithPtr = std::shared_ptr<const ArithExpr>;

struct Num {
  Int value;
};

struct Var {
  std::string name;
};

struct Plus {
  ArithPtr left;
  ArithPtr right;
};

class ArithExpr {
public:
  using Node = std::variant<Num, Var, Plus>;

  explicit ArithExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

private:
  Node node_;
};

ArithPtr num(Int value);
ArithPtr var(std::string name);
ArithPtr plus(ArithPtr left, ArithPtr right);

bool operator==(const ArithExpr& a, const ArithExpr& b);

// --- boolean expressions: b ::= e1 < e2

struct BoolExpr {
  ArithPtr left;
  ArithPtr right;
};

BoolExpr lt(ArithPtr left, ArithPtr right);
bool operator==(const BoolExpr& a, const BoolExpr& b);

// --- instructions: i ::= x := e | i1; i2 | while b do i done

class Instr;
using InstrPtr = std::shared_ptr<const Instr>;

struct Assign {
  std::string var;
  ArithPtr rhs;
};

struct Seq {
  InstrPtr first;
  InstrPtr second;
};

struct While {
  BoolExpr test;
  InstrPtr body;
};

class Instr {
public:
  using Node = std::variant<Assign, Seq, While>;

  explicit Instr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

private:
  Node node_;
};

InstrPtr assign(std::string var, ArithPtr rhs);
InstrPtr seq(InstrPtr first, InstrPtr second);
InstrPtr while_loop(BoolExpr test, InstrPtr body);

bool operator==(const Instr& a, const Instr& b);

// --- assertions

class Assertion;
using AssertPtr = std::shared_ptr<const Assertion>;

struct Pred {
  std::string name;
  std::vector<ArithPtr> args;
};

struct BoolHolds {
  BoolExpr test;
};

struct Conj {
  AssertPtr left;
  AssertPtr right;
};

struct Not {
  AssertPtr arg;
};

struct TrueA {};
struct FalseA {};

class Assertion {
public:
  using Node = std::variant<Pred, BoolHolds, Conj, Not, TrueA, FalseA>;

  explicit Assertion(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

private:
  Node node_;
};

AssertPtr pred(std::string name, std::vector<ArithPtr> args);
AssertPtr bool_holds(BoolExpr test);
AssertPtr conj(AssertPtr left, AssertPtr right);
AssertPtr not_a(AssertPtr arg);
AssertPtr true_a();
AssertPtr false_a();

bool operator==(const Assertion& a, const Assertion& b);

// --- annotated instructions

class AnnInstr;
using AnnPtr = std::shared_ptr<const AnnInstr>;

struct PreAnn {
  AssertPtr assertion;
  AnnPtr body;
};

struct AAssign {
  std::string var;
  ArithPtr rhs;
};

struct ASeq {
  AnnPtr first;
  AnnPtr second;
};

// While loops carry a mandatory invariant.
struct AWhile {
  BoolExpr test;
  AssertPtr invariant;
  AnnPtr body;
};

class AnnInstr {
public:
  using Node = std::variant<PreAnn, AAssign, ASeq, AWhile>;

  explicit AnnInstr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

private:
  Node node_;
};

AnnPtr pre_ann(AssertPtr assertion, AnnPtr body);
AnnPtr a_assign(std::string var, ArithPtr rhs);
AnnPtr a_seq(AnnPtr first, AnnPtr second);
AnnPtr a_while(BoolExpr test, AssertPtr invariant, AnnPtr body);

bool operator==(const AnnInstr& a, const AnnInstr& b);

// --- conditions: hyp ==> concl

struct Condition {
  AssertPtr hyp;
  AssertPtr concl;
};

bool operator==(const Condition& a, const Condition& b);

// Erases all pre-annotations and loop invariants.
InstrPtr cleanup(const AnnInstr& i);

// --- free variables

void collect_vars(const ArithExpr& e, std::set<std::string>& out);
void collect_vars(const BoolExpr& b, std::set<std::string>& out);
void collect_vars(const Assertion& a, std::set<std::string>& out);
void collect_vars(const Condition& c, std::set<std::string>& out);
std::set<std::string> free_vars(const Condition& c);

// --- parsing

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message,
             std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

InstrPtr parse_instr(std::string_view text);
ArithPtr parse_arith(std::string_view text);
AssertPtr parse_assertion(std::string_view text);
AnnPtr parse_ann_instr(std::string_view text);

// --- rendering

std::string render_arith(const ArithExpr& e);
std::string render_bool(const BoolExpr& b);
std::string render_instr(const Instr& i);
std::string render_assert(const Assertion& a);
std::string render_ann_instr(const AnnInstr& i);
std::string render_ann_instr_pretty(const AnnInstr& i, int indent = 0);
std::string render_condition(const Condition& c);

}  // namespace absint
