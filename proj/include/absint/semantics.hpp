#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "absint/syntax.hpp"

// Concrete evaluation of expressions and assertions, a fuel-bounded
// reference interpreter used for differential testing, and a
// bounded-exhaustive validity oracle for conditions.

namespace absint {

// Total map from variable names to integers; unbound names read as 0.
// Updates are functional and yield a fresh valuation.
class Valuation {
public:
  Valuation() = default;
  explicit Valuation(std::map<std::string, Int, std::less<>> values)
      : values_(std::move(values)) {}

  const Int& get(std::string_view name) const;
  Valuation with(std::string name, Int value) const;
  const std::map<std::string, Int, std::less<>>& entries() const {
    return values_;
  }

  bool operator==(const Valuation& other) const = default;

private:
  std::map<std::string, Int, std::less<>> values_;
};

std::string render_valuation(const Valuation& g);

// Table of named predicates over integer argument lists; names absent from
// the table evaluate to false.
class PredicateMeaning {
public:
  using Fn = std::function<bool(const std::vector<Int>&)>;

  PredicateMeaning& define(std::string name, Fn fn);
  bool evaluate(std::string_view name, const std::vector<Int>& args) const;

private:
  std::map<std::string, Fn, std::less<>> table_;
};

Int eval_arith(const Valuation& g, const ArithExpr& e);
bool eval_bool(const Valuation& g, const BoolExpr& b);
bool eval_assert(const PredicateMeaning& m, const Valuation& g,
                 const Assertion& a);

// --- concrete execution

// Number of nodes in the instruction tree; program points are numbered by a
// pre-order walk, so a node at point p owns points [p, p + instr_size).
int instr_size(const Instr& i);
int ann_size(const AnnInstr& i);  // size of the erased instruction

struct TraceEntry {
  int point;
  Valuation valuation;
};

struct ExecResult {
  // Empty when the fuel budget ran out before the program terminated.
  std::optional<Valuation> result;
  // Valuation at entry of every assignment and at every loop-body
  // entry and exit, tagged with the pre-order point of the owning node.
  std::vector<TraceEntry> trace;
};

// Big-step execution; each loop iteration consumes one unit of fuel,
// assignments are free.
ExecResult exec_concrete(const Valuation& g, const Instr& i, long fuel);

// Assertion expected to hold at each traceable program point of an
// annotated instruction: pre-annotations at assignments, invariants at
// loop-body entries and exits.
std::map<int, AssertPtr> annotation_points(const AnnInstr& i);

// --- bounded-exhaustive validity oracle

class OracleResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleConfig {
  long bound = 16;  // every quantified variable ranges over [-bound, bound]
  std::vector<std::string> variables;
  std::uint64_t cell_cap = 10'000'000;

  static OracleConfig for_conditions(const std::vector<Condition>& cs,
                                     long bound);
};

// Enumerates the full grid of valuations and returns the first (smallest in
// lexicographic variable order) that satisfies the hypothesis but not the
// conclusion; empty result means no counterexample at this bound.
std::optional<Valuation> check_condition_bounded(const PredicateMeaning& m,
                                                 const Condition& c,
                                                 const OracleConfig& cfg);

struct ConditionFailure {
  std::size_t index;
  Valuation counterexample;
};

std::optional<ConditionFailure> check_conditions_bounded(
    const PredicateMeaning& m, const std::vector<Condition>& cs,
    const OracleConfig& cfg);

}  // namespace absint
