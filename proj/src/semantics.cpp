#include "absint/semantics.hpp"

#include <algorithm>

namespace absint {

const Int& Valuation::get(std::string_view name) const {
  static const Int zero = 0;
  auto it = values_.find(name);
  return it == values_.end() ? zero : it->second;
}

Valuation Valuation::with(std::string name, Int value) const {
  auto copy = values_;
  copy[std::move(name)] = std::move(value);
  return Valuation(std::move(copy));
}

std::string render_valuation(const Valuation& g) {
  std::string out;
  for (const auto& [name, value] : g.entries()) {
    if (!out.empty()) out += ", ";
    out += name;
    out += '=';
    out += value.str();
  }
  return out;
}

PredicateMeaning& PredicateMeaning::define(std::string name, Fn fn) {
  table_[std::move(name)] = std::move(fn);
  return *this;
}

bool PredicateMeaning::evaluate(std::string_view name,
                                const std::vector<Int>& args) const {
  auto it = table_.find(name);
  if (it == table_.end()) return false;
  return it->second(args);
}

Int eval_arith(const Valuation& g, const ArithExpr& e) {
  return std::visit(
      overloaded{[](const Num& n) { return n.value; },
                 [&](const Var& v) { return g.get(v.name); },
                 [&](const Plus& p) {
                   return eval_arith(g, *p.left) + eval_arith(g, *p.right);
                 }},
      e.node());
}

bool eval_bool(const Valuation& g, const BoolExpr& b) {
  return eval_arith(g, *b.left) < eval_arith(g, *b.right);
}

bool eval_assert(const PredicateMeaning& m, const Valuation& g,
                 const Assertion& a) {
  return std::visit(
      overloaded{[&](const Pred& p) {
                   std::vector<Int> args;
                   args.reserve(p.args.size());
                   for (const auto& e : p.args)
                     args.push_back(eval_arith(g, *e));
                   return m.evaluate(p.name, args);
                 },
                 [&](const BoolHolds& h) { return eval_bool(g, h.test); },
                 [&](const Conj& c) {
                   return eval_assert(m, g, *c.left) &&
                          eval_assert(m, g, *c.right);
                 },
                 [&](const Not& n) { return !eval_assert(m, g, *n.arg); },
                 [](const TrueA&) { return true; },
                 [](const FalseA&) { return false; }},
      a.node());
}

int instr_size(const Instr& i) {
  return std::visit(
      overloaded{[](const Assign&) { return 1; },
                 [](const Seq& s) {
                   return 1 + instr_size(*s.first) + instr_size(*s.second);
                 },
                 [](const While& w) { return 1 + instr_size(*w.body); }},
      i.node());
}

int ann_size(const AnnInstr& i) {
  return std::visit(
      overloaded{[](const PreAnn& p) { return ann_size(*p.body); },
                 [](const AAssign&) { return 1; },
                 [](const ASeq& s) {
                   return 1 + ann_size(*s.first) + ann_size(*s.second);
                 },
                 [](const AWhile& w) { return 1 + ann_size(*w.body); }},
      i.node());
}

namespace {

std::optional<Valuation> exec_node(const Instr& i, int point, Valuation g,
                                   long& fuel,
                                   std::vector<TraceEntry>& trace) {
  return std::visit(
      overloaded{
          [&](const Assign& a) -> std::optional<Valuation> {
            trace.push_back({point, g});
            return g.with(a.var, eval_arith(g, *a.rhs));
          },
          [&](const Seq& s) -> std::optional<Valuation> {
            auto g1 = exec_node(*s.first, point + 1, std::move(g), fuel, trace);
            if (!g1) return std::nullopt;
            return exec_node(*s.second, point + 1 + instr_size(*s.first),
                             std::move(*g1), fuel, trace);
          },
          [&](const While& w) -> std::optional<Valuation> {
            while (eval_bool(g, w.test)) {
              if (fuel == 0) return std::nullopt;
              --fuel;
              trace.push_back({point, g});
              auto g1 = exec_node(*w.body, point + 1, std::move(g), fuel,
                                  trace);
              if (!g1) return std::nullopt;
              g = std::move(*g1);
              trace.push_back({point, g});
            }
            return g;
          }},
      i.node());
}

void annotation_points_into(const AnnInstr& i, int point,
                            std::vector<AssertPtr>& pending,
                            std::map<int, AssertPtr>& out) {
  std::visit(
      overloaded{
          [&](const PreAnn& p) {
            pending.push_back(p.assertion);
            annotation_points_into(*p.body, point, pending, out);
            pending.pop_back();
          },
          [&](const AAssign&) {
            AssertPtr a = true_a();
            for (auto it = pending.rbegin(); it != pending.rend(); ++it)
              a = std::holds_alternative<TrueA>(a->node()) ? *it : conj(*it, a);
            out[point] = a;
          },
          [&](const ASeq& s) {
            annotation_points_into(*s.first, point + 1, pending, out);
            std::vector<AssertPtr> none;
            annotation_points_into(*s.second, point + 1 + ann_size(*s.first),
                                   none, out);
          },
          [&](const AWhile& w) {
            out[point] = w.invariant;
            std::vector<AssertPtr> none;
            annotation_points_into(*w.body, point + 1, none, out);
          }},
      i.node());
}

}  // namespace

ExecResult exec_concrete(const Valuation& g, const Instr& i, long fuel) {
  ExecResult res;
  long budget = fuel;
  res.result = exec_node(i, 0, g, budget, res.trace);
  return res;
}

std::map<int, AssertPtr> annotation_points(const AnnInstr& i) {
  std::map<int, AssertPtr> out;
  std::vector<AssertPtr> pending;
  annotation_points_into(i, 0, pending, out);
  return out;
}

OracleConfig OracleConfig::for_conditions(const std::vector<Condition>& cs,
                                          long bound) {
  std::set<std::string> vars;
  for (const auto& c : cs) collect_vars(c, vars);
  OracleConfig cfg;
  cfg.bound = bound;
  cfg.variables.assign(vars.begin(), vars.end());
  return cfg;
}

std::optional<Valuation> check_condition_bounded(const PredicateMeaning& m,
                                                 const Condition& c,
                                                 const OracleConfig& cfg) {
  std::vector<std::string> vars(cfg.variables);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  const std::uint64_t per_var = 2 * static_cast<std::uint64_t>(cfg.bound) + 1;
  std::uint64_t cells = 1;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (cells > cfg.cell_cap / per_var) {
      throw OracleResourceError("valuation grid exceeds cell cap of " +
                                std::to_string(cfg.cell_cap));
    }
    cells *= per_var;
  }

  std::vector<long> current(vars.size(), -cfg.bound);
  while (true) {
    std::map<std::string, Int, std::less<>> values;
    for (std::size_t k = 0; k < vars.size(); ++k) values[vars[k]] = current[k];
    Valuation g(std::move(values));
    if (eval_assert(m, g, *c.hyp) && !eval_assert(m, g, *c.concl)) return g;

    // odometer step, last variable fastest; the first hit is therefore the
    // lexicographically least counterexample
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (current[k] < cfg.bound) {
        ++current[k];
        std::fill(current.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                  current.end(), -cfg.bound);
        break;
      }
      if (k == 0) return std::nullopt;
    }
    if (vars.empty()) return std::nullopt;
  }
}

std::optional<ConditionFailure> check_conditions_bounded(
    const PredicateMeaning& m, const std::vector<Condition>& cs,
    const OracleConfig& cfg) {
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (auto g = check_condition_bounded(m, cs[k], cfg)) {
      return ConditionFailure{k, std::move(*g)};
    }
  }
  return std::nullopt;
}

}  // namespace absint
