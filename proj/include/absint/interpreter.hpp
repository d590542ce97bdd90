#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "absint/domain_api.hpp"
#include "absint/syntax.hpp"

// The two abstract interpreters: the naive ab1, which gives up on loops,
// and ab2, which searches for loop invariants by iteration, widening and
// over-approximation, detects dead code, and detects guaranteed
// non-termination.

namespace absint {

// Body-analysis callback: maps an entry state to the annotated body and the
// optional exit state (absent when the body is known not to terminate).
template <typename F, typename V>
concept BodyAnalysis = std::invocable<F, const State<V>&> &&
    std::convertible_to<std::invoke_result_t<F, const State<V>&>,
                        std::pair<AnnPtr, std::optional<State<V>>>>;

template <AbstractDomain D>
typename D::Value abstract_eval(const D& d, const State<typename D::Value>& s,
                                const ArithExpr& e) {
  return std::visit(
      overloaded{[&](const Num& n) { return d.from_int(n.value); },
                 [&](const Var& v) { return lookup(d, s, v.name); },
                 [&](const Plus& p) {
                   return d.add(abstract_eval(d, s, *p.left),
                                abstract_eval(d, s, *p.right));
                 }},
      e.node());
}

// Naive interpreter: assignments and sequences are interpreted precisely,
// loops are annotated with the trivial invariant and return the empty
// (all-top) state.
template <AbstractDomain D>
std::pair<AnnPtr, State<typename D::Value>> ab1(
    const D& d, const Instr& i, const State<typename D::Value>& s) {
  using S = State<typename D::Value>;
  using R = std::pair<AnnPtr, S>;
  return std::visit(
      overloaded{[&](const Assign& a) -> R {
                   return {pre_ann(state_to_assert(d, s),
                                   a_assign(a.var, a.rhs)),
                           update(a.var, abstract_eval(d, s, *a.rhs), s)};
                 },
                 [&](const Seq& q) -> R {
                   auto [a1, s1] = ab1(d, *q.first, s);
                   auto [a2, s2] = ab1(d, *q.second, s1);
                   return {a_seq(a1, a2), s2};
                 },
                 [&](const While& w) -> R {
                   auto [body, ignored] = ab1(d, *w.body, S{});
                   return {a_while(w.test, state_to_assert(d, S{}), body),
                           S{}};
                 }},
      i.node());
}

// Wraps every assignment in a false pre-annotation and forces all loop
// invariants to false; used to flag instructions proved unreachable.
AnnPtr mark(const Instr& i);

// One abstract pass through a loop's test and body: refine s by the test,
// run the body, join the result back onto init. A failed test refinement
// leaves s unchanged.
template <AbstractDomain D, BodyAnalysis<typename D::Value> F>
State<typename D::Value> step_once(const D& d, F&& ab, const BoolExpr& b,
                                   const State<typename D::Value>& init,
                                   const State<typename D::Value>& s) {
  auto s1 = d.learn_from_success(s, b);
  if (!s1) return s;
  auto [body, s2] = ab(*s1);
  return join_states_opt(d, init, s2);
}

// TODO: stop iterating early once a pass leaves the state unchanged; all
// n passes are always taken today.
template <AbstractDomain D, BodyAnalysis<typename D::Value> F>
State<typename D::Value> step_n(const D& d, F&& ab, const BoolExpr& b,
                                const State<typename D::Value>& init,
                                State<typename D::Value> s, unsigned n) {
  for (unsigned k = 0; k < n; ++k) s = step_once(d, ab, b, init, s);
  return s;
}

// A state is an invariant when one more pass (seeded and joined at s itself)
// does not grow any of its bindings.
template <AbstractDomain D, BodyAnalysis<typename D::Value> F>
bool is_invariant(const D& d, F&& ab, const State<typename D::Value>& s,
                  const BoolExpr& b) {
  return state_stable(d, s, step_once(d, ab, b, s, s));
}

// Iterate the body the domain-chosen number of times; if the result is not
// stable, over-approximate and retry with a smaller budget. Budget 0 falls
// back to the empty state, which is always an invariant.
template <AbstractDomain D, BodyAnalysis<typename D::Value> F>
State<typename D::Value> find_invariant(const D& d, F&& ab, const BoolExpr& b,
                                        const State<typename D::Value>& init,
                                        const State<typename D::Value>& s,
                                        const Instr& i, unsigned n) {
  auto stepped = step_n(d, ab, b, init, s, d.choose_widen_iters(s, i));
  if (is_invariant(d, ab, stepped, b)) return stepped;
  if (n == 0) return {};
  return find_invariant(d, ab, b, init, d.over_approx(n - 1, s, stepped), i,
                        n - 1);
}

// Re-runs the body analysis from the invariant refined by the loop test to
// recover the body annotations; a failed refinement means the body is dead.
template <AbstractDomain D, BodyAnalysis<typename D::Value> F>
AnnPtr annotate_body(const D& d, F&& ab, const BoolExpr& b,
                     const State<typename D::Value>& s, const Instr& i) {
  auto s1 = d.learn_from_success(s, b);
  if (!s1) return mark(i);
  return ab(*s1).first;
}

// Full interpreter. The exit state is absent when execution provably never
// terminates; sequencing marks everything after such a point as dead.
template <AbstractDomain D>
std::pair<AnnPtr, std::optional<State<typename D::Value>>> ab2(
    const D& d, const Instr& i, const State<typename D::Value>& s) {
  using S = State<typename D::Value>;
  using R = std::pair<AnnPtr, std::optional<S>>;
  return std::visit(
      overloaded{
          [&](const Assign& a) -> R {
            return {pre_ann(state_to_assert(d, s), a_assign(a.var, a.rhs)),
                    update(a.var, abstract_eval(d, s, *a.rhs), s)};
          },
          [&](const Seq& q) -> R {
            auto [a1, s1] = ab2(d, *q.first, s);
            if (!s1) return {a_seq(a1, mark(*q.second)), std::nullopt};
            auto [a2, s2] = ab2(d, *q.second, *s1);
            return {a_seq(a1, a2), s2};
          },
          [&](const While& w) -> R {
            auto ab = [&](const S& st) { return ab2(d, *w.body, st); };
            S inv = find_invariant(d, ab, w.test, s, s, *w.body,
                                   d.choose_approx_budget(s, *w.body));
            return {a_while(w.test, state_to_assert(d, inv),
                            annotate_body(d, ab, w.test, inv, *w.body)),
                    d.learn_from_failure(inv, w.test)};
          }},
      i.node());
}

}  // namespace absint
