#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absint/semantics.hpp"
#include "absint/syntax.hpp"

// The abstract-domain contract and the abstract-state algebra built on it.
// A domain is a single value supplying the twelve domain-specific operations
// plus the meaning table for the predicate names its to_pred emits.

namespace absint {

// Ordered association sequence from variable names to abstract values.
// The analyzer only ever constructs states with pairwise-distinct names;
// order is significant for rendering.
template <typename V>
using State = std::vector<std::pair<std::string, V>>;

template <typename D>
concept AbstractDomain =
    std::equality_comparable<typename D::Value> &&
    requires(const D& d, const typename D::Value& v,
             const State<typename D::Value>& s, const ArithPtr& e,
             const BoolExpr& b, const Instr& i, const Int& z, unsigned n) {
      { d.top() } -> std::same_as<typename D::Value>;
      { d.from_int(z) } -> std::same_as<typename D::Value>;
      { d.add(v, v) } -> std::same_as<typename D::Value>;
      { d.to_pred(v, e) } -> std::same_as<AssertPtr>;
      {
        d.learn_from_success(s, b)
      } -> std::same_as<std::optional<State<typename D::Value>>>;
      {
        d.learn_from_failure(s, b)
      } -> std::same_as<std::optional<State<typename D::Value>>>;
      { d.join(v, v) } -> std::same_as<typename D::Value>;
      { d.thinner(v, v) } -> std::same_as<bool>;
      { d.over_approx(n, s, s) } -> std::same_as<State<typename D::Value>>;
      { d.choose_widen_iters(s, i) } -> std::same_as<unsigned>;
      { d.choose_approx_budget(s, i) } -> std::same_as<unsigned>;
      { d.meaning() } -> std::convertible_to<const PredicateMeaning&>;
      { d.render_value(v) } -> std::same_as<std::string>;
      {
        d.parse_value(std::string_view{})
      } -> std::same_as<std::optional<typename D::Value>>;
    };

// First binding of x, or the domain's top value when x is unbound.
template <AbstractDomain D>
typename D::Value lookup(const D& d, const State<typename D::Value>& s,
                         std::string_view x) {
  for (const auto& [name, value] : s) {
    if (name == x) return value;
  }
  return d.top();
}

// Replaces the first binding of x in place; appends when absent so that
// rendering order stays stable.
template <typename V>
State<V> update(const std::string& x, V v, const State<V>& s) {
  State<V> out = s;
  for (auto& [name, value] : out) {
    if (name == x) {
      value = std::move(v);
      return out;
    }
  }
  out.emplace_back(x, std::move(v));
  return out;
}

// Right-nested conjunction of per-variable predicates, ending in true.
template <AbstractDomain D>
AssertPtr state_to_assert(const D& d, const State<typename D::Value>& s) {
  AssertPtr out = true_a();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    out = conj(d.to_pred(it->second, var(it->first)), out);
  }
  return out;
}

// Absent states read as an unsatisfiable post-condition.
template <AbstractDomain D>
AssertPtr opt_state_to_assert(const D& d,
                              const std::optional<State<typename D::Value>>& s) {
  return s ? state_to_assert(d, *s) : false_a();
}

namespace detail {

inline bool mem(std::string_view x, const std::vector<std::string>& l) {
  for (const auto& y : l) {
    if (y == x) return true;
  }
  return false;
}

template <typename V>
bool no_dups(const State<V>& s, std::size_t from, std::vector<std::string>& l) {
  if (from == s.size()) return true;
  if (mem(s[from].first, l)) return false;
  l.push_back(s[from].first);
  return no_dups(s, from + 1, l);
}

}  // namespace detail

// True iff all bound names are pairwise distinct.
template <typename V>
bool is_consistent(const State<V>& s) {
  std::vector<std::string> exclusion;
  return detail::no_dups(s, 0, exclusion);
}

// Folds over s1 only: names absent from s1 drop to top implicitly, names
// absent from s2 join with top through lookup's default. The result is
// duplication-free whatever the inputs were.
template <AbstractDomain D>
State<typename D::Value> join_states(const D& d,
                                     const State<typename D::Value>& s1,
                                     const State<typename D::Value>& s2) {
  State<typename D::Value> out;
  for (auto it = s1.rbegin(); it != s1.rend(); ++it) {
    out = update(it->first, d.join(it->second, lookup(d, s2, it->first)), out);
  }
  return out;
}

template <AbstractDomain D>
State<typename D::Value> join_states_opt(
    const D& d, const State<typename D::Value>& s,
    const std::optional<State<typename D::Value>>& s2) {
  return s2 ? join_states(d, s, *s2) : s;
}

// True iff every binding of s1 is at least as precise in s2.
template <AbstractDomain D>
bool state_stable(const D& d, const State<typename D::Value>& s1,
                  const State<typename D::Value>& s2) {
  for (const auto& [name, value] : s1) {
    if (!d.thinner(lookup(d, s2, name), value)) return false;
  }
  return true;
}

}  // namespace absint
