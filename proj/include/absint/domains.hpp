#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "absint/domain_api.hpp"
#include "absint/interpreter.hpp"
#include "absint/semantics.hpp"

// The two shipped abstract domains: parity (even/odd/top) and intervals
// with optionally-infinite bounds.

namespace absint {

// --- parity

enum class Parity { Even, Odd, Top };

Parity parity_from_int(const Int& n);
Parity parity_add(Parity v1, Parity v2);
AssertPtr parity_to_pred(Parity v, const ArithPtr& e);
bool parity_matches(Parity v, const Int& n);

std::string render_parity(Parity v);
std::optional<Parity> parse_parity(std::string_view text);

struct ParityDomain {
  using Value = Parity;

  // CLI-level overrides for the iteration/approximation budgets.
  std::optional<unsigned> widen_iters_override;
  std::optional<unsigned> approx_budget_override;

  Parity top() const { return Parity::Top; }
  Parity from_int(const Int& n) const { return parity_from_int(n); }
  Parity add(Parity v1, Parity v2) const { return parity_add(v1, v2); }
  AssertPtr to_pred(Parity v, const ArithPtr& e) const {
    return parity_to_pred(v, e);
  }

  // Tests carry no parity information, so learning keeps the state as is.
  std::optional<State<Parity>> learn_from_success(const State<Parity>& s,
                                                  const BoolExpr&) const {
    return s;
  }
  std::optional<State<Parity>> learn_from_failure(const State<Parity>& s,
                                                  const BoolExpr&) const {
    return s;
  }

  // Flat lattice: equal values stay, anything else collapses to top.
  Parity join(Parity v1, Parity v2) const {
    return v1 == v2 ? v1 : Parity::Top;
  }
  bool thinner(Parity v1, Parity v2) const {
    return v1 == v2 || v2 == Parity::Top;
  }

  State<Parity> over_approx(unsigned n, const State<Parity>&,
                            const State<Parity>& s2) const {
    return n == 0 ? State<Parity>{} : s2;
  }

  unsigned choose_widen_iters(const State<Parity>&, const Instr&) const {
    return widen_iters_override.value_or(1);
  }
  unsigned choose_approx_budget(const State<Parity>&, const Instr&) const {
    return approx_budget_override.value_or(1);
  }

  const PredicateMeaning& meaning() const;

  std::string render_value(Parity v) const { return render_parity(v); }
  std::optional<Parity> parse_value(std::string_view text) const {
    return parse_parity(text);
  }
};

// --- intervals
//
// One of [lo,hi] (lo <= hi), [lo,+inf), (-inf,hi], or all of Z, encoded by
// the presence of the two bounds.

class Interval {
public:
  static Interval between(Int lo, Int hi);
  static Interval above(Int lo);
  static Interval below(Int hi);
  static Interval all();

  const std::optional<Int>& lo() const { return lo_; }
  const std::optional<Int>& hi() const { return hi_; }

  bool operator==(const Interval& other) const = default;

private:
  Interval(std::optional<Int> lo, std::optional<Int> hi)
      : lo_(std::move(lo)), hi_(std::move(hi)) {}

  std::optional<Int> lo_;
  std::optional<Int> hi_;
};

bool interval_contains(const Interval& v, const Int& n);
Interval interval_add(const Interval& v1, const Interval& v2);
Interval interval_join(const Interval& v1, const Interval& v2);
bool interval_thinner(const Interval& v1, const Interval& v2);
AssertPtr interval_to_pred(const Interval& v, const ArithPtr& e);

// Over-approximates v1 by pushing to infinity the bounds along which v2 has
// moved outward; the result covers both arguments.
Interval open_interval(const Interval& v1, const Interval& v2);
State<Interval> open_intervals(const State<Interval>& s,
                               const State<Interval>& s2);
State<Interval> interval_over_approx(unsigned n, const State<Interval>& s,
                                     const State<Interval>& s2);

std::string render_interval(const Interval& v);
std::optional<Interval> parse_interval(std::string_view text);

struct IntervalDomain {
  using Value = Interval;

  std::optional<unsigned> widen_iters_override;
  std::optional<unsigned> approx_budget_override;

  Interval top() const { return Interval::all(); }
  Interval from_int(const Int& n) const { return Interval::between(n, n); }
  Interval add(const Interval& v1, const Interval& v2) const {
    return interval_add(v1, v2);
  }
  AssertPtr to_pred(const Interval& v, const ArithPtr& e) const {
    return interval_to_pred(v, e);
  }

  // Refine the state through a test of the shape x < e; other test shapes
  // learn nothing. An absent result means the test outcome is impossible.
  std::optional<State<Interval>> learn_from_success(const State<Interval>& s,
                                                    const BoolExpr& b) const;
  std::optional<State<Interval>> learn_from_failure(const State<Interval>& s,
                                                    const BoolExpr& b) const;

  Interval join(const Interval& v1, const Interval& v2) const {
    return interval_join(v1, v2);
  }
  bool thinner(const Interval& v1, const Interval& v2) const {
    return interval_thinner(v1, v2);
  }
  State<Interval> over_approx(unsigned n, const State<Interval>& s,
                              const State<Interval>& s2) const {
    return interval_over_approx(n, s, s2);
  }

  unsigned choose_widen_iters(const State<Interval>&, const Instr&) const {
    return widen_iters_override.value_or(2);
  }
  unsigned choose_approx_budget(const State<Interval>&, const Instr&) const {
    return approx_budget_override.value_or(3);
  }

  const PredicateMeaning& meaning() const;

  std::string render_value(const Interval& v) const {
    return render_interval(v);
  }
  std::optional<Interval> parse_value(std::string_view text) const {
    return parse_interval(text);
  }
};

static_assert(AbstractDomain<ParityDomain>);
static_assert(AbstractDomain<IntervalDomain>);

}  // namespace absint
