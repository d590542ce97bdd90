#include "absint/domains.hpp"

#include <cassert>

namespace absint {

namespace {

// Nonnegative remainder mod 2, also for negative inputs.
Int mod2(const Int& n) {
  Int r = n % 2;
  if (r < 0) r += 2;
  return r;
}

}  // namespace

Parity parity_from_int(const Int& n) {
  return mod2(n) == 0 ? Parity::Even : Parity::Odd;
}

Parity parity_add(Parity v1, Parity v2) {
  if (v1 == Parity::Top || v2 == Parity::Top) return Parity::Top;
  return v1 == v2 ? Parity::Even : Parity::Odd;
}

AssertPtr parity_to_pred(Parity v, const ArithPtr& e) {
  switch (v) {
    case Parity::Even: return pred("even", {e});
    case Parity::Odd: return pred("odd", {e});
    case Parity::Top: return true_a();
  }
  return true_a();
}

bool parity_matches(Parity v, const Int& n) {
  switch (v) {
    case Parity::Even: return mod2(n) == 0;
    case Parity::Odd: return mod2(n) == 1;
    case Parity::Top: return true;
  }
  return true;
}

std::string render_parity(Parity v) {
  switch (v) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Top: return "top";
  }
  return "top";
}

std::optional<Parity> parse_parity(std::string_view text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  if (text == "top") return Parity::Top;
  return std::nullopt;
}

const PredicateMeaning& ParityDomain::meaning() const {
  static const PredicateMeaning table = [] {
    PredicateMeaning m;
    m.define("even", [](const std::vector<Int>& args) {
      return args.size() == 1 && mod2(args[0]) == 0;
    });
    m.define("odd", [](const std::vector<Int>& args) {
      return args.size() == 1 && mod2(args[0]) == 1;
    });
    return m;
  }();
  return table;
}

// --- intervals

Interval Interval::between(Int lo, Int hi) {
  assert(lo <= hi);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::above(Int lo) {
  return Interval(std::move(lo), std::nullopt);
}

Interval Interval::below(Int hi) {
  return Interval(std::nullopt, std::move(hi));
}

Interval Interval::all() { return Interval(std::nullopt, std::nullopt); }

bool interval_contains(const Interval& v, const Int& n) {
  if (v.lo() && n < *v.lo()) return false;
  if (v.hi() && *v.hi() < n) return false;
  return true;
}

Interval interval_add(const Interval& v1, const Interval& v2) {
  std::optional<Int> lo, hi;
  if (v1.lo() && v2.lo()) lo = *v1.lo() + *v2.lo();
  if (v1.hi() && v2.hi()) hi = *v1.hi() + *v2.hi();
  if (lo && hi) return Interval::between(*lo, *hi);
  if (lo) return Interval::above(*lo);
  if (hi) return Interval::below(*hi);
  return Interval::all();
}

Interval interval_join(const Interval& v1, const Interval& v2) {
  std::optional<Int> lo, hi;
  if (v1.lo() && v2.lo()) lo = std::min(*v1.lo(), *v2.lo());
  if (v1.hi() && v2.hi()) hi = std::max(*v1.hi(), *v2.hi());
  if (lo && hi) return Interval::between(*lo, *hi);
  if (lo) return Interval::above(*lo);
  if (hi) return Interval::below(*hi);
  return Interval::all();
}

bool interval_thinner(const Interval& v1, const Interval& v2) {
  if (v2.lo() && (!v1.lo() || *v1.lo() < *v2.lo())) return false;
  if (v2.hi() && (!v1.hi() || *v2.hi() < *v1.hi())) return false;
  return true;
}

AssertPtr interval_to_pred(const Interval& v, const ArithPtr& e) {
  if (v.lo() && v.hi()) {
    return conj(pred("leq", {num(*v.lo()), e}), pred("leq", {e, num(*v.hi())}));
  }
  if (v.lo()) return pred("leq", {num(*v.lo()), e});
  if (v.hi()) return pred("leq", {e, num(*v.hi())});
  return true_a();
}

Interval open_interval(const Interval& v1, const Interval& v2) {
  if (!v1.lo() && v1.hi() && !v2.lo() && v2.hi()) {
    return *v2.hi() <= *v1.hi() ? v1 : Interval::all();
  }
  if (v1.lo() && !v1.hi() && v2.lo() && !v2.hi()) {
    return *v1.lo() <= *v2.lo() ? v1 : Interval::all();
  }
  if (v1.lo() && v1.hi() && v2.lo() && v2.hi()) {
    bool lo_stable = *v1.lo() <= *v2.lo();
    bool hi_stable = *v2.hi() <= *v1.hi();
    if (lo_stable && hi_stable) return v1;
    if (lo_stable) return Interval::above(*v1.lo());
    if (hi_stable) return Interval::below(*v1.hi());
    return Interval::all();
  }
  return Interval::all();
}

State<Interval> open_intervals(const State<Interval>& s,
                               const State<Interval>& s2) {
  auto lookup_all = [&](std::string_view x) {
    for (const auto& [name, value] : s2) {
      if (name == x) return value;
    }
    return Interval::all();
  };
  State<Interval> out;
  out.reserve(s.size());
  for (const auto& [name, value] : s) {
    out.emplace_back(name, open_interval(value, lookup_all(name)));
  }
  return out;
}

State<Interval> interval_over_approx(unsigned n, const State<Interval>& s,
                                     const State<Interval>& s2) {
  return n == 0 ? State<Interval>{} : open_intervals(s, s2);
}

std::string render_interval(const Interval& v) {
  if (v.lo() && v.hi()) return "[" + v.lo()->str() + "," + v.hi()->str() + "]";
  if (v.lo()) return "[" + v.lo()->str() + ",+inf)";
  if (v.hi()) return "(-inf," + v.hi()->str() + "]";
  return "top";
}

namespace {

bool parse_int_text(std::string_view text, Int& out) {
  if (text.empty()) return false;
  std::size_t k = text.front() == '-' ? 1 : 0;
  if (k == text.size()) return false;
  for (; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  out = Int(std::string(text));
  return true;
}

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

}  // namespace

std::optional<Interval> parse_interval(std::string_view text) {
  text = trimmed(text);
  if (text == "top") return Interval::all();
  if (text.size() < 2) return std::nullopt;

  char open = text.front();
  char close = text.back();
  std::string_view inner = text.substr(1, text.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  std::string_view first = trimmed(inner.substr(0, comma));
  std::string_view second = trimmed(inner.substr(comma + 1));

  Int lo, hi;
  if (open == '[' && close == ']') {
    if (!parse_int_text(first, lo) || !parse_int_text(second, hi))
      return std::nullopt;
    if (hi < lo) return std::nullopt;
    return Interval::between(lo, hi);
  }
  if (open == '[' && close == ')') {
    if (!parse_int_text(first, lo) || second != "+inf") return std::nullopt;
    return Interval::above(lo);
  }
  if (open == '(' && close == ']') {
    if (first != "-inf" || !parse_int_text(second, hi)) return std::nullopt;
    return Interval::below(hi);
  }
  return std::nullopt;
}

namespace {

// Bound logic for tests of the shape x < e, shared by both learn functions.
// E is the abstract value of e in the current state, X the value of x.

struct LearnBounds {
  std::string x;
  Interval from_e;
  Interval of_x;
};

std::optional<LearnBounds> learn_bounds(const IntervalDomain& d,
                                        const State<Interval>& s,
                                        const BoolExpr& b) {
  const auto* v = std::get_if<Var>(&b.left->node());
  if (v == nullptr) return std::nullopt;
  return LearnBounds{v->name, abstract_eval(d, s, *b.right),
                     lookup(d, s, v->name)};
}

}  // namespace

std::optional<State<Interval>> IntervalDomain::learn_from_success(
    const State<Interval>& s, const BoolExpr& b) const {
  auto lb = learn_bounds(*this, s, b);
  if (!lb) return s;
  const auto& upper_e = lb->from_e.hi();
  if (!upper_e) return s;
  const auto& lo_x = lb->of_x.lo();
  const auto& hi_x = lb->of_x.hi();
  // x < e forces x <= upper(e) - 1
  if (lo_x && *upper_e <= *lo_x) return std::nullopt;
  if (!hi_x || *upper_e <= *hi_x) {
    Interval refined = lo_x ? Interval::between(*lo_x, *upper_e - 1)
                            : Interval::below(*upper_e - 1);
    return update(lb->x, refined, s);
  }
  return s;
}

std::optional<State<Interval>> IntervalDomain::learn_from_failure(
    const State<Interval>& s, const BoolExpr& b) const {
  auto lb = learn_bounds(*this, s, b);
  if (!lb) return s;
  const auto& lower_e = lb->from_e.lo();
  if (!lower_e) return s;
  const auto& lo_x = lb->of_x.lo();
  const auto& hi_x = lb->of_x.hi();
  // a failed x < e forces x >= lower(e)
  if (hi_x && *hi_x < *lower_e) return std::nullopt;
  if (!lo_x || *lo_x < *lower_e) {
    Interval refined = hi_x ? Interval::between(*lower_e, *hi_x)
                            : Interval::above(*lower_e);
    return update(lb->x, refined, s);
  }
  return s;
}

const PredicateMeaning& IntervalDomain::meaning() const {
  static const PredicateMeaning table = [] {
    PredicateMeaning m;
    m.define("leq", [](const std::vector<Int>& args) {
      return args.size() == 2 && args[0] <= args[1];
    });
    return m;
  }();
  return table;
}

}  // namespace absint
