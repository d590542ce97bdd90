#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "absint/domains.hpp"
#include "support/conformance.hpp"
#include "support/generators.hpp"

using namespace absint;
using testing::Rng;

namespace {

const IntervalDomain interval;
const ParityDomain parity;

Interval iv(long lo, long hi) { return Interval::between(lo, hi); }

std::vector<Interval> all_intervals(long lo, long hi) {
  std::vector<Interval> out;
  out.push_back(Interval::all());
  for (long a = lo; a <= hi; ++a) {
    out.push_back(Interval::above(a));
    out.push_back(Interval::below(a));
    for (long b = a; b <= hi; ++b) out.push_back(Interval::between(a, b));
  }
  return out;
}

// Independent subset decision for intervals whose finite bounds lie within
// [lo, hi]: membership is swept over a window one wider than every bound,
// and missing bounds are compared directly.
bool gamma_subset(const Interval& v1, const Interval& v2, long lo, long hi) {
  for (long z = lo - 1; z <= hi + 1; ++z) {
    if (testing::gamma_member(interval, v1, Int(z)) &&
        !testing::gamma_member(interval, v2, Int(z)))
      return false;
  }
  if (!v1.hi() && v2.hi()) return false;
  if (!v1.lo() && v2.lo()) return false;
  return true;
}

}  // namespace

TEST_CASE("parity_from_int") {
  CHECK(parity_from_int(4) == Parity::Even);
  CHECK(parity_from_int(7) == Parity::Odd);
  CHECK(parity_from_int(-3) == Parity::Odd);
  CHECK(parity_from_int(-4) == Parity::Even);
  CHECK(parity_from_int(0) == Parity::Even);
}

TEST_CASE("parity_add") {
  CHECK(parity_add(Parity::Odd, Parity::Even) == Parity::Odd);
  CHECK(parity_add(Parity::Even, Parity::Odd) == Parity::Odd);
  CHECK(parity_add(Parity::Odd, Parity::Odd) == Parity::Even);
  CHECK(parity_add(Parity::Even, Parity::Even) == Parity::Even);
  CHECK(parity_add(Parity::Top, Parity::Even) == Parity::Top);
  CHECK(parity_add(Parity::Odd, Parity::Top) == Parity::Top);

  for (long z1 = -8; z1 <= 8; ++z1) {
    for (long z2 = -8; z2 <= 8; ++z2) {
      CHECK(parity_matches(parity_add(parity_from_int(z1), parity_from_int(z2)),
                           Int(z1 + z2)));
    }
  }
}

TEST_CASE("parity_to_pred") {
  CHECK(*parity_to_pred(Parity::Even, var("x")) == *pred("even", {var("x")}));
  CHECK(*parity_to_pred(Parity::Odd, var("y")) == *pred("odd", {var("y")}));
  CHECK(*parity_to_pred(Parity::Top, plus(var("x"), num(1))) == *true_a());
  for (long z = -8; z <= 8; ++z) {
    CHECK(eval_assert(parity.meaning(), Valuation{},
                      *parity_to_pred(parity_from_int(z), num(z))));
  }
}

TEST_CASE("interval_add") {
  CHECK(interval_add(iv(1, 2), iv(3, 4)) == iv(4, 6));
  CHECK(interval_add(Interval::above(1), Interval::below(2)) ==
        Interval::all());
  CHECK(interval_add(iv(0, 0), iv(0, 0)) == iv(0, 0));
  CHECK(interval_add(Interval::above(1), iv(2, 3)) == Interval::above(3));
  CHECK(interval_add(Interval::below(5), iv(2, 3)) == Interval::below(8));
  CHECK(interval_add(Interval::above(1), Interval::above(2)) ==
        Interval::above(3));
  CHECK(interval_add(Interval::below(1), Interval::below(2)) ==
        Interval::below(3));
  CHECK(interval_add(Interval::all(), iv(1, 1)) == Interval::all());
}

TEST_CASE("interval_add: exact bounds and sound membership") {
  auto values = all_intervals(-4, 4);
  for (const auto& v1 : values) {
    for (const auto& v2 : values) {
      auto sum = interval_add(v1, v2);
      // finite bounds add exactly, absent bounds stay absent
      if (v1.lo() && v2.lo()) {
        REQUIRE(sum.lo().has_value());
        CHECK(*sum.lo() == *v1.lo() + *v2.lo());
      } else {
        CHECK(!sum.lo().has_value());
      }
      if (v1.hi() && v2.hi()) {
        REQUIRE(sum.hi().has_value());
        CHECK(*sum.hi() == *v1.hi() + *v2.hi());
      } else {
        CHECK(!sum.hi().has_value());
      }
      for (long z1 = -6; z1 <= 6; z1 += 3) {
        for (long z2 = -6; z2 <= 6; z2 += 3) {
          if (interval_contains(v1, z1) && interval_contains(v2, z2)) {
            CHECK(interval_contains(sum, z1 + z2));
          }
        }
      }
    }
  }
}

TEST_CASE("interval_to_pred") {
  CHECK(*interval_to_pred(iv(0, 10), var("x")) ==
        *conj(pred("leq", {num(0), var("x")}),
              pred("leq", {var("x"), num(10)})));
  CHECK(*interval_to_pred(Interval::above(3), var("x")) ==
        *pred("leq", {num(3), var("x")}));
  CHECK(*interval_to_pred(Interval::below(7), var("x")) ==
        *pred("leq", {var("x"), num(7)}));
  CHECK(*interval_to_pred(Interval::all(), plus(var("x"), num(2))) ==
        *true_a());

  // wrong arity and unknown names evaluate to false
  CHECK(!interval.meaning().evaluate("leq", {Int(3)}));
  CHECK(!interval.meaning().evaluate("between", {Int(1), Int(2)}));
  CHECK(interval.meaning().evaluate("leq", {Int(1), Int(2)}));
}

TEST_CASE("interval learn_from_success") {
  State<Interval> s{{"x", iv(0, 10)}};
  auto narrowed =
      interval.learn_from_success(s, lt(var("x"), num(6)));
  REQUIRE(narrowed.has_value());
  CHECK(*narrowed == State<Interval>{{"x", iv(0, 5)}});

  State<Interval> high{{"x", iv(20, 30)}};
  CHECK(!interval.learn_from_success(high, lt(var("x"), num(10))).has_value());

  State<Interval> open{{"x", Interval::above(0)}};
  auto closed = interval.learn_from_success(open, lt(var("x"), num(10)));
  REQUIRE(closed.has_value());
  CHECK(*closed == State<Interval>{{"x", iv(0, 9)}});

  // no refinement needed when x already sits below the test bound
  State<Interval> low{{"x", iv(0, 3)}};
  auto kept = interval.learn_from_success(low, lt(var("x"), num(10)));
  REQUIRE(kept.has_value());
  CHECK(*kept == low);

  // tests not of the shape x < e learn nothing
  auto other =
      interval.learn_from_success(s, lt(plus(var("x"), num(1)), num(4)));
  REQUIRE(other.has_value());
  CHECK(*other == s);

  // unbounded test expression learns nothing
  State<Interval> with_y{{"x", iv(0, 10)}, {"y", Interval::above(0)}};
  auto unbounded =
      interval.learn_from_success(with_y, lt(var("x"), var("y")));
  REQUIRE(unbounded.has_value());
  CHECK(*unbounded == with_y);
}

TEST_CASE("interval learn_from_failure") {
  State<Interval> s{{"x", iv(0, 10)}};
  auto raised = interval.learn_from_failure(s, lt(var("x"), num(10)));
  REQUIRE(raised.has_value());
  CHECK(*raised == State<Interval>{{"x", iv(10, 10)}});

  State<Interval> low{{"x", iv(0, 5)}};
  CHECK(!interval.learn_from_failure(low, lt(var("x"), num(10))).has_value());

  State<Interval> high{{"x", iv(20, 30)}};
  auto kept = interval.learn_from_failure(high, lt(var("x"), num(10)));
  REQUIRE(kept.has_value());
  CHECK(*kept == high);

  State<Interval> open{{"x", Interval::below(50)}};
  auto closed = interval.learn_from_failure(open, lt(var("x"), num(10)));
  REQUIRE(closed.has_value());
  CHECK(*closed == State<Interval>{{"x", iv(10, 50)}});

  State<Interval> all{{"x", Interval::all()}};
  auto above = interval.learn_from_failure(all, lt(var("x"), num(10)));
  REQUIRE(above.has_value());
  CHECK(*above == State<Interval>{{"x", Interval::above(10)}});
}

TEST_CASE("interval_join") {
  CHECK(interval_join(iv(0, 3), iv(2, 5)) == iv(0, 5));
  CHECK(interval_join(Interval::above(3), Interval::above(5)) ==
        Interval::above(3));
  CHECK(interval_join(Interval::below(3), Interval::below(5)) ==
        Interval::below(5));
  CHECK(interval_join(Interval::above(3), Interval::below(5)) ==
        Interval::all());
  CHECK(interval_join(iv(0, 1), Interval::all()) == Interval::all());
  for (const auto& v : all_intervals(-4, 4)) {
    CHECK(interval_join(v, v) == v);
  }
}

TEST_CASE("interval_join is a least upper bound") {
  auto values = all_intervals(-4, 4);
  for (const auto& v1 : values) {
    for (const auto& v2 : values) {
      auto j = interval_join(v1, v2);
      CHECK(interval_thinner(v1, j));
      CHECK(interval_thinner(v2, j));
      for (const auto& k : values) {
        if (interval_thinner(v1, k) && interval_thinner(v2, k) &&
            interval_thinner(k, j) && !interval_thinner(j, k)) {
          CAPTURE(render_interval(v1));
          CAPTURE(render_interval(v2));
          CAPTURE(render_interval(k));
          CHECK(false);
        }
      }
    }
  }
}

TEST_CASE("interval_thinner") {
  CHECK(interval_thinner(iv(2, 3), Interval::above(1)));
  CHECK(!interval_thinner(Interval::all(), iv(0, 1)));
  CHECK(interval_thinner(Interval::all(), Interval::all()));
  CHECK(interval_thinner(iv(2, 3), Interval::below(3)));
  CHECK(!interval_thinner(Interval::above(1), iv(1, 100)));
  for (const auto& v : all_intervals(-4, 4)) {
    CHECK(interval_thinner(v, v));
    CHECK(interval_thinner(v, Interval::all()));
  }
}

TEST_CASE("interval_thinner agrees with the gamma-subset relation") {
  auto values = all_intervals(-8, 8);
  for (const auto& v1 : values) {
    for (const auto& v2 : values) {
      CAPTURE(render_interval(v1));
      CAPTURE(render_interval(v2));
      CHECK(interval_thinner(v1, v2) == gamma_subset(v1, v2, -8, 8));
    }
  }
}

TEST_CASE("open_interval") {
  CHECK(open_interval(iv(0, 3), iv(0, 9)) == Interval::above(0));
  CHECK(open_interval(iv(0, 3), iv(-2, 3)) == Interval::below(3));
  CHECK(open_interval(iv(0, 3), iv(-2, 9)) == Interval::all());
  CHECK(open_interval(Interval::below(5), Interval::below(7)) ==
        Interval::all());
  CHECK(open_interval(Interval::below(5), Interval::below(5)) ==
        Interval::below(5));
  CHECK(open_interval(Interval::above(2), Interval::above(4)) ==
        Interval::above(2));
  CHECK(open_interval(Interval::above(2), Interval::above(1)) ==
        Interval::all());
  CHECK(open_interval(iv(1, 2), Interval::above(0)) == Interval::all());
  for (const auto& v : all_intervals(-4, 4)) {
    if (v.lo() || v.hi()) {
      CHECK(open_interval(v, v) == v);
    }
  }
  // the result always covers both arguments
  auto values = all_intervals(-3, 3);
  for (const auto& v1 : values) {
    for (const auto& v2 : values) {
      auto o = open_interval(v1, v2);
      CHECK(interval_thinner(v1, o));
      CHECK(interval_thinner(v2, o));
    }
  }
}

TEST_CASE("interval_over_approx") {
  State<Interval> s{{"x", iv(0, 0)}};
  State<Interval> s2{{"x", iv(0, 2)}};
  CHECK(interval_over_approx(2, s, s2) ==
        State<Interval>{{"x", Interval::above(0)}});
  CHECK(interval_over_approx(0, s, s2).empty());

  Rng rng(0x0a99);
  for (int k = 0; k < 300; ++k) {
    auto sa = testing::gen_interval_state(rng, -6, 6);
    auto sb = testing::gen_interval_state(rng, -6, 6);
    auto out = interval_over_approx(1 + rng.below(3), sa, sb);
    REQUIRE(out.size() == sa.size());
    for (std::size_t e = 0; e < out.size(); ++e) {
      CHECK(out[e].first == sa[e].first);
      CHECK(interval_thinner(sa[e].second, out[e].second));
    }
  }
}

TEST_CASE("choose functions and their overrides") {
  State<Interval> s;
  auto i = assign("x", num(0));
  CHECK(interval.choose_widen_iters(s, *i) == 2);
  CHECK(interval.choose_approx_budget(s, *i) == 3);

  IntervalDomain tuned{5, 7};
  CHECK(tuned.choose_widen_iters(s, *i) == 5);
  CHECK(tuned.choose_approx_budget(s, *i) == 7);

  State<Parity> p;
  CHECK(parity.choose_widen_iters(p, *i) == 1);
  CHECK(parity.choose_approx_budget(p, *i) == 1);
}

TEST_CASE("abstract value text syntax") {
  CHECK(render_interval(iv(0, 10)) == "[0,10]");
  CHECK(render_interval(Interval::above(-3)) == "[-3,+inf)");
  CHECK(render_interval(Interval::below(7)) == "(-inf,7]");
  CHECK(render_interval(Interval::all()) == "top");

  CHECK(parse_interval("[0,0]") == Interval::between(0, 0));
  CHECK(parse_interval("[ -2 , 5 ]") == Interval::between(-2, 5));
  CHECK(parse_interval("[4,+inf)") == Interval::above(4));
  CHECK(parse_interval("(-inf,-1]") == Interval::below(-1));
  CHECK(parse_interval("top") == Interval::all());
  CHECK(!parse_interval("[5,1]").has_value());
  CHECK(!parse_interval("[1,2") .has_value());
  CHECK(!parse_interval("(3,4)").has_value());

  CHECK(parse_parity("even") == Parity::Even);
  CHECK(parse_parity("odd") == Parity::Odd);
  CHECK(parse_parity("top") == Parity::Top);
  CHECK(!parse_parity("Even").has_value());

  Rng rng(0x7e57);
  for (int k = 0; k < 200; ++k) {
    Interval v = testing::gen_interval(rng, -20, 20);
    CHECK(parse_interval(render_interval(v)) == v);
    Parity p = testing::gen_parity(rng);
    CHECK(parse_parity(render_parity(p)) == p);
  }
}

TEST_CASE("conformance: parity domain") {
  Rng rng(0xc0f0);
  auto failures = testing::run_conformance_suite(
      parity, testing::parity_conformance_input(), rng);
  for (const auto& f : failures) {
    CAPTURE(f);
    CHECK(false);
  }
  CHECK(failures.empty());
}

TEST_CASE("conformance: interval domain") {
  Rng rng(0xc0f1);
  auto failures = testing::run_conformance_suite(
      interval, testing::interval_conformance_input(), rng);
  for (const auto& f : failures) {
    CAPTURE(f);
    CHECK(false);
  }
  CHECK(failures.empty());
}
