#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "absint/cli.hpp"
#include "support/generators.hpp"

using namespace absint;
using testing::Rng;

namespace {

const IntervalDomain interval;
const ParityDomain parity;

}  // namespace

TEST_CASE("parse_init_state") {
  auto s = parse_init_state(interval, "x=[0,0]");
  CHECK(s == State<Interval>{{"x", Interval::between(0, 0)}});

  auto p = parse_init_state(parity, "x=even,y=odd");
  CHECK(p == State<Parity>{{"x", Parity::Even}, {"y", Parity::Odd}});

  auto t = parse_init_state(interval, "x=top");
  CHECK(t == State<Interval>{{"x", Interval::all()}});

  auto mixed = parse_init_state(interval, " x = [0,5] , y = [2,+inf) ");
  CHECK(mixed == State<Interval>{{"x", Interval::between(0, 5)},
                                 {"y", Interval::above(2)}});

  CHECK(parse_init_state(interval, "").empty());
  CHECK(parse_init_state(interval, "   ").empty());

  CHECK_THROWS_AS(parse_init_state(interval, "x=[0,0],x=[1,1]"),
                  InitStateError);
  CHECK_THROWS_AS(parse_init_state(interval, "x=[5,1]"), InitStateError);
  CHECK_THROWS_AS(parse_init_state(parity, "x=evenish"), InitStateError);
  CHECK_THROWS_AS(parse_init_state(parity, "9x=even"), InitStateError);
  CHECK_THROWS_AS(parse_init_state(parity, "x:even"), InitStateError);
}

TEST_CASE("analyze: golden interval run") {
  AnalysisConfig cfg;
  cfg.domain = DomainKind::Interval;
  cfg.engine = EngineKind::Ab2;
  cfg.init = "x=[0,0]";
  cfg.check_vcs = true;

  auto rep = analyze(cfg, "while x < 10 do x := x + 1 done");
  CHECK(rep.exit_code == 0);
  CHECK(rep.output.find("x=[10,10]") != std::string::npos);
  CHECK(rep.output.find("0 <= x /\\ x <= 10 /\\ true") != std::string::npos);
  CHECK(rep.output.find("0 <= x /\\ x <= 9 /\\ true") != std::string::npos);
  CHECK(rep.output.find("PASS") != std::string::npos);
}

TEST_CASE("analyze: golden parity run") {
  AnalysisConfig cfg;
  cfg.domain = DomainKind::Parity;
  cfg.engine = EngineKind::Ab1;
  cfg.init = "x=even,y=odd";
  cfg.check_vcs = true;

  auto rep = analyze(cfg, "x := x + y; y := y + 1");
  CHECK(rep.exit_code == 0);
  CHECK(rep.output.find("x=odd, y=even") != std::string::npos);
  CHECK(rep.output.find("even(x) /\\ odd(y) /\\ true") != std::string::npos);
  CHECK(rep.output.find("odd(x) /\\ odd(y) /\\ true") != std::string::npos);
  CHECK(rep.output.find("PASS") != std::string::npos);
}

TEST_CASE("analyze: non-termination reports UNREACHABLE") {
  AnalysisConfig cfg;
  cfg.init = "x=[0,5]";
  auto rep = analyze(cfg, "while x < 10 do x := x + 0 done; y := 0");
  CHECK(rep.exit_code == 0);
  CHECK(rep.output.find("UNREACHABLE") != std::string::npos);
  CHECK(rep.output.find("{ false } y := 0") != std::string::npos);
}

TEST_CASE("analyze: empty final state renders as top") {
  AnalysisConfig cfg;
  cfg.engine = EngineKind::Ab1;
  auto rep = analyze(cfg, "while x < 10 do x := x + 1 done");
  CHECK(rep.exit_code == 0);
  CHECK(rep.output.find("(top)") != std::string::npos);
}

TEST_CASE("analyze: errors exit with code 1") {
  AnalysisConfig cfg;
  auto bad_program = analyze(cfg, "while x < do x := 1 done");
  CHECK(bad_program.exit_code == 1);
  CHECK(!bad_program.error.empty());

  cfg.init = "x=[0,0],x=[1,1]";
  auto bad_init = analyze(cfg, "x := 0");
  CHECK(bad_init.exit_code == 1);
  CHECK(bad_init.error.find("duplication-free") != std::string::npos);

  AnalysisConfig tiny;
  tiny.check_vcs = true;
  tiny.oracle_bound = 4000;
  tiny.init = "x=[0,1],y=[0,1],z=[0,1]";
  auto too_big = analyze(tiny, "x := x + y + z");
  CHECK(too_big.exit_code == 1);
  CHECK(too_big.error.find("cell cap") != std::string::npos);
}

TEST_CASE("analyze: widening override weakens the result") {
  AnalysisConfig cfg;
  cfg.init = "x=[0,0]";
  cfg.widen_iters = 0;
  auto rep = analyze(cfg, "while x < 10 do x := x + 1 done");
  CHECK(rep.exit_code == 0);
  CHECK(rep.output.find("x=[10,+inf)") != std::string::npos);
}

TEST_CASE("json report carries the same information as the text report") {
  AnalysisConfig cfg;
  cfg.init = "x=[0,0]";
  cfg.format = FormatKind::Json;
  cfg.check_vcs = true;
  auto rep = analyze(cfg, "while x < 10 do x := x + 1 done");
  CHECK(rep.exit_code == 0);

  Json j = Json::parse(rep.output);
  CHECK(j.at("domain") == "interval");
  CHECK(j.at("engine") == "ab2");
  CHECK(j.at("oracle").at("result") == "pass");

  auto program = instr_from_json(j.at("program"));
  CHECK(*program == *parse_instr("while x < 10 do x := x + 1 done"));

  auto ann = ann_from_json(j.at("annotated"));
  IntervalDomain d;
  auto [expected_ann, expected_fin] =
      ab2(d, *program, parse_init_state(d, cfg.init));
  CHECK(*ann == *expected_ann);

  auto fin = interval_state_from_json(j.at("final_state"));
  REQUIRE(expected_fin.has_value());
  CHECK(fin == *expected_fin);
  // the loop's two implications plus one for the body annotation
  CHECK(j.at("conditions").size() == 3);
}

TEST_CASE("json: unreachable final state is null") {
  AnalysisConfig cfg;
  cfg.init = "x=[0,5]";
  cfg.format = FormatKind::Json;
  auto rep = analyze(cfg, "while x < 10 do x := x + 0 done; y := 0");
  Json j = Json::parse(rep.output);
  CHECK(j.at("final_state").is_null());
}

TEST_CASE("json round trips: syntax trees and states") {
  Rng rng(0x15a1);
  for (int k = 0; k < 200; ++k) {
    auto i = testing::gen_instr(rng, 4, 2);
    CHECK(*instr_from_json(instr_to_json(*i)) == *i);

    auto a = testing::gen_ann_instr(rng, 3, 1);
    CHECK(*ann_from_json(ann_to_json(*a)) == *a);

    auto s = testing::gen_interval_state(rng, -20, 20);
    CHECK(interval_state_from_json(state_to_json(s)) == s);

    auto p = testing::gen_parity_state(rng);
    CHECK(parity_state_from_json(state_to_json(p)) == p);
  }
}

TEST_CASE("json: big integers survive the round trip") {
  Int huge("123456789012345678901234567890");
  auto e = num(huge);
  CHECK(*arith_from_json(arith_to_json(*e)) == *e);
  CHECK(arith_to_json(*e).at("value").is_string());
  CHECK(int_from_json(int_to_json(Int(-42))) == -42);
}
