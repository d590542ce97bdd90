#include "absint/cli.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "absint/hoare.hpp"
#include "absint/interpreter.hpp"
#include "absint/semantics.hpp"

namespace absint {

namespace detail {

std::string_view trim_view(std::string_view text) {
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split_top_level_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '[' || c == '(') {
      ++depth;
    } else if (c == ']' || c == ')') {
      --depth;
    } else if (c == ',' && depth == 0) {
      parts.push_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace detail

Json int_to_json(const Int& n) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (lo <= n && n <= hi) return n.convert_to<std::int64_t>();
  return n.str();
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  throw std::runtime_error("expected an integer or a decimal string");
}

Json arith_to_json(const ArithExpr& e) {
  return std::visit(
      overloaded{[](const Num& n) {
                   return Json{{"kind", "num"}, {"value", int_to_json(n.value)}};
                 },
                 [](const Var& v) {
                   return Json{{"kind", "var"}, {"name", v.name}};
                 },
                 [](const Plus& p) {
                   return Json{{"kind", "plus"},
                               {"left", arith_to_json(*p.left)},
                               {"right", arith_to_json(*p.right)}};
                 }},
      e.node());
}

ArithPtr arith_from_json(const Json& j) {
  const auto& kind = j.at("kind").get_ref<const std::string&>();
  if (kind == "num") return num(int_from_json(j.at("value")));
  if (kind == "var") return var(j.at("name").get<std::string>());
  if (kind == "plus") {
    return plus(arith_from_json(j.at("left")), arith_from_json(j.at("right")));
  }
  throw std::runtime_error("unknown arithmetic expression kind: " + kind);
}

Json bool_to_json(const BoolExpr& b) {
  return Json{{"kind", "lt"},
              {"left", arith_to_json(*b.left)},
              {"right", arith_to_json(*b.right)}};
}

BoolExpr bool_from_json(const Json& j) {
  return lt(arith_from_json(j.at("left")), arith_from_json(j.at("right")));
}

Json assert_to_json(const Assertion& a) {
  return std::visit(
      overloaded{[](const Pred& p) {
                   Json args = Json::array();
                   for (const auto& arg : p.args)
                     args.push_back(arith_to_json(*arg));
                   return Json{{"kind", "pred"},
                               {"name", p.name},
                               {"args", std::move(args)}};
                 },
                 [](const BoolHolds& h) {
                   return Json{{"kind", "bool"}, {"test", bool_to_json(h.test)}};
                 },
                 [](const Conj& c) {
                   return Json{{"kind", "conj"},
                               {"left", assert_to_json(*c.left)},
                               {"right", assert_to_json(*c.right)}};
                 },
                 [](const Not& n) {
                   return Json{{"kind", "not"}, {"arg", assert_to_json(*n.arg)}};
                 },
                 [](const TrueA&) { return Json{{"kind", "true"}}; },
                 [](const FalseA&) { return Json{{"kind", "false"}}; }},
      a.node());
}

AssertPtr assert_from_json(const Json& j) {
  const auto& kind = j.at("kind").get_ref<const std::string&>();
  if (kind == "pred") {
    std::vector<ArithPtr> args;
    for (const auto& arg : j.at("args")) args.push_back(arith_from_json(arg));
    return pred(j.at("name").get<std::string>(), std::move(args));
  }
  if (kind == "bool") return bool_holds(bool_from_json(j.at("test")));
  if (kind == "conj") {
    return conj(assert_from_json(j.at("left")),
                assert_from_json(j.at("right")));
  }
  if (kind == "not") return not_a(assert_from_json(j.at("arg")));
  if (kind == "true") return true_a();
  if (kind == "false") return false_a();
  throw std::runtime_error("unknown assertion kind: " + kind);
}

Json instr_to_json(const Instr& i) {
  return std::visit(
      overloaded{[](const Assign& a) {
                   return Json{{"kind", "assign"},
                               {"var", a.var},
                               {"rhs", arith_to_json(*a.rhs)}};
                 },
                 [](const Seq& s) {
                   return Json{{"kind", "seq"},
                               {"first", instr_to_json(*s.first)},
                               {"second", instr_to_json(*s.second)}};
                 },
                 [](const While& w) {
                   return Json{{"kind", "while"},
                               {"test", bool_to_json(w.test)},
                               {"body", instr_to_json(*w.body)}};
                 }},
      i.node());
}

InstrPtr instr_from_json(const Json& j) {
  const auto& kind = j.at("kind").get_ref<const std::string&>();
  if (kind == "assign") {
    return assign(j.at("var").get<std::string>(),
                  arith_from_json(j.at("rhs")));
  }
  if (kind == "seq") {
    return seq(instr_from_json(j.at("first")),
               instr_from_json(j.at("second")));
  }
  if (kind == "while") {
    return while_loop(bool_from_json(j.at("test")),
                      instr_from_json(j.at("body")));
  }
  throw std::runtime_error("unknown instruction kind: " + kind);
}

Json ann_to_json(const AnnInstr& i) {
  return std::visit(
      overloaded{[](const PreAnn& p) {
                   return Json{{"kind", "pre"},
                               {"assert", assert_to_json(*p.assertion)},
                               {"instr", ann_to_json(*p.body)}};
                 },
                 [](const AAssign& a) {
                   return Json{{"kind", "assign"},
                               {"var", a.var},
                               {"rhs", arith_to_json(*a.rhs)}};
                 },
                 [](const ASeq& s) {
                   return Json{{"kind", "seq"},
                               {"first", ann_to_json(*s.first)},
                               {"second", ann_to_json(*s.second)}};
                 },
                 [](const AWhile& w) {
                   return Json{{"kind", "while"},
                               {"test", bool_to_json(w.test)},
                               {"invariant", assert_to_json(*w.invariant)},
                               {"body", ann_to_json(*w.body)}};
                 }},
      i.node());
}

AnnPtr ann_from_json(const Json& j) {
  const auto& kind = j.at("kind").get_ref<const std::string&>();
  if (kind == "pre") {
    return pre_ann(assert_from_json(j.at("assert")),
                   ann_from_json(j.at("instr")));
  }
  if (kind == "assign") {
    return a_assign(j.at("var").get<std::string>(),
                    arith_from_json(j.at("rhs")));
  }
  if (kind == "seq") {
    return a_seq(ann_from_json(j.at("first")), ann_from_json(j.at("second")));
  }
  if (kind == "while") {
    return a_while(bool_from_json(j.at("test")),
                   assert_from_json(j.at("invariant")),
                   ann_from_json(j.at("body")));
  }
  throw std::runtime_error("unknown annotated instruction kind: " + kind);
}

Json value_to_json(Parity v) { return render_parity(v); }

Json value_to_json(const Interval& v) {
  return Json{{"lo", v.lo() ? int_to_json(*v.lo()) : Json(nullptr)},
              {"hi", v.hi() ? int_to_json(*v.hi()) : Json(nullptr)}};
}

Parity parity_value_from_json(const Json& j) {
  auto v = parse_parity(j.get<std::string>());
  if (!v) throw std::runtime_error("unknown parity value");
  return *v;
}

Interval interval_value_from_json(const Json& j) {
  std::optional<Int> lo, hi;
  if (!j.at("lo").is_null()) lo = int_from_json(j.at("lo"));
  if (!j.at("hi").is_null()) hi = int_from_json(j.at("hi"));
  if (lo && hi) return Interval::between(*lo, *hi);
  if (lo) return Interval::above(*lo);
  if (hi) return Interval::below(*hi);
  return Interval::all();
}

namespace {

template <typename V>
Json state_to_json_impl(const State<V>& s) {
  Json out = Json::array();
  for (const auto& [name, value] : s) {
    out.push_back(Json{{"var", name}, {"value", value_to_json(value)}});
  }
  return out;
}

}  // namespace

Json state_to_json(const State<Parity>& s) { return state_to_json_impl(s); }
Json state_to_json(const State<Interval>& s) { return state_to_json_impl(s); }

State<Parity> parity_state_from_json(const Json& j) {
  State<Parity> out;
  for (const auto& entry : j) {
    out.emplace_back(entry.at("var").get<std::string>(),
                     parity_value_from_json(entry.at("value")));
  }
  return out;
}

State<Interval> interval_state_from_json(const Json& j) {
  State<Interval> out;
  for (const auto& entry : j) {
    out.emplace_back(entry.at("var").get<std::string>(),
                     interval_value_from_json(entry.at("value")));
  }
  return out;
}

namespace {

const char* domain_name(DomainKind d) {
  return d == DomainKind::Parity ? "parity" : "interval";
}

const char* engine_name(EngineKind e) {
  return e == EngineKind::Ab1 ? "ab1" : "ab2";
}

template <AbstractDomain D>
AnalysisReport run_analysis(const D& d, const AnalysisConfig& cfg,
                            const InstrPtr& program) {
  AnalysisReport rep;

  State<typename D::Value> init;
  try {
    init = parse_init_state(d, cfg.init);
  } catch (const InitStateError& err) {
    rep.error = err.what();
    rep.exit_code = 1;
    return rep;
  }

  AnnPtr ann;
  std::optional<State<typename D::Value>> final_state;
  if (cfg.engine == EngineKind::Ab1) {
    auto [a, s] = ab1(d, *program, init);
    ann = std::move(a);
    final_state = std::move(s);
  } else {
    auto [a, s] = ab2(d, *program, init);
    ann = std::move(a);
    final_state = std::move(s);
  }

  // The annotated result must erase back to the input program and every
  // reported state must be duplication-free.
  if (!(*cleanup(*ann) == *program) ||
      (final_state && !is_consistent(*final_state))) {
    rep.error = "internal invariant violation: analysis produced an "
                "inconsistent result";
    rep.exit_code = 3;
    return rep;
  }

  auto post = opt_state_to_assert(d, final_state);
  auto conds = conditions(*ann, post);

  std::optional<ConditionFailure> failure;
  if (cfg.check_vcs) {
    try {
      auto oracle_cfg = OracleConfig::for_conditions(conds, cfg.oracle_bound);
      failure = check_conditions_bounded(d.meaning(), conds, oracle_cfg);
    } catch (const OracleResourceError& err) {
      rep.error = err.what();
      rep.exit_code = 1;
      return rep;
    }
  }
  if (failure) rep.exit_code = 2;

  if (cfg.format == FormatKind::Text) {
    std::ostringstream out;
    out << "annotated program:\n"
        << render_ann_instr_pretty(*ann, 2) << "\n";
    out << "final state:\n  ";
    if (!final_state) {
      out << "UNREACHABLE\n";
    } else if (final_state->empty()) {
      out << "(top)\n";
    } else {
      out << render_state(d, *final_state) << "\n";
    }
    out << "verification conditions:\n";
    if (conds.empty()) out << "  (none)\n";
    for (const auto& c : conds) out << "  " << render_condition(c) << "\n";
    if (cfg.check_vcs) {
      out << "oracle (bound " << cfg.oracle_bound << "):\n";
      if (failure) {
        out << "  counterexample at condition " << failure->index << ": "
            << render_valuation(failure->counterexample) << "\n";
      } else {
        out << "  PASS\n";
      }
    }
    rep.output = out.str();
  } else {
    Json j;
    j["domain"] = domain_name(cfg.domain);
    j["engine"] = engine_name(cfg.engine);
    j["program"] = instr_to_json(*program);
    j["annotated"] = ann_to_json(*ann);
    j["final_state"] = final_state ? state_to_json(*final_state) : Json(nullptr);
    Json jconds = Json::array();
    for (const auto& c : conds) {
      jconds.push_back(Json{{"hyp", assert_to_json(*c.hyp)},
                            {"concl", assert_to_json(*c.concl)}});
    }
    j["conditions"] = std::move(jconds);
    if (cfg.check_vcs) {
      Json oracle;
      oracle["bound"] = cfg.oracle_bound;
      if (failure) {
        oracle["result"] = "counterexample";
        oracle["condition"] = failure->index;
        Json val;
        for (const auto& [name, value] : failure->counterexample.entries()) {
          val[name] = int_to_json(value);
        }
        oracle["valuation"] = std::move(val);
      } else {
        oracle["result"] = "pass";
      }
      j["oracle"] = std::move(oracle);
    }
    rep.output = j.dump(2) + "\n";
  }
  return rep;
}

}  // namespace

AnalysisReport analyze(const AnalysisConfig& cfg,
                       const std::string& program_text) {
  InstrPtr program;
  try {
    program = parse_instr(program_text);
  } catch (const ParseError& err) {
    AnalysisReport rep;
    rep.error = std::string("parse error: ") + err.what();
    rep.exit_code = 1;
    return rep;
  }
  if (cfg.domain == DomainKind::Parity) {
    return run_analysis(ParityDomain{cfg.widen_iters, cfg.approx_budget}, cfg,
                        program);
  }
  return run_analysis(IntervalDomain{cfg.widen_iters, cfg.approx_budget}, cfg,
                      program);
}

AnalysisReport analyze_file(const AnalysisConfig& cfg,
                            const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    AnalysisReport rep;
    rep.error = "cannot open file: " + path;
    rep.exit_code = 1;
    return rep;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return analyze(cfg, buf.str());
}

}  // namespace absint
