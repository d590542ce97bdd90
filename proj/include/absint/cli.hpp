#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "absint/domains.hpp"

// Batch front end: parse a program and an initial abstract state, run one of
// the two interpreters under a chosen domain, and report the annotated
// program, the final state, and the verification conditions, optionally
// checked by the bounded oracle.

namespace absint {

enum class DomainKind { Parity, Interval };
enum class EngineKind { Ab1, Ab2 };
enum class FormatKind { Text, Json };

struct AnalysisConfig {
  DomainKind domain = DomainKind::Interval;
  EngineKind engine = EngineKind::Ab2;
  std::string init;
  FormatKind format = FormatKind::Text;
  bool check_vcs = false;
  long oracle_bound = 16;
  std::optional<unsigned> widen_iters;
  std::optional<unsigned> approx_budget;
};

struct AnalysisReport {
  std::string output;
  std::string error;
  // 0 success, 1 parse/config error, 2 oracle counterexample,
  // 3 internal invariant violation
  int exit_code = 0;
};

class InitStateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Comma-separated var=value entries using the domain's value syntax;
// duplicate variables are rejected so the state starts out consistent.
template <AbstractDomain D>
State<typename D::Value> parse_init_state(const D& d, std::string_view text);

AnalysisReport analyze(const AnalysisConfig& cfg,
                       const std::string& program_text);
AnalysisReport analyze_file(const AnalysisConfig& cfg,
                            const std::string& path);

template <AbstractDomain D>
std::string render_state(const D& d, const State<typename D::Value>& s) {
  std::string out;
  for (const auto& [name, value] : s) {
    if (!out.empty()) out += ", ";
    out += name;
    out += '=';
    out += d.render_value(value);
  }
  return out;
}

// --- JSON encoding (stable key order)

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& n);
Int int_from_json(const Json& j);

Json arith_to_json(const ArithExpr& e);
ArithPtr arith_from_json(const Json& j);
Json bool_to_json(const BoolExpr& b);
BoolExpr bool_from_json(const Json& j);
Json assert_to_json(const Assertion& a);
AssertPtr assert_from_json(const Json& j);
Json instr_to_json(const Instr& i);
InstrPtr instr_from_json(const Json& j);
Json ann_to_json(const AnnInstr& i);
AnnPtr ann_from_json(const Json& j);

Json value_to_json(Parity v);
Json value_to_json(const Interval& v);
Parity parity_value_from_json(const Json& j);
Interval interval_value_from_json(const Json& j);

Json state_to_json(const State<Parity>& s);
Json state_to_json(const State<Interval>& s);
State<Parity> parity_state_from_json(const Json& j);
State<Interval> interval_state_from_json(const Json& j);

// --- implementation

namespace detail {

std::vector<std::string_view> split_top_level_commas(std::string_view text);
std::string_view trim_view(std::string_view text);

}  // namespace detail

template <AbstractDomain D>
State<typename D::Value> parse_init_state(const D& d, std::string_view text) {
  State<typename D::Value> out;
  if (detail::trim_view(text).empty()) return out;
  for (std::string_view part : detail::split_top_level_commas(text)) {
    part = detail::trim_view(part);
    auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw InitStateError("init state entry '" + std::string(part) +
                           "' is not of the form var=value");
    }
    std::string name(detail::trim_view(part.substr(0, eq)));
    std::string_view value_text = detail::trim_view(part.substr(eq + 1));
    if (!is_identifier(name)) {
      throw InitStateError("invalid variable name '" + name +
                           "' in init state");
    }
    for (const auto& [existing, ignored] : out) {
      if (existing == name) {
        throw InitStateError("duplicate variable '" + name +
                             "' in init state: state must be duplication-free");
      }
    }
    auto value = d.parse_value(value_text);
    if (!value) {
      throw InitStateError("cannot parse abstract value '" +
                           std::string(value_text) + "' for variable '" +
                           name + "'");
    }
    out.emplace_back(std::move(name), std::move(*value));
  }
  return out;
}

}  // namespace absint
