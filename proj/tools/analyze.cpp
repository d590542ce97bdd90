#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "absint/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Static analyzer for a small while-language: infers "
               "per-point assertions by abstract interpretation and emits "
               "the annotated program, the final abstract state, and the "
               "verification conditions."};

  absint::AnalysisConfig cfg;
  std::string file;

  std::map<std::string, absint::DomainKind> domains{
      {"parity", absint::DomainKind::Parity},
      {"interval", absint::DomainKind::Interval}};
  std::map<std::string, absint::EngineKind> engines{
      {"ab1", absint::EngineKind::Ab1}, {"ab2", absint::EngineKind::Ab2}};
  std::map<std::string, absint::FormatKind> formats{
      {"text", absint::FormatKind::Text}, {"json", absint::FormatKind::Json}};

  app.add_option("--domain", cfg.domain, "Abstract domain (default: interval)")
      ->transform(CLI::CheckedTransformer(domains, CLI::ignore_case));
  app.add_option("--engine", cfg.engine, "Interpreter (default: ab2)")
      ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  app.add_option("--init", cfg.init,
                 "Initial abstract state, e.g. \"x=[0,0],y=top\" or "
                 "\"x=even,y=odd\"");
  app.add_option("--format", cfg.format, "Report format (default: text)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--check-vcs", cfg.check_vcs,
               "Run the bounded oracle over the verification conditions");
  app.add_option("--bound", cfg.oracle_bound,
                 "Oracle bound: variables range over [-N, N] (default: 16)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--widen-iters", cfg.widen_iters,
                 "Override the per-loop iteration count before the "
                 "stability check");
  app.add_option("--approx-budget", cfg.approx_budget,
                 "Override the number of over-approximation rounds per loop");
  app.add_option("file", file, "Program file")->required();

  CLI11_PARSE(app, argc, argv);

  absint::AnalysisReport report = absint::analyze_file(cfg, file);
  if (!report.output.empty()) std::cout << report.output;
  if (!report.error.empty()) std::cerr << report.error << "\n";
  return report.exit_code;
}
