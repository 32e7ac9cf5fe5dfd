#include "suites.hpp"

#include "symvar/classification_db.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace symvar;

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for smooth projective symmetric varieties of Picard number one"};
  app.require_subcommand(1);
  suites::RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--samples", cfg.samples, "sample count (0: suite default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("-v,--verbose", cfg.verbose, "print the text summary to stderr as well");
  };
  auto* vc = app.add_subcommand("verify-classification", "verify the classification database");
  common(vc);
  vc->add_option("--case", cfg.cases, "case id (repeatable)");
  vc->add_option("--db", cfg.db, "database path");
  auto* g2 = app.add_subcommand("check-g2", "octonion and G2 chart checks");
  common(g2);
  auto* sp = app.add_subcommand("check-spinor", "even spinor and Pfaffian chart checks");
  common(sp);
  auto* jo = app.add_subcommand("check-jordan", "Jordan algebra and composition checks");
  common(jo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  nlohmann::json report;
  try {
    if (*vc) report = suites::run_classification(cfg);
    else if (*g2) report = suites::run_g2(cfg);
    else if (*sp) report = suites::run_spinor(cfg);
    else report = suites::run_jordan(cfg);
  } catch (const DbError& e) {
    std::cerr << "database error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = suites::render(report, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!(f << text)) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
  }
  if (cfg.verbose) std::cerr << suites::render(report, "text");
  return report["pass"].get<bool>() ? 0 : 1;
}
