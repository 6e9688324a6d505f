#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liebi/checks.hpp"

int main(int argc, char** argv) {
  liebi::CheckConfig cfg;
  std::string format = "text";
  std::string out_path;

  CLI::App app{"Verification suites for half-integer graded Lie algebras"};
  app.add_option("--algebra", cfg.algebra, "builtin:esv or a .lialg file")->capture_default_str();
  app.add_option("--check", cfg.check, "Check to run")
      ->required()
      ->check(CLI::IsMember(liebi::check_names()));
  app.add_option("--window", cfg.window, "Bound on |twice index|")->capture_default_str();
  app.add_option("--margin", cfg.margin, "Interior margin")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled r-matrices")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");
  app.add_flag("--timing", cfg.timing, "Include wall time in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "json" ? liebi::Format::json : liebi::Format::text;

  liebi::Report report;
  try {
    report = liebi::run_check(cfg);
  } catch (const liebi::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = liebi::format_report(report, cfg.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  return liebi::exit_code(report);
}
