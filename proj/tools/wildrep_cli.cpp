#include <iostream>

#include "CLI11.hpp"
#include "wildrep/cli.hpp"

int main(int argc, char** argv) {
  using namespace wildrep::cli;
  CLI::App app{"Galois representations of elliptic curves over 2-adic fields with non-abelian inertia"};
  app.require_subcommand(1);

  RunConfig cfg;
  int precision = 0, max_precision = 0;

  auto* classify = app.add_subcommand("classify", "classify one curve");
  classify->add_option("--field", cfg.field_path, "field descriptor (JSON)")->check(CLI::ExistingFile);
  classify->add_option("--curve", cfg.curve_path, "curve descriptor (JSON)")->required()->check(CLI::ExistingFile);
  classify->add_option("--precision", precision, "starting precision in uniformizer digits")
      ->check(CLI::Range(16, 1 << 16));
  classify->add_option("--max-precision", max_precision, "escalation cap")->check(CLI::Range(16, 1 << 16));
  classify->add_flag("--dual", cfg.dual, "swap the 8A/8B values (dual convention)");
  classify->add_option("--out", cfg.out_path, "write the report here instead of stdout");

  auto* batch = app.add_subcommand("batch", "classify every item of a manifest");
  batch->add_option("--manifest", cfg.manifest_path, "manifest (JSON)")->required()->check(CLI::ExistingFile);
  batch->add_option("--precision", precision, "starting precision for every item")->check(CLI::Range(16, 1 << 16));
  batch->add_option("--max-precision", max_precision, "escalation cap")->check(CLI::Range(16, 1 << 16));
  batch->add_option("--jobs", cfg.jobs, "items processed in parallel")->check(CLI::Range(1, 256));
  batch->add_flag("--dual", cfg.dual, "swap the 8A/8B values (dual convention)");
  batch->add_option("--out", cfg.out_path, "write the report array here instead of stdout");

  SelftestConfig st;
  auto* selftest = app.add_subcommand("selftest", "run the embedded acceptance checks");
  selftest->add_option("--precision", st.precision, "precision for the arithmetic checks")
      ->check(CLI::Range(16, 1 << 12));
  selftest->add_option("--trials", st.trials, "random trials per field shape")->check(CLI::Range(1L, 1000000L));
  selftest->add_flag("--inject-fault", st.inject_fault, "corrupt a character table (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  if (precision) cfg.precision = precision;
  if (max_precision) cfg.max_precision = max_precision;

  try {
    if (*classify) return cmd_classify(cfg, std::cout, std::cerr);
    if (*batch) return cmd_batch(cfg, std::cout, std::cerr);
    if (*selftest) return cmd_selftest(st, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kParse;
}
