#include <iostream>

#include <CLI11.hpp>

#include "dgmf/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dgmf: matrix factorizations from linked DG algebra resolutions"};
  app.require_subcommand(1);

  std::string bundle_path, demo_name, export_name, export_path;
  std::string out = "out";
  bool check_regular = false, differentials_only = false;
  std::string resolution;
  dgmf::BuildFlags flags;

  auto add_build_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--mf1", flags.mf1, "Build and verify the first matrix factorization");
    cmd->add_flag("--mf2", flags.mf2, "Build and verify the second matrix factorization (needs r a unit)");
    cmd->add_option("--resolution", resolution, "Periodic resolution variant")
        ->check(CLI::IsMember({"N", "acute"}));
    cmd->add_option("--check-len", flags.check_len, "Differentials checked in the resolution")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--solve-mult", flags.solve_mult, "Solve for the multiplication (seed from DGMF_SEED)");
    cmd->add_flag("--kernel-checks", flags.kernel_checks, "Run the kernel-intersection checks");
    cmd->add_option("--out", out, "Output directory");
  };

  CLI::App* validate = app.add_subcommand("validate", "Validate the DG algebra axioms of a bundle");
  validate->add_option("bundle", bundle_path, "Bundle file")->required();
  validate->add_flag("--check-regular", check_regular, "Also check that a is a regular sequence");
  validate->add_option("--out", out, "Output directory");

  CLI::App* build = app.add_subcommand("build", "Run the linkage pipeline on a bundle");
  build->add_option("bundle", bundle_path, "Bundle file")->required();
  add_build_flags(build);

  CLI::App* demo = app.add_subcommand("demo", "Run the pipeline on a built-in example");
  demo->add_option("name", demo_name, "Example name")->required()->check(CLI::IsMember({"E1", "E2", "E3"}));
  add_build_flags(demo);

  CLI::App* exp = app.add_subcommand("export", "Write a built-in example as a bundle file");
  exp->add_option("name", export_name, "Example name")->required()->check(CLI::IsMember({"E1", "E2", "E3"}));
  exp->add_option("path", export_path, "Output file")->required();
  exp->add_flag("--differentials-only", differentials_only, "Omit the multiplication");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  flags.out = out;
  if (!resolution.empty()) flags.resolution = resolution;
  if (*validate) return dgmf::cmd_validate(bundle_path, out, check_regular);
  if (*build) return dgmf::cmd_build(bundle_path, flags);
  if (*demo) return dgmf::cmd_demo(demo_name, flags);
  return dgmf::cmd_export(export_name, export_path, differentials_only);
}
