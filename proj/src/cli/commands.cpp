#include <chrono>
#include <iostream>

#include <json.hpp>

#include "dgmf/cli.hpp"
#include "dgmf/dg_solver.hpp"
#include "dgmf/errors.hpp"
#include "dgmf/examples.hpp"
#include "dgmf/factorization.hpp"
#include "dgmf/groebner.hpp"

namespace dgmf {

using ojson = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

// Collects stage outcomes, checks and artifacts into report.json.
class RunLog {
 public:
  RunLog(std::string command, std::string input, std::filesystem::path out)
      : out_(std::move(out)) {
    root_["command"] = std::move(command);
    root_["input"] = std::move(input);
    root_["status"] = "running";
    root_["exit_code"] = 0;
    root_["failed_stage"] = nullptr;
    root_["error"] = nullptr;
    root_["stages"] = ojson::array();
    root_["checks"] = ojson::array();
    root_["results"] = ojson::object();
    root_["artifacts"] = ojson::array();
  }

  template <class Fn>
  void stage(const std::string& name, Fn&& fn) {
    current_ = name;
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    root_["stages"].push_back({{"name", name}, {"status", "ok"}, {"seconds", secs}});
  }

  // Records the checks of a stage; returns false and marks the stage when any fail.
  bool checks(const std::string& prefix, const Report& rep) {
    for (const Check& c : rep.checks())
      root_["checks"].push_back({{"name", prefix + c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!rep.all_passed() && failed_checks_stage_.empty()) {
      const Check f = rep.failures().front();
      failed_checks_stage_ = current_;
      failed_checks_detail_ = prefix + f.name + (f.detail.empty() ? "" : ": " + f.detail);
    }
    return rep.all_passed();
  }

  ojson& results() { return root_["results"]; }

  void artifact(const std::string& file, const std::string& content) {
    write_atomic(out_ / file, content);
    root_["artifacts"].push_back((out_ / file).string());
  }

  int finish(int code, const std::string& error) {
    if (code == 0 && !failed_checks_stage_.empty()) {
      code = 1;
      root_["failed_stage"] = failed_checks_stage_;
      root_["error"] = "check failed: " + failed_checks_detail_;
    } else if (code != 0) {
      root_["failed_stage"] = current_;
      root_["error"] = error;
    }
    root_["status"] = code == 0 ? "ok" : "failed";
    root_["exit_code"] = code;
    std::size_t passed = 0, total = 0;
    for (const auto& c : root_["checks"]) {
      ++total;
      if (c["passed"].get<bool>()) ++passed;
    }
    root_["summary"] = {{"checks", total}, {"passed", passed}};
    try {
      write_atomic(out_ / "report.json", root_.dump(1) + "\n");
    } catch (const std::exception& e) {
      std::cerr << "dgmf: cannot write report: " << e.what() << "\n";
    }
    if (code == 0) {
      std::cout << "ok: " << passed << "/" << total << " checks passed\n";
    } else {
      std::cerr << "dgmf: stage '" << root_["failed_stage"].get<std::string>()
                << "' failed: " << root_["error"].get<std::string>() << "\n";
    }
    return code;
  }

  // Runs body and maps exceptions to exit codes.
  template <class Fn>
  int run(Fn&& body) {
    try {
      body();
      return finish(0, "");
    } catch (const RNotUnit& e) {
      return finish(3, e.what());
    } catch (const PrecheckFailed& e) {
      return finish(3, e.what());
    } catch (const CharTwoNeedsTables& e) {
      return finish(2, e.what());
    } catch (const InputError& e) {
      return finish(2, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
      return finish(2, e.what());
    } catch (const nlohmann::json::exception& e) {
      return finish(2, e.what());
    } catch (const std::exception& e) {
      return finish(1, e.what());
    }
  }

 private:
  std::filesystem::path out_;
  ojson root_;
  std::string current_ = "start";
  std::string failed_checks_stage_, failed_checks_detail_;
};

ojson poly_list(const std::vector<Poly>& v) {
  ojson a = ojson::array();
  for (const Poly& p : v) a.push_back(p.to_string());
  return a;
}

void emit_mf(RunLog& log, const MatrixFactorization& mf, const std::string& tag) {
  log.artifact(tag + "_even.json", emit_matrix(mf.g_even));
  log.artifact(tag + "_odd.json", emit_matrix(mf.g_odd));
  log.results()[tag] = {{"rank_even", mf.g_even.cols()},
                        {"rank_odd", mf.g_odd.cols()},
                        {"even_blocks", mf.even_labels},
                        {"even_block_ranks", mf.even_ranks},
                        {"odd_blocks", mf.odd_labels},
                        {"odd_block_ranks", mf.odd_ranks}};
}

void run_build(RunLog& log, BundleFile bundle, const BuildFlags& flags) {
  LinkageInput& in = bundle.input;
  if (flags.kernel_checks) in.options.kernel_checks = true;
  if (flags.resolution && *flags.resolution != "N" && *flags.resolution != "acute")
    throw InputError("--resolution must be N or acute");

  if (flags.solve_mult) {
    log.stage("solve_mult", [&] {
      SolverConfig cfg;
      cfg.retry_budget = in.options.retry_budget;
      cfg.seed = seed_from_env(kDefaultSeed);
      in.M = complete_multiplication(in.M.complex, in.M.orientation, in.M.split11, in.M.split12, cfg);
      bundle.has_multiplication = true;
      log.results()["seed"] = cfg.seed;
      log.artifact("bundle_solved.json", emit_bundle(bundle));
    });
  } else if (!bundle.has_multiplication) {
    throw InputError("bundle carries differentials only; pass --solve-mult");
  }

  PipelineState st = [&] {
    std::optional<PipelineState> s;
    log.stage("pipeline", [&] { s.emplace(run_pipeline(in)); });
    return std::move(*s);
  }();
  log.checks("", st.log);
  log.results()["beta0"] = st.ab.beta0.to_string();
  log.results()["r"] = st.sd.r.to_string();
  log.results()["sigma"] = poly_list(st.sd.sigma);
  log.artifact("X.json", emit_matrix(st.xd.X));
  log.artifact("Xdag.json", emit_matrix(st.xd.Xdag));

  if (flags.mf1 || flags.mf2 || flags.resolution) {
    log.stage("cone", [&] {
      ConeData cone = build_cone_L_rho(st);
      log.checks("cone.", cone.report);
    });
  }
  if (flags.mf1) {
    log.stage("mf1", [&] {
      MatrixFactorization mf = build_mf(st, MfVariant::MF1);
      log.checks("mf1.", verify_mf_report(mf));
      emit_mf(log, mf, "mf1");
    });
  }
  if (flags.mf2) {
    log.stage("mf2", [&] {
      MatrixFactorization mf = build_mf(st, MfVariant::MF2);
      log.checks("mf2.", verify_mf_report(mf));
      emit_mf(log, mf, "mf2");
    });
  }
  if (flags.resolution) {
    const std::string& v = *flags.resolution;
    log.stage("resolution", [&] {
      PeriodicResolution res = build_resolution_N(
          st, v == "N" ? ResolutionVariant::N : ResolutionVariant::Acute, flags.check_len);
      log.checks("resolution.", res.report);
      for (std::size_t i = 0; i < res.head.size(); ++i)
        log.artifact("resolution_head_" + std::to_string(i + 1) + ".json", emit_matrix(res.head[i]));
      log.artifact("resolution_odd.json", emit_matrix(res.odd));
      log.artifact("resolution_even.json", emit_matrix(res.even));
      log.results()["resolution"] = {{"variant", v},
                                     {"first_periodic", res.first_periodic},
                                     {"ranks", res.ranks}};
    });
  }
}

}  // namespace

int cmd_validate(const std::filesystem::path& bundle, const std::filesystem::path& out,
                 bool check_regular) {
  RunLog log("validate", bundle.string(), out);
  return log.run([&] {
    BundleFile b = [&] {
      std::optional<BundleFile> f;
      log.stage("load", [&] { f.emplace(load_bundle(bundle)); });
      return std::move(*f);
    }();
    if (!b.has_multiplication) throw InputError("bundle carries differentials only");
    log.stage("validate", [&] {
      Report rep = validate_dga(b.input.M, b.input.a);
      if (check_regular) rep.add("regular_sequence", check_regular_sequence(b.input.a));
      log.checks("bundle.", rep);
    });
  });
}

int cmd_build_input(const BundleFile& bundle, const BuildFlags& flags) {
  RunLog log("build", "<memory>", flags.out);
  return log.run([&] { run_build(log, bundle, flags); });
}

int cmd_build(const std::filesystem::path& bundle, const BuildFlags& flags) {
  RunLog log("build", bundle.string(), flags.out);
  return log.run([&] {
    std::optional<BundleFile> f;
    log.stage("load", [&] { f.emplace(load_bundle(bundle)); });
    run_build(log, std::move(*f), flags);
  });
}

int cmd_demo(const std::string& name, const BuildFlags& flags) {
  RunLog log("demo", name, flags.out);
  return log.run([&] {
    std::optional<BundleFile> f;
    log.stage("load", [&] { f.emplace(BundleFile{example_by_name(name), true}); });
    run_build(log, std::move(*f), flags);
  });
}

int cmd_export(const std::string& name, const std::filesystem::path& path, bool differentials_only) {
  try {
    BundleFile b{example_by_name(name), !differentials_only};
    write_atomic(path, emit_bundle(b));
    return 0;
  } catch (const InputError& e) {
    std::cerr << "dgmf: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "dgmf: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dgmf
