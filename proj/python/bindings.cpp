#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dgmf/cli.hpp"
#include "dgmf/dg_solver.hpp"
#include "dgmf/errors.hpp"
#include "dgmf/examples.hpp"
#include "dgmf/factorization.hpp"

namespace py = pybind11;
using namespace dgmf;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

StringMatrix to_strings(const PolyMatrix& m) {
  StringMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).to_string();
  return out;
}

std::vector<std::string> to_strings(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (const Poly& p : v) out.push_back(p.to_string());
  return out;
}

py::list checks_of(const Report& rep) {
  py::list out;
  for (const Check& c : rep.checks()) out.append(py::make_tuple(c.name, c.passed, c.detail));
  return out;
}

std::string normalize(const std::string& text, const std::vector<std::string>& vars, std::uint64_t p) {
  RingPtr R = make_ring(p == 0 ? Field::rationals() : Field::prime(p), vars);
  return parse_poly(text, R).to_string();
}

py::dict mf_dict(const MatrixFactorization& mf) {
  py::dict d;
  d["g_even"] = to_strings(mf.g_even);
  d["g_odd"] = to_strings(mf.g_odd);
  d["f"] = mf.f.to_string();
  d["even_blocks"] = mf.even_labels;
  d["odd_blocks"] = mf.odd_labels;
  d["even_block_ranks"] = mf.even_ranks;
  d["odd_block_ranks"] = mf.odd_ranks;
  d["checks"] = checks_of(verify_mf_report(mf));
  return d;
}

}  // namespace

PYBIND11_MODULE(_dgmf, m) {
  m.doc() = "Exact linkage of DG algebra resolutions and matrix factorizations";

  py::register_exception<Error>(m, "DgmfError");
  py::register_exception<InputError>(m, "InputError", m.attr("DgmfError"));
  py::register_exception<PrecheckFailed>(m, "PrecheckFailed", m.attr("DgmfError"));
  py::register_exception<RNotUnit>(m, "RNotUnit", m.attr("DgmfError"));
  py::register_exception<SolverGaveUp>(m, "SolverGaveUp", m.attr("DgmfError"));

  m.def("normalize_poly", &normalize, py::arg("text"), py::arg("variables"),
        py::arg("characteristic") = 101, "Parse and print a polynomial in canonical form.");

  py::class_<BundleFile>(m, "Bundle")
      .def_property_readonly("variables", [](const BundleFile& b) { return b.input.ring->variables(); })
      .def_property_readonly("characteristic",
                             [](const BundleFile& b) { return b.input.ring->field().characteristic(); })
      .def_property_readonly("a", [](const BundleFile& b) { return to_strings(b.input.a); })
      .def_property_readonly("f", [](const BundleFile& b) { return b.input.f.to_string(); })
      .def_property_readonly("ranks",
                             [](const BundleFile& b) {
                               std::vector<std::size_t> r;
                               for (int i = 0; i <= 4; ++i) r.push_back(b.input.M.rank(i));
                               return r;
                             })
      .def_readonly("has_multiplication", &BundleFile::has_multiplication)
      .def("differential", [](const BundleFile& b, int i) { return to_strings(b.input.M.d(i)); })
      .def("to_json", &emit_bundle)
      .def("validate", [](const BundleFile& b) { return checks_of(validate_dga(b.input.M, b.input.a)); })
      .def("with_f",
           [](const BundleFile& b, const std::string& f) {
             BundleFile out = b;
             out.input.f = parse_poly(f, b.input.ring);
             return out;
           })
      .def("solve_multiplication",
           [](const BundleFile& b, std::uint64_t seed, int retry_budget) {
             SolverConfig cfg;
             cfg.seed = seed;
             cfg.retry_budget = retry_budget;
             BundleFile out = b;
             out.input.M = complete_multiplication(b.input.M.complex, b.input.M.orientation,
                                                   b.input.M.split11, b.input.M.split12, cfg);
             out.has_multiplication = true;
             return out;
           },
           py::arg("seed") = 20240611, py::arg("retry_budget") = 4);

  m.def("example", [](const std::string& name) { return BundleFile{example_by_name(name), true}; });
  m.def("load_bundle", [](const std::filesystem::path& p) { return load_bundle(p); });
  m.def("parse_bundle", &parse_bundle);

  py::class_<PipelineState>(m, "Pipeline")
      .def_property_readonly("r", [](const PipelineState& s) { return s.sd.r.to_string(); })
      .def_property_readonly("sigma", [](const PipelineState& s) { return to_strings(s.sd.sigma); })
      .def_property_readonly("beta0", [](const PipelineState& s) { return s.ab.beta0.to_string(); })
      .def_property_readonly("X", [](const PipelineState& s) { return to_strings(s.xd.X); })
      .def_property_readonly("Xdag", [](const PipelineState& s) { return to_strings(s.xd.Xdag); })
      .def_property_readonly("checks", [](const PipelineState& s) { return checks_of(s.log); })
      .def_property_readonly("all_passed", [](const PipelineState& s) { return s.log.all_passed(); })
      .def("matrix_factorization",
           [](const PipelineState& s, const std::string& variant) {
             if (variant != "MF1" && variant != "MF2") throw InputError("variant must be MF1 or MF2");
             return mf_dict(build_mf(s, variant == "MF1" ? MfVariant::MF1 : MfVariant::MF2));
           })
      .def("cone_checks", [](const PipelineState& s) { return checks_of(build_cone_L_rho(s).report); })
      .def(
          "resolution",
          [](const PipelineState& s, const std::string& variant, std::size_t check_len) {
            if (variant != "N" && variant != "acute") throw InputError("variant must be N or acute");
            PeriodicResolution res = build_resolution_N(
                s, variant == "N" ? ResolutionVariant::N : ResolutionVariant::Acute, check_len);
            py::dict d;
            py::list head;
            for (const PolyMatrix& h : res.head) head.append(to_strings(h));
            d["head"] = head;
            d["odd"] = to_strings(res.odd);
            d["even"] = to_strings(res.even);
            d["first_periodic"] = res.first_periodic;
            d["ranks"] = res.ranks;
            d["checks"] = checks_of(res.report);
            return d;
          },
          py::arg("variant") = "N", py::arg("check_len") = 10);

  m.def(
      "run_pipeline",
      [](const BundleFile& b, bool kernel_checks) {
        if (!b.has_multiplication) throw InputError("bundle carries differentials only");
        LinkageInput in = b.input;
        in.options.kernel_checks = in.options.kernel_checks || kernel_checks;
        py::gil_scoped_release release;
        return run_pipeline(in);
      },
      py::arg("bundle"), py::arg("kernel_checks") = false);

  m.def(
      "cli_build",
      [](const std::filesystem::path& bundle, const std::filesystem::path& out, bool mf1, bool mf2,
         std::optional<std::string> resolution, bool solve_mult) {
        BuildFlags flags;
        flags.mf1 = mf1;
        flags.mf2 = mf2;
        flags.resolution = resolution;
        flags.solve_mult = solve_mult;
        flags.out = out;
        return cmd_build(bundle, flags);
      },
      py::arg("bundle"), py::arg("out"), py::arg("mf1") = false, py::arg("mf2") = false,
      py::arg("resolution") = py::none(), py::arg("solve_mult") = false,
      "Run the build command; returns its exit code.");
  m.def("cli_validate", &cmd_validate, py::arg("bundle"), py::arg("out"), py::arg("check_regular") = false);
}
