#include "dgmf/errors.hpp"
#include "dgmf/groebner.hpp"
#include "dgmf/linkage.hpp"

namespace dgmf {

PipelineState run_pipeline(const LinkageInput& in) {
  if (in.a.size() != 4) throw WrongLength("a must have four entries");
  if (in.f.is_zero()) throw InputError("f must be nonzero");
  for (const Poly& p : in.a)
    if (p.is_zero()) throw InputError("generators of K must be nonzero");
  if (!in.options.skip_regularity_check && !check_regular_sequence(in.a))
    throw PrecheckFailed("a is not a regular sequence");
  linkage_prechecks(in.M);

  Report valid = validate_dga(in.M, in.a);
  if (!valid.all_passed())
    throw InternalCheckFailed("bundle fails validation: " + valid.failures().front().name + " " +
                              valid.failures().front().detail);

  const RingPtr& R = in.M.ring();
  PipelineState st{in,
                   build_koszul(in.a),
                   split_M3(in.M),
                   AlphaBeta{{}, {}, Poly(R), PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0)},
                   SigmaData{Poly(R), {}, {}, {}, PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0)},
                   BComplexData{FreeComplex(R, {1}, {}), {}, {}, {}, {}},
                   XData{PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0),
                         PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0), PolyMatrix(R, 0, 0),
                         PolyMatrix(R, 0, 0)},
                   {}};
  st.log.append(valid, "bundle.");

  st.ab = build_alpha_beta(in, st.K);
  st.log.append(check_alpha_divided_powers(in.M, st.K, st.ab), "alpha_beta.");
  st.sd = solve_r_sigma(in, st.K, st.ab, st.split);
  st.bc = build_B_and_c(in.M, st.K, st.ab);
  build_B_homotopy(st.bc, st.K);
  {
    Report b;
    ChainMap cm(st.bc.B, st.K.bundle.complex, st.bc.c);
    b.add("B_is_complex", check_complex(st.bc.B));
    b.add("c_chain_map", check_chain_map(cm));
    for (int i = 0; i <= 4; ++i)
      b.expect_zero("homotopy_identity_deg" + std::to_string(i), homotopy_residual(cm, st.bc.h, i));
    st.log.append(b, "b_complex.");
  }
  PolyMatrix X0 = build_X0(st.bc, st.ab, in.M);
  st.xd = correct_X(X0, in.M, st.K, st.ab);

  st.log.append(verify_hypotheses(in.M, st.ab, st.xd.X, st.xd.Xdag), "hypotheses.");
  st.log.append(verify_identity_suite(st), "identities.");
  st.log.append(verify_expansions(st), "expansions.");
  return st;
}

}  // namespace dgmf
