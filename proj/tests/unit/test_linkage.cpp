#include <gtest/gtest.h>

#include "dgmf/errors.hpp"
#include "dgmf/examples.hpp"
#include "dgmf/linkage.hpp"

using namespace dgmf;

namespace {

std::string poly_list(const std::vector<Poly>& v) {
  std::string s;
  for (const Poly& p : v) s += p.to_string() + ",";
  return s;
}

// Returns the names of the failing checks.
std::string failures(const Report& r) {
  std::string s;
  for (const Check& c : r.failures()) s += c.name + " " + c.detail + "; ";
  return s;
}

}  // namespace

TEST(Pipeline, E1KoszulLinkage) {
  PipelineState st = run_pipeline(example_E1());
  EXPECT_TRUE(st.log.all_passed()) << failures(st.log);
  const RingPtr& R = st.input.ring;
  EXPECT_EQ(st.sd.r, Poly::from_int(R, 1));
  EXPECT_EQ(poly_list(st.sd.sigma), "1,0,0,0,");
  EXPECT_EQ(st.ab.beta0, Poly::from_int(R, 1));
  EXPECT_TRUE(st.xd.X.is_zero());
}

TEST(Pipeline, E2RIsTheVariableU) {
  PipelineState st = run_pipeline(example_E2());
  EXPECT_TRUE(st.log.all_passed()) << failures(st.log);
  EXPECT_EQ(st.sd.r.to_string(), "u");
  EXPECT_EQ(poly_list(st.sd.sigma), "0,0,0,0,");
}

TEST(Pipeline, E3StrandBundle) {
  PipelineState st = run_pipeline(example_E3());
  EXPECT_TRUE(st.log.all_passed()) << failures(st.log);
  EXPECT_EQ(st.ab.beta0.to_string(), "x*y*z*w");
  EXPECT_EQ(st.sd.r.to_string(), "1");
  EXPECT_FALSE(st.xd.X.is_zero());
}

TEST(Pipeline, HypothesesHoldByDirectProducts) {
  for (const char* name : {"E1", "E2", "E3"}) {
    PipelineState st = run_pipeline(example_by_name(name));
    const DgaBundle& M = st.input.M;
    const RingPtr& R = st.input.ring;
    const PolyMatrix& X = st.xd.X;
    EXPECT_TRUE((X * st.ab.alpha[1]).is_zero()) << name;
    EXPECT_EQ(M.d(2) * X, PolyMatrix::scalar(R, M.rank(1), st.ab.beta0) - st.ab.alpha[1] * st.ab.beta[1])
        << name;
    EXPECT_TRUE((st.xd.Xdag * X).is_zero()) << name;
    EXPECT_TRUE((st.xd.Xdag * st.ab.alpha[2]).is_zero()) << name;
    // beta alpha is multiplication by beta_0 in every degree.
    for (int i = 0; i <= 4; ++i)
      EXPECT_EQ(st.ab.beta[i] * st.ab.alpha[i],
                PolyMatrix::scalar(R, st.ab.alpha[i].cols(), st.ab.beta0))
          << name << " degree " << i;
  }
}

TEST(Pipeline, AlphaBetaAreChainMaps) {
  PipelineState st = run_pipeline(example_E3());
  const DgaBundle& M = st.input.M;
  const DgaBundle& K = st.K.bundle;
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(M.d(i) * st.ab.alpha[i], st.ab.alpha[i - 1] * K.d(i)) << i;
    EXPECT_EQ(K.d(i) * st.ab.beta[i], st.ab.beta[i - 1] * M.d(i)) << i;
  }
}

TEST(Pipeline, SigmaDecomposesF) {
  for (const char* name : {"E1", "E2", "E3"}) {
    PipelineState st = run_pipeline(example_by_name(name));
    Poly s = st.sd.r * st.ab.beta0;
    for (std::size_t i = 0; i < 4; ++i) s += st.sd.sigma[i] * st.K.generators[i];
    EXPECT_EQ(s, st.input.f) << name;
  }
}

TEST(Pipeline, KernelChecksPass) {
  for (const char* name : {"E1", "E2", "E3"}) {
    LinkageInput in = example_by_name(name);
    in.options.kernel_checks = true;
    PipelineState st = run_pipeline(in);
    EXPECT_TRUE(st.log.all_passed()) << name << ": " << failures(st.log);
    EXPECT_NE(st.log.find("identities.ker_m3_meets_ker_beta3_trivially"), nullptr);
    EXPECT_NE(st.log.find("identities.ker_m3_meets_im_Xdag_trivially"), nullptr);
  }
}

TEST(Pipeline, StableCheckNames) {
  PipelineState st = run_pipeline(example_E1());
  for (const char* name :
       {"hypotheses.X_alpha1_zero", "hypotheses.m2_X", "hypotheses.X_m2_plus_m3_Xdag",
        "hypotheses.Xdag_X_zero", "hypotheses.Xdag_alpha2_zero", "identities.beta_of_products",
        "identities.sigma_decomposes_f", "identities.factor_identity_M2", "expansions.m2_X_expansion",
        "b_complex.B_is_complex", "alpha_beta.alpha_preserves_divided_squares"})
    EXPECT_NE(st.log.find(name), nullptr) << name;
  EXPECT_EQ(st.log.checks().size(), 103u);
}

TEST(Pipeline, RandomFVariantsOnE3) {
  LinkageInput base = example_E3();
  const RingPtr& R = base.ring;
  for (const char* f : {"x*y*z*w + x^2", "x*y*z*w + 3*x^2*y - y^2*z", "2*x*y*z*w + x^3"}) {
    LinkageInput in = base;
    in.f = parse_poly(f, R);
    PipelineState st = run_pipeline(in);
    EXPECT_TRUE(st.log.all_passed()) << f << ": " << failures(st.log);
  }
}

TEST(Prechecks, NonRegularSequence) {
  LinkageInput in = example_E1();
  in.a[3] = in.a[0];
  EXPECT_THROW(run_pipeline(in), PrecheckFailed);
}

TEST(Prechecks, SplitSizes) {
  LinkageInput in = example_E1();
  in.M.split12.push_back(in.M.split11.back());
  in.M.split11.pop_back();
  EXPECT_THROW(linkage_prechecks(in.M), PrecheckFailed);
  EXPECT_THROW(run_pipeline(in), PrecheckFailed);
}

TEST(Prechecks, RankRelation) {
  // Drop the last M_1 generator: rank M_2 = 2 rank M_1 - 2 fails.
  LinkageInput e3 = example_E3();
  const DgaBundle& M = e3.M;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i + 1 < M.rank(1); ++i) keep.push_back(i);
  std::vector<std::size_t> all2;
  for (std::size_t i = 0; i < M.rank(2); ++i) all2.push_back(i);
  std::vector<PolyMatrix> d{M.d(1).select_cols(keep), M.d(2).select_rows(keep), M.d(3), M.d(4)};
  FreeComplex C(e3.ring, {1, M.rank(1) - 1, M.rank(2), M.rank(3), 1}, d);
  DgaBundle B = empty_bundle(C, M.orientation, {0, 1, 2, 3}, {4, 5, 6});
  EXPECT_THROW(linkage_prechecks(B), PrecheckFailed);
}

TEST(Pipeline, ZeroFRejected) {
  LinkageInput in = example_E1();
  in.f = Poly(in.ring);
  EXPECT_THROW(run_pipeline(in), InputError);
}

TEST(Pipeline, InvalidBundleRejected) {
  LinkageInput in = example_E1();
  in.M.mu(1, 1)(0, 1) = in.M.mu(1, 1)(0, 1) + Poly::from_int(in.ring, 1);
  EXPECT_THROW(run_pipeline(in), InternalCheckFailed);
}
