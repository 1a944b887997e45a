#include <gtest/gtest.h>

#include "support.hpp"

namespace cs = coeffsharp;
using cs::Complex;

namespace {

cs::SearchConfig coarse(int tau1 = 5, int r = 5, int theta = 8)
{
    cs::SearchConfig cfg;
    cfg.grid_tau1 = tau1;
    cfg.grid_r = r;
    cfg.grid_theta = theta;
    return cfg;
}

// moderate grid used where the default would be slow for a unit test
cs::SearchConfig medium()
{
    return coarse(41, 11, 36);
}

} // namespace

TEST(Verifier, TargetsAndNames)
{
    for (auto id : cs::kAllTheorems) {
        EXPECT_EQ(cs::parse_theorem(cs::name_of(id)), id);
        const auto tgt = cs::target_spec(id);
        if (tgt.bound.exact) {
            EXPECT_DOUBLE_EQ(tgt.bound.value, tgt.bound.exact->convert_to<double>());
        }
    }
    EXPECT_FALSE(cs::parse_theorem("bogus").has_value());
    EXPECT_NEAR(cs::target_spec(cs::TheoremId::H21_inverse).bound.value, 0.0681818, 1e-7);
}

TEST(Verifier, CoarseGridNeverOvershoots)
{
    cs::SearchConfig cfg = coarse();
    cfg.refinement_rounds = 0;
    for (auto id : cs::kAllTheorems) {
        const auto rep = cs::verify(id, cfg, 1);
        EXPECT_TRUE(rep.never_exceeded) << cs::name_of(id) << " gap " << rep.gap;
    }
}

TEST(Verifier, RefinementShrinksTheGap)
{
    cs::SearchConfig raw = coarse(11, 6, 12);
    raw.refinement_rounds = 0;
    cs::SearchConfig refined = raw;
    refined.refinement_rounds = 6;
    for (auto id : {cs::TheoremId::H21_inverse, cs::TheoremId::diff_gamma_lower, cs::TheoremId::diff_Gamma_lower}) {
        const auto a = cs::verify(id, raw, 1);
        const auto b = cs::verify(id, refined, 1);
        EXPECT_GE(a.gap, 0.0) << cs::name_of(id);
        EXPECT_LE(b.gap, a.gap + 1e-15) << cs::name_of(id);
        EXPECT_TRUE(b.never_exceeded) << cs::name_of(id);
    }
}

TEST(Verifier, AttainsEachConstant)
{
    const auto cfg = medium();
    for (auto id : cs::kAllTheorems) {
        const auto rep = cs::verify(id, cfg);
        EXPECT_TRUE(rep.passed) << cs::name_of(id) << " empirical " << rep.empirical_extremum << " gap " << rep.gap;
    }
}

TEST(Verifier, ExtremizerLocations)
{
    const auto cfg = medium();
    const auto h = cs::verify(cs::TheoremId::H21_log, cfg);
    EXPECT_NEAR(h.maximizer.tau1, 0.0, 1e-3);
    EXPECT_NEAR(std::abs(h.maximizer.tau2), 1.0, 1e-3);

    const auto hi = cs::verify(cs::TheoremId::H21_inverse, cfg);
    EXPECT_NEAR(hi.maximizer.tau1, std::sqrt(2.0 / 11.0), 1e-3);
    EXPECT_NEAR(std::abs(hi.maximizer.tau2 - 1.0), 0.0, 1e-3);
    // tau3 drops out once |tau2| = 1

    const auto lo = cs::verify(cs::TheoremId::diff_gamma_lower, cfg);
    const auto c = cs::coeffs_from_point(lo.maximizer);
    EXPECT_NEAR(std::abs(c.c1), 2.0 * std::sqrt(2.0 / 3.0), 1e-2);
    EXPECT_NEAR(std::abs(c.c2), 2.0 / 3.0, 1e-2);
}

TEST(Verifier, DeterministicAcrossThreadCounts)
{
    const auto cfg = coarse(21, 6, 16);
    for (auto id : {cs::TheoremId::gamma3, cs::TheoremId::H21_inverse, cs::TheoremId::diff_Gamma_lower}) {
        const auto one = cs::verify(id, cfg, 1);
        EXPECT_EQ(one, cs::verify(id, cfg, 1));
        EXPECT_EQ(one, cs::verify(id, cfg, 3));
        EXPECT_EQ(one, cs::verify(id, cfg, 8));
    }
}

TEST(Verifier, InverseHankelSliceMatchesScalarProfile)
{
    const double t2 = cs::case_threshold();
    for (int i = 0; i <= 200; ++i) {
        const double t = t2 * i / 200.0;
        const double direct = cs::evaluate_target(cs::TheoremId::H21_inverse, {t, {1.0, 0.0}, {1.0, 0.0}});
        EXPECT_NEAR(direct, cs::case_value(cs::CaseFunction::Psi, t) / 192.0, 1e-10) << "t=" << t;
    }

    cs::SearchDomain slice;
    slice.dims[0] = {0.0, t2};
    slice.dims[1] = {1.0, 1.0};
    slice.dims[3] = {1.0, 1.0};
    const auto rep = cs::verify_on(cs::TheoremId::H21_inverse, cs::SearchConfig{}, slice);
    EXPECT_NEAR(rep.empirical_extremum, cs::case_maximum(cs::CaseFunction::Psi).max / 192.0, 1e-10);
    EXPECT_NEAR(rep.maximizer.tau1, std::sqrt(2.0 / 11.0), 1e-4);
}

TEST(Witnesses, ReproduceEachBound)
{
    for (auto id : cs::kAllTheorems) {
        const auto w = cs::sharpness_witness(id);
        const auto tgt = cs::target_spec(id);
        EXPECT_NEAR(w.target, tgt.bound.value, 1e-12) << cs::name_of(id);
        if (w.exact_target) {
            ASSERT_TRUE(tgt.bound.exact.has_value());
            EXPECT_EQ(*w.exact_target, *tgt.bound.exact) << cs::name_of(id);
        }
    }
}

TEST(Witnesses, ExactWhereCoefficientsAreRational)
{
    for (auto id : {cs::TheoremId::gamma1, cs::TheoremId::gamma2, cs::TheoremId::gamma3, cs::TheoremId::H21_log,
                    cs::TheoremId::Gamma1, cs::TheoremId::Gamma2, cs::TheoremId::diff_gamma_upper,
                    cs::TheoremId::diff_Gamma_upper}) {
        EXPECT_TRUE(cs::sharpness_witness(id).exact_target.has_value()) << cs::name_of(id);
    }
}

TEST(Witnesses, SpecificPoints)
{
    auto w = cs::sharpness_witness(cs::TheoremId::gamma3);
    EXPECT_NEAR(std::abs(w.coeffs.c3 - 2.0), 0.0, 1e-15);
    EXPECT_EQ(*w.exact_target, cs::Rational(1, 6));

    w = cs::sharpness_witness(cs::TheoremId::H21_inverse);
    const double t = std::sqrt(2.0 / 11.0);
    EXPECT_NEAR(std::abs(w.coeffs.c1 - 2 * t), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(w.coeffs.c2 - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(w.coeffs.c3 - 2 * t), 0.0, 1e-15);
    EXPECT_NEAR(w.value.magnitude(), 3.0 / 44.0, 1e-12);

    w = cs::sharpness_witness(cs::TheoremId::Gamma2);
    EXPECT_EQ(*w.exact_target, cs::Rational(3, 8));
}

TEST(Witnesses, CoefficientsComeFromTheExtremalFunctions)
{
    // c read off the p-function series agree with the witness point
    for (auto id : cs::kAllTheorems) {
        const auto w = cs::sharpness_witness(id);
        if (!cs::stratum_of(w.point)) {
            continue;
        }
        const auto c = cs::coeffs_of(cs::extremal_p_series(w.point, 4));
        EXPECT_LE(std::abs(c.c1 - w.coeffs.c1), 1e-12) << cs::name_of(id);
        EXPECT_LE(std::abs(c.c2 - w.coeffs.c2), 1e-12) << cs::name_of(id);
        EXPECT_LE(std::abs(c.c3 - w.coeffs.c3), 1e-12) << cs::name_of(id);
    }
}

TEST(SearchConfig, Validation)
{
    cs::SearchConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.grid_r = 1;
    EXPECT_THROW(cfg.validate(), cs::precondition_error);
    cfg = {};
    cfg.shrink_factor = 1.0;
    EXPECT_THROW(cfg.validate(), cs::precondition_error);
    cfg = {};
    cfg.tolerance_exceed = 1e-6;
    EXPECT_THROW(cfg.validate(), cs::precondition_error);
}
