#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "frnet/frequency.hpp"
#include "test_support.hpp"

using namespace frnet;
using frnet_test::close;
using cd = std::complex<double>;

namespace {

NetworkSpec raw_spec(Topology topology, const char* a, const char* b,
                     int m = 1, int n = 1) {
    NetworkSpec spec;
    spec.topology = topology;
    spec.m = m;
    spec.n = n;
    spec.component_a = parse_frac_poly(a);
    spec.component_b = parse_frac_poly(b);
    return spec;
}

NetworkSpec rlc_tree() {
    NetworkSpec spec;
    spec.topology = Topology::tree;
    spec.component_a = RlcSeries{1.0, 1.0, 1.0};
    spec.component_b = RlcSeries{1.0, 1.0, 1.0};
    return spec;
}

NetworkSpec pipe_rod_multitree() {
    NetworkSpec spec;
    spec.topology = Topology::multitree;
    spec.m = 2;
    spec.n = 1;
    spec.component_a = Pipe{2.0, 0.5};
    spec.component_b = Rod{1.0, 1.0};
    return spec;
}

NetworkSpec spring_damper_ladder() {
    NetworkSpec spec;
    spec.topology = Topology::ladder;
    spec.component_a = SpringDamper{1.0, 2.0};
    spec.component_b = SpringDamper{2.0, 1.0};
    return spec;
}

std::vector<double> omega_grid() {
    std::vector<double> ws;
    for (int i = 0; i <= 8; ++i) ws.push_back(1e-2 * std::pow(10.0, i / 2.0));
    return ws;
}

// Equation whose roots are -0.5 and -1.5 at every s: no passive branch.
QuadraticImplicitOp no_passive_branch() {
    return {1.0, FracPoly{{2.0, 0.0}}, FracPoly{{0.75, 0.0}}};
}

}  // namespace

TEST_CASE("quad_root picks +i*omega on the lossless tree (tie on Re = 0)") {
    const auto eq = derive_tree(parse_frac_poly("1*D^1"),
                                parse_frac_poly("1*D^1"));
    for (double w : {0.25, 1.0, 7.5}) {
        const QuadRoot root = quad_root(eq, {0.0, w});
        CHECK(root.branch_ok);
        CHECK(close(root.value, cd(0.0, w), 1e-14 * w));
    }
}

TEST_CASE("quad_root recovers the half-order branch sqrt(s)") {
    const auto eq = derive_tree(parse_frac_poly("1*D^1"), parse_frac_poly("1"));
    for (double w : {0.1, 1.0, 10.0}) {
        const QuadRoot root = quad_root(eq, {0.0, w});
        CHECK(root.branch_ok);
        CHECK(close(root.value, std::sqrt(cd(0.0, w)), 1e-14 * std::sqrt(w)));
    }
    const QuadRoot at_i = quad_root(eq, {0.0, 1.0});
    CHECK(close(at_i.value, cd(M_SQRT1_2, M_SQRT1_2), 1e-15));
}

TEST_CASE("quad_root on the unit ladder matches the closed form") {
    const auto eq = derive_ladder(parse_frac_poly("1"),
                                  parse_frac_poly("1*D^1"));
    const cd s{0.0, 1.0};
    const QuadRoot root = quad_root(eq, s);
    const cd expected = 0.5 * (1.0 + std::sqrt(cd(1.0, 4.0)));
    CHECK(root.branch_ok);
    CHECK(close(root.value, expected, 1e-14));
    CHECK(equation_residual(eq, s, root.value) <= 1e-15);
}

TEST_CASE("quad_root flags the branch when both roots are active") {
    const auto eq = no_passive_branch();
    for (cd s : {cd{0.0, 1.0}, cd{3.0, 2.0}}) {
        const QuadRoot root = quad_root(eq, s);
        CHECK_FALSE(root.branch_ok);
        CHECK(close(root.value, cd(-0.5, 0.0), 1e-15));
    }
}

TEST_CASE("quad_root handles a vanishing constant term without dividing by zero") {
    const QuadraticImplicitOp down{1.0, parse_frac_poly("1*D^1"), FracPoly{}};
    const QuadRoot r1 = quad_root(down, {0.0, 1.0});
    CHECK(r1.branch_ok);
    CHECK(r1.value == cd(0.0, 0.0));  // roots {0, -i}; tie broken by Im

    const QuadraticImplicitOp up{1.0, parse_frac_poly("-1*D^1"), FracPoly{}};
    const QuadRoot r2 = quad_root(up, {0.0, 1.0});
    CHECK(r2.branch_ok);
    CHECK(close(r2.value, cd(0.0, 1.0), 0.0));

    const QuadraticImplicitOp damped{1.0, parse_frac_poly("2"), FracPoly{}};
    const QuadRoot r3 = quad_root(damped, {0.0, 1.0});
    CHECK(r3.branch_ok);  // roots {0, -2}; only 0 is passive
    CHECK(r3.value == cd(0.0, 0.0));
}

TEST_CASE("quad_root rejects a degenerate equation") {
    const QuadraticImplicitOp eq{0.0, parse_frac_poly("1*D^1"),
                                 parse_frac_poly("-1")};
    CHECK_THROWS_AS(quad_root(eq, {0.0, 1.0}), DegenerateEquation);
}

TEST_CASE("quad_root residuals vanish on the physical topologies") {
    for (const auto& spec :
         {rlc_tree(), pipe_rod_multitree(), spring_damper_ladder()}) {
        const auto eq = derive_equation(spec);
        for (double w : omega_grid()) {
            const cd s{0.0, w};
            const QuadRoot root = quad_root(eq, s);
            CHECK(root.branch_ok);
            CHECK(equation_residual(eq, s, root.value) <= 1e-12);
        }
    }
}

TEST_CASE("truncated_response walks the generation map") {
    // Equal unit components reduce the tree map to Z <- (1 + Z)/2, so depth
    // d from a shorted termination is exactly 1 - 2^-d.
    const auto tree = raw_spec(Topology::tree, "1", "1");
    for (int depth = 0; depth <= 4; ++depth) {
        const cd z = truncated_response(tree, {0.0, 1.0}, depth);
        CHECK(z == cd(1.0 - std::pow(2.0, -depth), 0.0));
    }
    CHECK(truncated_response(tree, {0.0, 1.0}, 0,
                             Termination::value({5.0, -2.0})) == cd(5.0, -2.0));

    const auto ladder = raw_spec(Topology::ladder, "1", "1");
    CHECK(truncated_response(ladder, {0.0, 1.0}, 1) == cd(1.0, 0.0));
    CHECK(truncated_response(ladder, {0.0, 1.0}, 1, Termination::open()) ==
          cd(2.0, 0.0));
    CHECK(close(truncated_response(ladder, {0.0, 1.0}, 2, Termination::open()),
                cd(5.0 / 3.0, 0.0), 1e-15));
    CHECK(truncated_response(ladder, {0.0, 1.0}, 2) == cd(1.5, 0.0));

    const auto multi = raw_spec(Topology::multitree, "4", "1", 2, 0);
    CHECK(truncated_response(multi, {0.0, 1.0}, 1, Termination::open()) ==
          cd(2.0, 0.0));
    CHECK(truncated_response(multi, {0.0, 1.0}, 2, Termination::open()) ==
          cd(3.0, 0.0));
}

TEST_CASE("truncated_response treats open depth zero as an unterminated port") {
    const auto tree = raw_spec(Topology::tree, "1", "1");
    const cd z = truncated_response(tree, {0.0, 1.0}, 0, Termination::open());
    CHECK(std::isinf(z.real()));
    CHECK(z.imag() == 0.0);
}

TEST_CASE("truncated_response throws NumericBlowup on a singular junction") {
    // La + Lb = 0 makes the first open step divide by zero.
    const auto tree = raw_spec(Topology::tree, "1", "-1");
    CHECK_THROWS_AS(
        truncated_response(tree, {0.0, 1.0}, 1, Termination::open()),
        NumericBlowup);
    CHECK_THROWS_AS(truncated_response(tree, {0.0, 1.0}, -1),
                    std::invalid_argument);
}

TEST_CASE("fixed_point converges to the passive branch") {
    // Constant components: the map is Z <- (1 + Z)/2 with fixed point 1,
    // reached immediately from the seed Z0 = 1.
    const auto constant_tree = raw_spec(Topology::tree, "1", "1");
    const FixedPoint trivial =
        fixed_point(constant_tree, {0.0, 1.0}, 1e-12, 100);
    CHECK(trivial.value == cd(1.0, 0.0));
    CHECK(trivial.iterations == 1);

    const auto lossless = raw_spec(Topology::tree, "1*D^1", "1*D^1");
    const FixedPoint tree_fp = fixed_point(lossless, {0.0, 1.0}, 1e-12, 500);
    CHECK(close(tree_fp.value, cd(0.0, 1.0), 1e-10));
    CHECK(tree_fp.iterations > 1);

    const auto ladder = raw_spec(Topology::ladder, "1", "1*D^1");
    const FixedPoint ladder_fp = fixed_point(ladder, {0.0, 1.0}, 1e-12, 500);
    CHECK(close(ladder_fp.value, 0.5 * (1.0 + std::sqrt(cd(1.0, 4.0))),
                1e-10));
}

TEST_CASE("fixed_point agrees with quad_root across topologies") {
    for (const auto& spec :
         {rlc_tree(), pipe_rod_multitree(), spring_damper_ladder()}) {
        const auto eq = derive_equation(spec);
        for (double w : omega_grid()) {
            const cd s{0.0, w};
            const QuadRoot root = quad_root(eq, s);
            const FixedPoint fp = fixed_point(spec, s, 1e-10, 200000);
            const double scale = std::max(1.0, std::abs(root.value));
            CHECK(close(fp.value, root.value, 1e-8 * scale));
            CHECK(equation_residual(eq, s, fp.value) <= 1e-9);
        }
    }
}

TEST_CASE("deep truncation reproduces the algebraic branch") {
    const auto spec = rlc_tree();
    const auto eq = derive_equation(spec);
    for (double w : omega_grid()) {
        const cd s{0.0, w};
        const cd deep = truncated_response(spec, s, 200);
        const QuadRoot root = quad_root(eq, s);
        CHECK(close(deep, root.value, 1e-10 * std::max(1.0, std::abs(root.value))));
    }
}

TEST_CASE("fixed_point reports the last iterate on failure") {
    const auto ladder = raw_spec(Topology::ladder, "1", "1*D^1");
    try {
        fixed_point(ladder, {0.0, 10.0}, 1e-15, 3);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        CHECK(e.iterations == 3);
        CHECK(std::abs(e.last) > 0.0);
        CHECK(std::abs(e.last) < 1e300);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(fixed_point(ladder, {0.0, 1.0}, 0.0, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(fixed_point(ladder, {0.0, 1.0}, 1e-10, 0),
                    std::invalid_argument);
}

TEST_CASE("bode grids hit decade endpoints exactly") {
    const auto eq = derive_tree(parse_frac_poly("1*D^1"),
                                parse_frac_poly("1*D^1"));
    const FrequencyResponse fr = bode(eq, 1.0, 100.0, 3);
    REQUIRE(fr.samples.size() == 3);
    CHECK(fr.samples[0].omega == 1.0);
    CHECK(fr.samples[1].omega == 10.0);
    CHECK(fr.samples[2].omega == 100.0);
    for (const auto& sample : fr.samples) {
        CHECK(sample.branch_ok);
        CHECK(close(sample.value, cd(0.0, sample.omega),
                    1e-14 * sample.omega));
    }
    CHECK(fr.equation == eq);

    const FrequencyResponse odd = bode(eq, 0.3, 17.0, 7);
    REQUIRE(odd.samples.size() == 7);
    CHECK(odd.samples.front().omega == 0.3);
    CHECK(odd.samples.back().omega == 17.0);
    for (std::size_t i = 1; i < odd.samples.size(); ++i) {
        CHECK(odd.samples[i - 1].omega < odd.samples[i].omega);
    }
}

TEST_CASE("bode validates its window") {
    const auto eq = derive_tree(parse_frac_poly("1*D^1"),
                                parse_frac_poly("1*D^1"));
    CHECK_THROWS_AS(bode(eq, 0.0, 10.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(bode(eq, -1.0, 10.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(bode(eq, 10.0, 10.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(bode(eq, 10.0, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(bode(eq, 1.0, 10.0, 1), std::invalid_argument);
}

TEST_CASE("bode records branch failures instead of throwing") {
    const FrequencyResponse fr = bode(no_passive_branch(), 1.0, 10.0, 5);
    for (const auto& sample : fr.samples) {
        CHECK_FALSE(sample.branch_ok);
        CHECK(close(sample.value, cd(-0.5, 0.0), 1e-15));
    }
}

TEST_CASE("fit_order recovers pure power laws") {
    const auto first = derive_tree(parse_frac_poly("1*D^1"),
                                   parse_frac_poly("1*D^1"));
    const FrequencyResponse fr1 = bode(first, 1e-2, 1e2, 25);
    CHECK(fit_order(fr1, 1e-2, 1e2) == doctest::Approx(1.0).epsilon(1e-9));

    const auto half = derive_tree(parse_frac_poly("1*D^1"),
                                  parse_frac_poly("1"));
    const FrequencyResponse fr2 = bode(half, 1e-2, 1e2, 25);
    CHECK(fit_order(fr2, 1e-2, 1e2) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("fit_order reads the asymptotic slopes of the RLC tree") {
    const auto eq = derive_equation(rlc_tree());
    const FrequencyResponse fr = bode(eq, 1e-6, 1e6, 49);
    CHECK(std::abs(fit_order(fr, 1e4, 1e6) - 1.0) <= 0.01);
    CHECK(std::abs(fit_order(fr, 1e-6, 1e-4) + 1.0) <= 0.01);
}

TEST_CASE("fit_order guards its sample window") {
    const auto eq = derive_equation(rlc_tree());
    const FrequencyResponse fr = bode(eq, 1.0, 100.0, 9);
    CHECK_THROWS_AS(fit_order(fr, 2.0, 3.0), InsufficientSamples);

    const FrequencyResponse flagged = bode(no_passive_branch(), 1.0, 100.0, 9);
    CHECK_THROWS_AS(fit_order(flagged, 1.0, 100.0), BranchFailure);
}

TEST_CASE("truncation error decays monotonically on the passive ladder") {
    const auto spec = spring_damper_ladder();
    const cd s{0.0, 1.0};
    const cd zstar = fixed_point(spec, s, 1e-13, 1000000).value;
    const double slack = 1e-14 * std::max(1.0, std::abs(zstar));
    std::vector<double> errs;
    for (int depth = 1; depth <= 40; ++depth) {
        errs.push_back(std::abs(truncated_response(spec, s, depth) - zstar));
    }
    for (std::size_t i = 1; i < errs.size(); ++i) {
        CHECK(errs[i] <= errs[i - 1] + slack);
    }
    CHECK(errs.back() <= 1e-8);

    // An open termination converges to the same limit.
    const cd open40 =
        truncated_response(spec, s, 40, Termination::open());
    CHECK(close(open40, zstar, 1e-8));
}
