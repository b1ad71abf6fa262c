#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "shw/error.hpp"
#include "shw/trflow.hpp"

using namespace shw;
using namespace shw::trflow;

TEST_CASE("single kernel block: conjugation has negative determinant") {
    TRFamily f = make_block_family({BlockTag::kernel}, 1.0, 0);
    // A(t) z = t conj(z); as a real 2x2 matrix det = -t^2
    CHECK(f.at(2.0).determinant() == doctest::Approx(-4.0));
    SFResult det = sf_by_determinant(f, 1.0);
    SFResult ker = sf_by_kernel(f);
    CHECK(det.sign == -1);
    CHECK(ker.sign == -1);
    CHECK(ker.kernel_dim_complex == 1);
}

TEST_CASE("single invertible block stays positive") {
    TRFamily f = make_block_family({BlockTag::invertible}, 1.0, 0);
    for (double t : {-2.0, -0.5, 0.0, 0.7, 3.0}) {
        double det = f.at(t).determinant();
        CHECK(det > 0);
        CHECK(det == doctest::Approx(std::pow(1.0 + t * t, 2)));
    }
    CHECK(sf_by_determinant(f, 1.0).sign == +1);
    SFResult ker = sf_by_kernel(f);
    CHECK(ker.sign == +1);
    CHECK(ker.kernel_dim_complex == 0);
}

TEST_CASE("kernel dimension counts kernel blocks") {
    TRFamily f =
        make_block_family({BlockTag::kernel, BlockTag::kernel, BlockTag::invertible}, 1.0, 0);
    SFResult ker = sf_by_kernel(f);
    CHECK(ker.kernel_dim_complex == 2);
    CHECK(ker.sign == +1);
    CHECK(sf_by_determinant(f, 1.0).sign == +1);
}

TEST_CASE("sign is the parity of the kernel block count") {
    for (int kernels = 0; kernels <= 4; ++kernels) {
        std::vector<BlockTag> spec(kernels, BlockTag::kernel);
        spec.push_back(BlockTag::invertible);
        TRFamily f = make_block_family(spec, 1.0, 0);
        int expected = kernels % 2 == 0 ? +1 : -1;
        CHECK(sf_by_determinant(f, 1.0).sign == expected);
        CHECK(sf_by_kernel(f).sign == expected);
    }
}

TEST_CASE("structure relations hold exactly for plain blocks") {
    TRFamily f = make_block_family({BlockTag::kernel, BlockTag::invertible}, 2.0, 0);
    Eigen::MatrixXd jj = f.J * f.J + Eigen::MatrixXd::Identity(2 * f.n, 2 * f.n);
    CHECK(jj.cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.J * f.D - f.D * f.J).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.J * f.R + f.R * f.J).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.D.transpose() * f.R + f.R.transpose() * f.D).cwiseAbs().maxCoeff() == 0.0);
    Eigen::MatrixXd gram = f.R.transpose() * f.R;
    CHECK((gram - 4.0 * Eigen::MatrixXd::Identity(2 * f.n, 2 * f.n)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("orthogonal conjugation preserves everything to rounding") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        TRFamily f = make_block_family(
            {BlockTag::kernel, BlockTag::invertible, BlockTag::kernel}, 1.5, seed, true);
        CHECK(tr_invariance_residual(f) <= 1e-12);
        CHECK(sf_by_determinant(f, 1.0).sign == +1);  // two kernel blocks
        CHECK(sf_by_kernel(f).sign == +1);
        CHECK(sf_by_kernel(f).kernel_dim_complex == 2);
    }
}

TEST_CASE("vanishing identity and lower bound") {
    TRFamily f = make_block_family({BlockTag::kernel, BlockTag::invertible}, 1.25, 9, true);
    std::vector<double> grid{-2.0, -1.0, -0.25, 0.0, 0.5, 1.0, 2.0};
    VanishingReport report = vanishing_check(f, grid);
    CHECK(report.max_identity_residual <= 1e-10);
    CHECK(report.bound_holds);
    CHECK(report.bound_constant == doctest::Approx(1.25));
    // t = 0 with a kernel block present: singular value 0 is reported
    CHECK(report.min_singular_value[3] <= 1e-12);

    TRFamily plain = make_block_family({BlockTag::invertible}, 1.0, 0);
    plain.geometric = false;
    CHECK_THROWS_AS(vanishing_check(plain, grid), std::invalid_argument);
}

TEST_CASE("direct sums multiply signs") {
    TRFamily a = make_block_family({BlockTag::kernel}, 1.0, 3, true);
    TRFamily b = make_block_family({BlockTag::kernel, BlockTag::invertible}, 1.0, 4, true);
    TRFamily sum = direct_sum(a, b);
    CHECK(sf_by_determinant(sum, 1.0).sign ==
          sf_by_determinant(a, 1.0).sign * sf_by_determinant(b, 1.0).sign);
    CHECK(sf_by_kernel(sum).sign == sf_by_kernel(a).sign * sf_by_kernel(b).sign);
    CHECK(sum.geometric);  // same scale on both sides
}

TEST_CASE("deformation of the R scale never changes the flow") {
    std::vector<BlockTag> spec{BlockTag::kernel, BlockTag::kernel, BlockTag::kernel};
    for (int step = 0; step <= 8; ++step) {
        double scale = 0.5 + 1.75 * step / 8.0;
        TRFamily f = make_block_family(spec, scale, 11, true);
        CHECK(sf_by_determinant(f, 1.0).sign == -1);
        CHECK(sf_by_kernel(f).sign == -1);
    }
}

TEST_CASE("determinant method refuses near-singular evaluation") {
    TRFamily f = make_block_family({BlockTag::kernel}, 1.0, 0);
    try {
        sf_by_determinant(f, 1e-10);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::singular_at_evaluation);
    }
}

TEST_CASE("kernel method hypothesis failures") {
    // R vanishes on the kernel: restriction cannot be an isomorphism
    TRFamily f;
    f.n = 1;
    f.J = Eigen::MatrixXd::Zero(2, 2);
    f.J(0, 1) = -1;
    f.J(1, 0) = 1;
    f.D = Eigen::MatrixXd::Zero(2, 2);
    f.R = Eigen::MatrixXd::Zero(2, 2);
    try {
        sf_by_kernel(f);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::hypothesis_failed);
    }

    // an odd-dimensional real kernel violates the complex-structure invariant
    TRFamily g = f;
    g.D(0, 0) = 1.0;  // not complex-linear; kernel is one real dimension
    g.R = Eigen::MatrixXd::Identity(2, 2);
    try {
        sf_by_kernel(g);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::odd_real_kernel);
    }

    // no clean spectral split around the threshold
    TRFamily h = f;
    h.D = Eigen::MatrixXd::Identity(2, 2) * 1e-8;
    CHECK_THROWS_AS(sf_by_kernel(h), Error);
}

TEST_CASE("block spec parsing") {
    auto spec = parse_block_spec("kernel, invertible,kernel");
    REQUIRE(spec.size() == 3);
    CHECK(spec[0] == BlockTag::kernel);
    CHECK(spec[1] == BlockTag::invertible);
    CHECK(spec[2] == BlockTag::kernel);
    CHECK_THROWS(parse_block_spec("bogus"));
    CHECK_THROWS(parse_block_spec(""));
    CHECK_THROWS(make_block_family({BlockTag::kernel}, -1.0, 0));
}
