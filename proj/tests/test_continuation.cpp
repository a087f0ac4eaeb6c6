#include "doctest.h"

#include "qd/continuation.hpp"
#include "qd/elliptic.hpp"

using namespace qd;

TEST_CASE("G evaluation") {
    double a = 0.5;
    CHECK(std::abs(eval_G(cplx(1.0), a) - (1.0 + a) * (1.0 + a)) < 1e-15);
    CHECK(std::abs(eval_G(cplx(-a), a)) < 1e-15);
    CHECK(std::abs(eval_G(cplx(-1.0 / a), a)) < 1e-15);
    CHECK_THROWS_AS(eval_G(cplx(0.0), a), std::domain_error);
}

TEST_CASE("F: dual contours and symmetry") {
    double a = 0.3;
    cplx w(0.5, 0.0);
    CHECK(std::abs(eval_F(w, a) - eval_F_circle(w, a)) < 1e-9);
    for (cplx u : {cplx(0.3, 0.4), cplx(-0.5, 0.2), cplx(2.0, 1.0)})
        CHECK(std::abs(eval_F(std::conj(u), a) - std::conj(eval_F(u, a))) < 1e-12);
    // the pre-deformation contour representation holds inside the unit disk
    for (cplx u : {cplx(0.3, 0.4), cplx(-0.5, 0.2), cplx(0.1, -0.8)})
        CHECK(std::abs(eval_F(u, a) - eval_F_circle(u, a)) < 1e-9);
    CHECK_THROWS_AS(eval_F(cplx(-5.0, 0.0), a), std::domain_error);
}

TEST_CASE("xi-form agrees with F") {
    for (double a : {0.3, 0.6}) {
        cplx pts[10] = {cplx(0.5),          cplx(0.3, 0.4),  cplx(-0.5, 0.2),
                        cplx(-2.0, 0.5),    cplx(-8.0, 2.0), cplx(0.1, -0.9),
                        cplx(-1.0 / a, 1.0), cplx(5.0, 0.0),  cplx(-0.9, -0.1),
                        cplx(0.0, 3.0)};
        for (auto w : pts) CHECK(std::abs(xi_form(w, a) - eval_F(w, a)) < 1e-8);
        // C0 cancels in differences
        cplx d1 = xi_form(pts[0], a) - xi_form(pts[1], a);
        cplx d2 = eval_F(pts[0], a) - eval_F(pts[1], a);
        CHECK(std::abs(d1 - d2) < 1e-9);
    }
}

TEST_CASE("decomposition identity f = A0 + A1 w + C (w^2 - 1) F(w)") {
    for (double a : {0.1, 0.3, 0.5}) {
        MapParams p(a, 1.0);
        auto grid = laurent_coeffs(p, 4096);
        auto [A0, A1] = decomposition_constants(p);
        double maxerr = 0.0;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                cplx w(-0.6 + 0.3 * i, -0.6 + 0.3 * j);
                cplx lhs = eval_f(w, p, grid);
                cplx rhs = A0 + A1 * w + p.C * (w * w - 1.0) * eval_F(w, a);
                maxerr = std::max(maxerr, std::abs(lhs - rhs));
            }
        }
        CHECK(maxerr < 1e-8);
    }
}

TEST_CASE("Sokhotski-Plemelj jump across the cut") {
    for (double a : {0.3, 0.5, 0.8}) {
        for (double off : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            double x = -1.0 / a - off;
            // cut branch of the root: principal sqrt of the negative real
            // value (signed +0 imaginary part)
            cplx expect = -2.0 * std::sqrt(cplx(eval_G(cplx(x, 0.0), a).real(), 0.0));
            CHECK(std::abs(jump(x, a) - expect) < 1e-6);
        }
    }
    CHECK_THROWS_AS(jump(-1.0, 0.5), std::domain_error);
}

TEST_CASE("monodromy: trivial loop and ramification 2") {
    double a = 0.5;
    cplx w0(0.5, 0.3);
    std::vector<cplx> trivial{w0, w0 + cplx(0.1, 0.1), w0 + cplx(0.2, 0.0), w0};
    auto [st, val] = continue_along(trivial, SheetState{}, a);
    CHECK(st.m == 0);
    CHECK(st.s == 1);
    CHECK(std::abs(val - eval_F(w0, a)) < 1e-12);

    auto g1 = loop_gamma1(w0, a);
    auto twice = concat_loops({g1, g1});
    auto [st2, val2] = continue_along(twice, SheetState{}, a);
    CHECK(st2.m == 0);
    CHECK(st2.s == 1);
    CHECK(std::abs(val2 - eval_F(w0, a)) < 1e-12);
}

TEST_CASE("monodromy ladder: gamma1 (gamma2 gamma1)^k") {
    double a = 0.5;
    cplx w0(0.5, 0.3);
    cplx sG = sqrtG_principal(w0, a);
    cplx offset0;
    for (int k = 0; k <= 3; ++k) {
        std::vector<std::vector<cplx>> loops{loop_gamma1(w0, a)};
        for (int i = 0; i < k; ++i) {
            loops.push_back(loop_gamma2(w0, a));
            loops.push_back(loop_gamma1(w0, a));
        }
        auto [st, val] = continue_along(concat_loops(loops), SheetState{}, a);
        cplx offset = val - eval_F(w0, a);
        CHECK(st.m == k + 1);
        CHECK(st.s == -1);
        // offset = 2 (k+1) sqrt(G) on the continuation branch (-principal)
        CHECK(std::abs(offset - 2.0 * double(k + 1) * (-sG)) < 1e-6);
        if (k == 0)
            offset0 = offset;
        else
            CHECK(std::abs(offset - double(k + 1) * offset0) < 1e-6);
    }
    CHECK(std::abs(std::abs(offset0) - 2.0 * std::abs(sG)) < 1e-6);
}

TEST_CASE("elliptic cross-checks") {
    CHECK(carlson_pi(0.0, 0.0) == doctest::Approx(pi / 2.0).epsilon(1e-14));
    for (double m : {0.1, 0.5, 0.9})
        CHECK(carlson_pi(0.0, m) == doctest::Approx(agm_K(m)).epsilon(1e-12));
    for (double n : {-1.0, 0.2, 0.8})
        CHECK(carlson_pi(n, 0.0) ==
              doctest::Approx(pi / (2.0 * std::sqrt(1.0 - n))).epsilon(1e-12));
    CHECK_THROWS_AS(carlson_pi(1.5, 0.2), std::domain_error);
    CHECK_THROWS_AS(carlson_pi(0.2, 1.0), std::domain_error);
}
