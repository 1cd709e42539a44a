#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohrlab/extremals.hpp"
#include "oracles.hpp"

using namespace bohrlab;

TEST_CASE("mobius coefficient law") {
    MatrixSeries1D zero = mobius_series(0.0, 2, 8);
    CHECK(operator_norm(zero.coeff(0)) == 0.0);
    CHECK(max_abs_diff(zero.coeff(1), Complex{-1.0, 0.0} * ComplexMatrix::identity(2)) == 0.0);
    for (int k = 2; k <= 8; ++k) {
        CHECK(operator_norm(zero.coeff(k)) == 0.0);
    }

    MatrixSeries1D half = mobius_series(0.5, 3, 8);
    CHECK(max_abs_diff(half.coeff(1), scalar_embed(-0.75, 3)) < 1e-15);
    CHECK(max_abs_diff(half.coeff(2), scalar_embed(-0.375, 3)) < 1e-15);

    CHECK_THROWS_AS(mobius_series(1.0, 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(mobius_series(-0.1, 2, 8), std::invalid_argument);
}

TEST_CASE("mobius series stays in the unit ball on the disk") {
    for (double a : {0.0, 0.3, 0.9}) {
        MatrixSeries1D psi = mobius_series(a, 2, 96);
        double sup = 0.0;
        for (int j = 0; j < 256; ++j) {
            double theta = 2.0 * std::numbers::pi * j / 256;
            sup = std::max(sup, operator_norm(psi.eval(std::polar(0.999, theta))));
        }
        CHECK(sup <= 1.0 + 1e-6);
    }
}

TEST_CASE("mobius closed-form majorant") {
    CHECK(mobius_majorant_closed(0.0, 0.37) == doctest::Approx(0.37).epsilon(1e-15));
    CHECK(mobius_majorant_closed(0.999, 0.34) > 1.0);
    CHECK(mobius_majorant_closed(0.999, 0.34) == doctest::Approx(1.00002925766).epsilon(1e-9));
    CHECK(mobius_majorant_closed(0.999, 0.33) <= 1.0);

    // truncated series agrees with the closed form up to the geometric tail
    for (double a : {0.2, 0.5, 0.8}) {
        MatrixSeries1D psi = mobius_series(a, 1, 128);
        for (double r : {0.1, 1.0 / 3.0, 0.6}) {
            double series = psi.majorant(r);
            double closed = mobius_majorant_closed(a, r);
            CHECK(series == doctest::Approx(closed).epsilon(1e-9));
            CHECK(series <= closed + 1e-12);
            CHECK(closed - series <= std::pow(r, 129) / (1.0 - r) + 1e-12);
        }
    }
}

TEST_CASE("majorant exceeds 1 exactly beyond 1/(1+2a)") {
    for (double a = 0.05; a < 1.0; a += 0.05) {
        double threshold = 1.0 / (1.0 + 2.0 * a);
        for (double r = 0.05; r < 0.95; r += 0.05) {
            bool above = mobius_majorant_closed(a, r) > 1.0 + 1e-12;
            bool beyond = r > threshold + 1e-12;
            if (std::abs(r - threshold) > 1e-9) {
                CHECK(above == beyond);
            }
        }
    }
}

TEST_CASE("bombieri maximizer") {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    BombieriMax at_cross = bombieri_maximizer(inv_sqrt2);
    CHECK(at_cross.a_star == doctest::Approx(inv_sqrt2).epsilon(1e-12));
    CHECK(at_cross.value == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));

    BombieriMax at_third = bombieri_maximizer(1.0 / 3.0);
    CHECK(at_third.value == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(bombieri_maximizer(0.2), std::invalid_argument);

    // value dominates the family and matches a fine grid maximization
    for (double r : {0.34, 0.5, inv_sqrt2, 0.9, 0.99}) {
        BombieriMax best = bombieri_maximizer(r);
        double grid_max = 0.0;
        for (double a = 0.0; a < 1.0; a += 1e-5) {
            double v = mobius_majorant_closed(a, r);
            CHECK(best.value >= v - 1e-12);
            grid_max = std::max(grid_max, v);
        }
        CHECK(best.value == doctest::Approx(grid_max).epsilon(1e-8));
    }
}

TEST_CASE("zero-constant extremal") {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    MatrixSeries1D h = zero_constant_extremal(2, 64);
    CHECK(operator_norm(h.coeff(0)) == 0.0);
    CHECK(max_abs_diff(h.coeff(1), scalar_embed(inv_sqrt2, 2)) < 1e-15);
    CHECK(max_abs_diff(h.coeff(2), scalar_embed(-0.5, 2)) < 1e-15);
    CHECK(max_abs_diff(h.coeff(3), scalar_embed(-0.5 * inv_sqrt2, 2)) < 1e-15);

    CHECK(h.majorant(inv_sqrt2) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(zero_constant_majorant_closed(0.72) == doctest::Approx(1.03714481973).epsilon(1e-9));
    CHECK(zero_constant_majorant_closed(0.72) > 1.0);
    CHECK(zero_constant_majorant_closed(0.70) < 1.0);

    // truncated majorant below the closed form, gap within the geometric tail
    for (double r : {0.3, 0.6, 0.72}) {
        double series = h.majorant(r);
        double closed = zero_constant_majorant_closed(r);
        CHECK(series <= closed + 1e-12);
        CHECK(closed - series <= std::pow(r, 65) / (1.0 - r) + 1e-12);
    }
}
