#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohrlab/inequalities.hpp"
#include "bohrlab/sampler.hpp"

using namespace bohrlab;

TEST_CASE("rng streams are deterministic") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 32; ++i) {
        CHECK(a.uniform() == b.uniform());
    }
    CHECK(Rng::stream_seed(1, 0) != Rng::stream_seed(1, 1));
    CHECK(Rng::stream_seed(1, 7) == Rng::stream_seed(1, 7));
}

TEST_CASE("schur sampler base cases") {
    SamplerConfig cfg;
    cfg.degree = 16;
    cfg.depth = 1;

    // depth-1 samples are the constant gamma itself
    Rng rng(5);
    MatrixSeries1D f = sample_schur_scalar(cfg, rng);
    CHECK(f.dim() == 1);
    for (int k = 1; k <= f.degree(); ++k) {
        CHECK(f.coeff_norm(k) == 0.0);
    }
    CHECK(f.coeff_norm(0) <= 0.95);
}

TEST_CASE("schur samples are certified members of the unit ball") {
    SamplerConfig cfg;
    cfg.degree = 32;
    cfg.depth = 4;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng(Rng::stream_seed(77, i));
        MatrixSeries1D f = sample_schur_scalar(cfg, rng);
        // coefficients of a Schur function obey |c_n| <= 1 - |c_0|^2
        double c0 = f.coeff_norm(0);
        for (int k = 1; k <= f.degree(); ++k) {
            CHECK(f.coeff_norm(k) <= 1.0 - c0 * c0 + 1e-12);
            CHECK(f.coeff_norm(k) <= 1.0 + 1e-12);
        }
        // certification soundness on a 4x finer grid
        double sup = 0.0;
        int fine = 4 * cfg.resolved_grid();
        for (int j = 0; j < fine; ++j) {
            double theta = 2.0 * std::numbers::pi * j / fine;
            sup = std::max(sup, operator_norm(f.eval(std::polar(1.0, theta))));
        }
        CHECK(sup <= 1.0 + 1e-9);
    }
}

TEST_CASE("matrix sampler yields certified scalar-head series") {
    SamplerConfig cfg;
    cfg.dim = 3;
    cfg.degree = 24;
    Rng rng(Rng::stream_seed(123, 9));
    MatrixSeries1D f = sample_matrix_contractive(cfg, rng);
    CHECK(f.dim() == 3);
    CHECK(f.degree() == 24);
    CHECK(f.scalar_head().present);
    CHECK(std::abs(f.scalar_head().a0) < 1.0);
    CHECK_FALSE(f.truncated_tail());

    double sup = 0.0;
    int fine = 4 * cfg.resolved_grid();
    for (int j = 0; j < fine; ++j) {
        double theta = 2.0 * std::numbers::pi * j / fine;
        sup = std::max(sup, operator_norm(f.eval(std::polar(1.0, theta))));
    }
    CHECK(sup <= 1.0 + 1e-9);

    // coefficient bound and the plain inequality hold for certified members
    CHECK(schwarz_pick_margin(f) >= -1e-8);
    CHECK(check_bohr(f, 1.0 / 3.0).margin >= -1e-8);
}

TEST_CASE("matrix sampler, degree zero") {
    SamplerConfig cfg;
    cfg.dim = 2;
    cfg.degree = 0;
    Rng rng(3);
    MatrixSeries1D f = sample_matrix_contractive(cfg, rng);
    CHECK(f.degree() == 0);
    CHECK(f.scalar_head().present);
    CHECK(operator_norm(f.coeff(0)) < 1.0);
}

TEST_CASE("identical seeds reproduce identical samples") {
    SamplerConfig cfg;
    cfg.dim = 2;
    cfg.degree = 12;
    Rng r1(Rng::stream_seed(5, 5));
    Rng r2(Rng::stream_seed(5, 5));
    MatrixSeries1D f1 = sample_matrix_contractive(cfg, r1);
    MatrixSeries1D f2 = sample_matrix_contractive(cfg, r2);
    for (int k = 0; k <= f1.degree(); ++k) {
        CHECK(max_abs_diff(f1.coeff(k), f2.coeff(k)) == 0.0);
    }
}

TEST_CASE("adversarial witness") {
    MatrixSeries1D w = adversarial_diag_witness();
    CHECK(w.dim() == 2);
    CHECK(w.degree() == 2);
    CHECK(operator_norm(w.coeff(0)) == 0.0);
    CHECK(operator_norm(w.coeff(1)) == 1.0);
    CHECK(operator_norm(w.coeff(2)) == 1.0);
    double sup = 0.0;
    for (int j = 0; j < 64; ++j) {
        double theta = 2.0 * std::numbers::pi * j / 64;
        sup = std::max(sup, operator_norm(w.eval(std::polar(1.0, theta))));
    }
    CHECK(sup == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bernstein grid certification rejects coarse grids") {
    SamplerConfig cfg;
    cfg.degree = 200;
    cfg.grid = 300;  // below pi * degree
    Rng rng(1);
    CHECK_THROWS_AS(sample_matrix_contractive(cfg, rng), std::invalid_argument);
}

TEST_CASE("manifest round trip") {
    SamplerConfig cfg;
    cfg.seed = 314;
    cfg.dim = 2;
    cfg.degree = 8;
    std::vector<MatrixSeries1D> samples;
    for (std::uint64_t i = 0; i < 5; ++i) {
        Rng rng(Rng::stream_seed(cfg.seed, i));
        samples.push_back(sample_matrix_contractive(cfg, rng));
    }
    std::string text = sample_set_to_json(cfg, samples);
    SamplerConfig parsed;
    std::vector<MatrixSeries1D> loaded = sample_set_from_json(text, &parsed);
    CHECK(parsed.seed == cfg.seed);
    CHECK(parsed.dim == cfg.dim);
    REQUIRE(loaded.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        REQUIRE(loaded[i].degree() == samples[i].degree());
        for (int k = 0; k <= samples[i].degree(); ++k) {
            CHECK(max_abs_diff(loaded[i].coeff(k), samples[i].coeff(k)) == 0.0);
        }
    }
}
