#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohrlab/extremals.hpp"
#include "bohrlab/multidim.hpp"
#include "bohrlab/sampler.hpp"

using namespace bohrlab;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

MultiSeries random_multi(Rng& rng, int nvars, int dim, int cap) {
    MultiSeries f(nvars, dim, cap);
    // fill every multi-index up to the cap with modest random matrices
    std::vector<int> alpha(static_cast<std::size_t>(nvars), 0);
    auto fill = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            for (int c = 0; c <= remaining; ++c) {
                alpha[static_cast<std::size_t>(pos)] = c;
                Eigen::MatrixXcd m(dim, dim);
                for (int i = 0; i < dim; ++i) {
                    for (int j = 0; j < dim; ++j) {
                        m(i, j) = rng.unit_disk(1.0);
                    }
                }
                f.set_coeff(MultiIndex{alpha}, ComplexMatrix(std::move(m)));
            }
            alpha[static_cast<std::size_t>(pos)] = 0;
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            alpha[static_cast<std::size_t>(pos)] = c;
            self(self, pos + 1, remaining - c);
        }
        alpha[static_cast<std::size_t>(pos)] = 0;
    };
    fill(fill, 0, cap);
    return f;
}

std::vector<Complex> random_direction(Rng& rng, int nvars) {
    std::vector<Complex> a(static_cast<std::size_t>(nvars));
    for (Complex& c : a) {
        c = rng.unit_disk(1.0);
        if (std::abs(c) < 0.05) {
            c = Complex{0.1, 0.1};
        }
    }
    return a;
}

}  // namespace

TEST_CASE("gauge") {
    CircularDomain poly{DomainKind::polydisk, 2};
    CircularDomain ball{DomainKind::euclidean_ball, 2};
    std::vector<Complex> z{Complex{0.3, 0.4}, Complex{0.0, 0.2}};
    CHECK(poly.gauge(z) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ball.gauge(z) == doctest::Approx(std::sqrt(0.25 + 0.04)).epsilon(1e-15));

    // exact positive homogeneity
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> w{rng.unit_disk(1.0), rng.unit_disk(1.0)};
        double lambda = rng.uniform(0.1, 2.0);
        std::vector<Complex> lw{lambda * w[0], lambda * w[1]};
        CHECK(poly.gauge(lw) == doctest::Approx(lambda * poly.gauge(w)).epsilon(1e-14));
        CHECK(ball.gauge(lw) == doctest::Approx(lambda * ball.gauge(w)).epsilon(1e-14));
    }
}

TEST_CASE("graded lex ordering and enumeration budget") {
    GradedLexLess less;
    CHECK(less(MultiIndex{{0, 0}}, MultiIndex{{0, 1}}));
    CHECK(less(MultiIndex{{0, 2}}, MultiIndex{{1, 2}}));
    CHECK(less(MultiIndex{{1, 1}}, MultiIndex{{2, 0}}));
    CHECK_FALSE(less(MultiIndex{{2, 0}}, MultiIndex{{1, 1}}));

    CHECK(multi_index_count(2, 48) == doctest::Approx(1225.0));
    CHECK_THROWS_AS(MultiSeries(6, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(MultiSeries(7, 1, 4), std::invalid_argument);
}

TEST_CASE("homogeneous parts") {
    Rng rng(32);
    MultiSeries f = random_multi(rng, 2, 2, 5);
    std::vector<Complex> z{Complex{0.4, 0.1}, Complex{-0.2, 0.3}};

    // k = 0 recovers the constant coefficient at any point
    MultiIndex origin{{0, 0}};
    CHECK(max_abs_diff(homogeneous_part(f, 0, z), f.terms().at(origin)) == 0.0);

    // single-term series: P_2 at z is the monomial value times the matrix
    MultiSeries g(2, 1, 4);
    g.set_coeff(MultiIndex{{1, 1}}, scalar_embed(2.0, 1));
    std::vector<Complex> half{Complex{0.5, 0.0}, Complex{0.5, 0.0}};
    ComplexMatrix p2 = homogeneous_part(g, 2, half);
    CHECK(std::abs(p2(0, 0) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(operator_norm(homogeneous_part(g, 7, half)) == 0.0);

    // homogeneity P_k(t z) = t^k P_k(z)
    for (int trial = 0; trial < 20; ++trial) {
        double t = rng.uniform(0.2, 1.5);
        std::vector<Complex> tz{t * z[0], t * z[1]};
        for (int k = 0; k <= 5; ++k) {
            ComplexMatrix lhs = homogeneous_part(f, k, tz);
            ComplexMatrix rhs = Complex{std::pow(t, k), 0.0} * homogeneous_part(f, k, z);
            CHECK(max_abs_diff(lhs, rhs) < 1e-13);
        }
    }
}

TEST_CASE("slice consistency") {
    Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        int nvars = 2 + static_cast<int>(rng.uniform() * 2.0);
        int dim = 1 + static_cast<int>(rng.uniform() * 2.0);
        MultiSeries f = random_multi(rng, nvars, dim, 6);
        std::vector<Complex> a = random_direction(rng, nvars);
        Complex t = rng.unit_disk(0.9);

        std::vector<Complex> at(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            at[j] = a[j] * t;
        }
        MatrixSeries1D sl = slice(f, a);
        CHECK(std::abs(homogeneous_majorant(f, at) - sl.majorant(std::abs(t))) < 1e-12);
        CHECK(max_abs_diff(eval_multi(f, at), sl.eval(t)) < 1e-12);
    }

    MultiSeries g(2, 1, 2);
    g.set_coeff(MultiIndex{{1, 0}}, scalar_embed(1.0, 1));
    std::vector<Complex> e1{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    MatrixSeries1D sl = slice(g, e1);
    CHECK(sl.coeff_norm(0) == 0.0);
    CHECK(std::abs(sl.coeff(1)(0, 0) - Complex{1.0, 0.0}) < 1e-15);

    std::vector<Complex> zero{Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    CHECK_THROWS_AS(slice(g, zero), std::invalid_argument);
}

TEST_CASE("lift_via_linear") {
    CircularDomain poly{DomainKind::polydisk, 2};

    // identity generator along e_1 gives z_1 I
    std::vector<ComplexMatrix> idc{ComplexMatrix::zero(1), ComplexMatrix::identity(1)};
    MatrixSeries1D ident(std::move(idc));
    std::vector<Complex> e1{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    MultiSeries lifted = lift_via_linear(ident, e1, poly, 8);
    MultiIndex z1{{1, 0}};
    CHECK(std::abs(lifted.terms().at(z1)(0, 0) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(lifted.terms().count(MultiIndex{{0, 1}}) == 0);

    // psi_b lift stays in the unit ball on the polydisk
    std::vector<Complex> a{Complex{0.5, 0.0}, Complex{0.5, 0.0}};
    MultiSeries f = lift_via_linear(mobius_series(0.7, 2, 48), a, poly, 48);
    Rng rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> z{std::polar(0.999, 2.0 * std::numbers::pi * rng.uniform()),
                               std::polar(0.999, 2.0 * std::numbers::pi * rng.uniform())};
        CHECK(operator_norm(eval_multi(f, z)) <= 1.0 + 1e-6);
    }

    // slicing the lift along its own direction recovers h at l_a(a)
    MatrixSeries1D h = mobius_series(0.4, 1, 12);
    MultiSeries lift_h = lift_via_linear(h, a, poly, 12);
    MatrixSeries1D sl = slice(lift_h, a);
    double la = 0.5;  // l_a(a) = 0.25 + 0.25
    for (int k = 0; k <= 12; ++k) {
        Complex expect = h.coeff(k)(0, 0) * std::pow(la, k);
        CHECK(std::abs(sl.coeff(k)(0, 0) - expect) < 1e-13);
    }

    std::vector<Complex> bad{Complex{0.9, 0.0}, Complex{0.9, 0.0}};
    CHECK_THROWS_AS(lift_via_linear(h, bad, poly, 12), std::invalid_argument);

    CircularDomain ball{DomainKind::euclidean_ball, 2};
    std::vector<Complex> diag{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}};
    CHECK_NOTHROW(lift_via_linear(h, diag, ball, 12));
    CHECK_THROWS_AS(lift_via_linear(h, bad, ball, 12), std::invalid_argument);
}

TEST_CASE("check_multidim pass/fail pattern for lifted extremals") {
    for (DomainKind kind : {DomainKind::polydisk, DomainKind::euclidean_ball}) {
        CircularDomain domain{kind, 2};
        std::vector<Complex> a;
        if (kind == DomainKind::polydisk) {
            a = {Complex{0.5, 0.0}, Complex{0.5, 0.0}};
        } else {
            a = {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}};
        }
        std::vector<std::vector<Complex>> extremal{{Complex{1.0, 0.0}, Complex{1.0, 0.0}},
                                                   {Complex{-1.0, 0.0}, Complex{-1.0, 0.0}}};
        if (kind == DomainKind::euclidean_ball) {
            extremal = {{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}},
                        {Complex{-kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}}};
        }

        MultiSeries lifted = lift_via_linear(mobius_series(0.999, 2, 48), a, domain, 48);
        TheoremParams params;
        InequalityVerdict inside =
            check_multidim(lifted, domain, TheoremId::t21, params, 1.0 / 3.0, 64, 7, extremal);
        CHECK(inside.margin >= -1e-8);
        InequalityVerdict outside =
            check_multidim(lifted, domain, TheoremId::t21, params, 0.34, 64, 7, extremal);
        CHECK(outside.margin < 0.0);

        MultiSeries zc = lift_via_linear(zero_constant_extremal(2, 48), a, domain, 48);
        InequalityVerdict at_radius =
            check_multidim(zc, domain, TheoremId::t22, params, kInvSqrt2, 64, 7, extremal);
        CHECK(at_radius.margin >= -1e-8);
        InequalityVerdict beyond =
            check_multidim(zc, domain, TheoremId::t22, params, kInvSqrt2 + 0.02, 64, 7, extremal);
        CHECK(beyond.margin < 0.0);
    }
}

TEST_CASE("check_multidim t23/t24/t25 hold for certified lifts") {
    CircularDomain poly{DomainKind::polydisk, 3};
    std::vector<Complex> a{Complex{0.4, 0.0}, Complex{0.3, 0.0}, Complex{0.3, 0.0}};
    SamplerConfig cfg;
    cfg.degree = 32;
    Rng rng(35);
    MatrixSeries1D h = sample_schur_scalar(cfg, rng);
    MultiSeries lifted = lift_via_linear(h, a, poly, 32);

    TheoremParams t23;
    t23.n_start = 1;
    t23.p = 1.0;
    double r11 = 0.2360679774997897;
    CHECK(check_multidim(lifted, poly, TheoremId::t23, t23, r11, 32, 11).margin >= -1e-8);

    TheoremParams t24;
    CHECK(check_multidim(lifted, poly, TheoremId::t24, t24, 1.0 / 3.0, 32, 11).margin >= -1e-8);

    TheoremParams t25;
    t25.g = GPolynomial({8.0 / 9.0});
    CHECK(check_multidim(lifted, poly, TheoremId::t25, t25, 1.0 / 3.0, 32, 11).margin >= -1e-8);

    TheoremParams bad_g;
    bad_g.g = GPolynomial({0.9});
    CHECK_THROWS_AS(check_multidim(lifted, poly, TheoremId::t25, bad_g, 0.3, 8, 11), InadmissibleG);

    // hypothesis screening
    CHECK_THROWS_AS(check_multidim(lifted, poly, TheoremId::t22, TheoremParams{}, 0.5, 8, 11),
                    std::invalid_argument);
}

TEST_CASE("check_multidim t23/t24/t25 fail beyond the radius for the lifted extremal") {
    CircularDomain poly{DomainKind::polydisk, 2};
    std::vector<Complex> a{Complex{0.5, 0.0}, Complex{0.5, 0.0}};
    std::vector<std::vector<Complex>> extremal{{Complex{1.0, 0.0}, Complex{1.0, 0.0}},
                                               {Complex{-1.0, 0.0}, Complex{-1.0, 0.0}}};
    MultiSeries lifted = lift_via_linear(mobius_series(0.9999, 2, 48), a, poly, 48);

    TheoremParams t23;
    double r11 = 0.2360679774997897;
    CHECK(check_multidim(lifted, poly, TheoremId::t23, t23, r11 + 0.01, 32, 11, extremal).margin <
          0.0);

    TheoremParams t24;
    CHECK(check_multidim(lifted, poly, TheoremId::t24, t24, 0.35, 32, 11, extremal).margin < 0.0);

    TheoremParams t25;
    t25.g = GPolynomial({8.0 / 9.0});
    CHECK(check_multidim(lifted, poly, TheoremId::t25, t25, 0.35, 32, 11, extremal).margin < 0.0);
}

TEST_CASE("multi-series manifest round trip") {
    Rng rng(36);
    MultiSeries f = random_multi(rng, 2, 2, 3);
    std::string text = multi_series_to_json(f);
    MultiSeries g = multi_series_from_json(text);
    CHECK(g.nvars() == f.nvars());
    CHECK(g.dim() == f.dim());
    REQUIRE(g.terms().size() == f.terms().size());
    for (const auto& [alpha, mat] : f.terms()) {
        CHECK(max_abs_diff(g.terms().at(alpha), mat) == 0.0);
    }
}
