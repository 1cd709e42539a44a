// bohrlab: radius tables, verification sweeps, sharpness demonstrations and
// growth-function reports for coefficient-norm inequalities of matrix-valued
// power series on the disk and on polydisk/ball domains.
//
// Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
// 2 = usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohrlab/extremals.hpp"
#include "bohrlab/multidim.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/report.hpp"
#include "bohrlab/sweep.hpp"

namespace {

using namespace bohrlab;

struct CommonOpts {
    std::uint64_t seed = 1;
    int dim = 2;
    int degree = 32;
    int depth = 4;
    int samples = 200;
    int grid = 256;
    double tol = 1e-12;
    std::string format = "csv";
    std::string out;
    bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--dim", opts.dim, "matrix dimension of generated samples (0 = mixed 1,2,4)");
    cmd->add_option("--degree", opts.degree, "series truncation degree");
    cmd->add_option("--depth", opts.depth, "Schur parameter count for scalar samples");
    cmd->add_option("--samples", opts.samples, "sample count");
    cmd->add_option("--grid", opts.grid, "angular grid size");
    cmd->add_option("--tol", opts.tol, "solver tolerance");
    cmd->add_option("--format", opts.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
    cmd->add_flag("--serial", opts.serial, "run sweeps on the serial reference path");
}

ExecutionPolicy policy_of(const CommonOpts& opts) {
    return opts.serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
}

void base_meta(Table& table, const std::string& command, const CommonOpts& opts) {
    table.add_meta("tool_version", std::string(kToolVersion));
    table.add_meta("command", command);
    table.add_meta("rng", std::string(kRngVersion));
    table.add_meta("seed", std::to_string(opts.seed));
    table.add_meta("dim", std::to_string(opts.dim));
    table.add_meta("degree", std::to_string(opts.degree));
    table.add_meta("depth", std::to_string(opts.depth));
    table.add_meta("samples", std::to_string(opts.samples));
    table.add_meta("grid", std::to_string(opts.grid));
    table.add_meta("tol", fmt_double(opts.tol));
}

int emit(const Table& table, const CommonOpts& opts) {
    std::string text = opts.format == "json" ? to_json(table) : to_csv(table);
    if (opts.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output path: " << opts.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

// ---------------------------------------------------------------- radius --

struct RadiusOpts {
    int nmin = 1;
    int nmax = 8;
    double pmin = 0.1;
    double pmax = 1.0;
    double pstep = 0.1;
};

int cmd_radius(const RadiusOpts& r, CommonOpts& common) {
    if (r.nmin < 1 || r.nmax < r.nmin || r.pmin <= 0.0 || r.pmax > 1.0 || r.pmax < r.pmin ||
        r.pstep <= 0.0) {
        std::cerr << "radius: bad N or p range\n";
        return 2;
    }
    Table table;
    base_meta(table, "radius", common);
    table.add_meta("truncation_pad", "0");
    table.columns = {"N", "p", "radius", "residual"};
    for (int n = r.nmin; n <= r.nmax; ++n) {
        for (int i = 0; r.pmin + i * r.pstep <= r.pmax + 1e-12; ++i) {
            double pv = std::min(r.pmin + i * r.pstep, 1.0);
            double root = solve_rnp(RadiusQuery{n, pv, common.tol});
            table.rows.push_back({std::to_string(n), fmt_double(pv), fmt_double(root),
                                  fmt_double(rnp_residual(n, pv, root))});
        }
    }
    return emit(table, common);
}

// ---------------------------------------------------------------- verify --

struct VerifyOpts {
    std::string theorem = "bohr";
    double r = -1.0;      // 1D radius; default = proven radius
    double theta = -1.0;  // multidim homothety; default = proven radius
    int n_start = 1;
    double p = 1.0;
    std::vector<double> gcoeffs;
    std::string domain = "polydisk";
    int nvars = 2;
    int probes = 64;
    int lift_degree = 48;
    std::string save_samples;
    std::string load_samples;
};

bool is_multidim(const std::string& theorem) {
    return theorem == "t21" || theorem == "t22" || theorem == "t23" || theorem == "t24" ||
           theorem == "t25";
}

int verify_onedim(const VerifyOpts& v, CommonOpts& common) {
    CheckSpec spec;
    double proven = 1.0 / 3.0;
    if (v.theorem == "bohr") {
        spec.kind = VerdictKind::bohr;
    } else if (v.theorem == "refined-p") {
        spec.kind = VerdictKind::refined_p;
        spec.n_start = v.n_start;
        spec.p = v.p;
        spec.grid = common.grid;
        proven = solve_rnp(v.n_start, v.p);
    } else if (v.theorem == "refined-quadratic") {
        spec.kind = VerdictKind::refined_quadratic;
    } else if (v.theorem == "refined-g") {
        spec.kind = VerdictKind::refined_g;
        spec.g = GPolynomial(v.gcoeffs.empty() ? std::vector<double>{8.0 / 9.0} : v.gcoeffs);
        if (g_constraint_check(*spec.g) < -1e-14) {
            std::cerr << "inadmissible G: coefficient constraint violated\n";
            return 2;
        }
    } else {
        std::cerr << "unknown theorem id: " << v.theorem << "\n";
        return 2;
    }
    spec.r = v.r >= 0.0 ? v.r : proven;

    SampleSetSpec sset;
    sset.seed = common.seed;
    sset.count = common.samples;
    sset.dims = {common.dim};
    if (common.dim == 0) {
        sset.dims = {1, 2, 4};  // mixed default
    }
    sset.degree = common.degree;
    sset.depth = common.depth;

    std::vector<MatrixSeries1D> samples;
    if (!v.load_samples.empty()) {
        std::ifstream in(v.load_samples, std::ios::binary);
        if (!in) {
            std::cerr << "cannot read sample manifest: " << v.load_samples << "\n";
            return 2;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        samples = sample_set_from_json(text);
    } else {
        samples = make_sample_set(sset, policy_of(common));
    }
    if (!v.save_samples.empty()) {
        SamplerConfig cfg;
        cfg.seed = common.seed;
        cfg.dim = common.dim;
        cfg.degree = common.degree;
        cfg.depth = common.depth;
        std::ofstream outf(v.save_samples, std::ios::binary);
        outf << sample_set_to_json(cfg, samples);
    }

    std::vector<InequalityVerdict> verdicts = sweep_check(spec, samples, policy_of(common));
    SweepSummary summary = summarize(std::span<const InequalityVerdict>(verdicts));

    Table table;
    base_meta(table, "verify", common);
    table.add_meta("theorem", v.theorem);
    table.add_meta("r", fmt_double(spec.r));
    if (spec.kind == VerdictKind::refined_p) {
        table.add_meta("N", std::to_string(spec.n_start));
        table.add_meta("p", fmt_double(spec.p));
    }
    if (spec.kind == VerdictKind::refined_g) {
        std::string cs;
        for (double c : spec.g->coeffs()) {
            if (!cs.empty()) cs += ";";
            cs += fmt_double(c);
        }
        table.add_meta("gcoeffs", cs);
    }
    double max_pad = 0.0;
    for (const auto& vd : verdicts) {
        max_pad = std::max(max_pad, vd.truncation_pad);
    }
    table.add_meta("truncation_pad", fmt_double(max_pad));
    table.add_meta("worst_margin", fmt_double(summary.worst_margin));
    table.add_meta("failures", std::to_string(summary.failures));

    table.columns = {"index", "dim", "degree", "r", "margin", "pad", "witness_re", "witness_im",
                     "pass"};
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& vd = verdicts[i];
        table.rows.push_back({std::to_string(i), std::to_string(samples[i].dim()),
                              std::to_string(samples[i].degree()), fmt_double(vd.r),
                              fmt_double(vd.margin), fmt_double(vd.truncation_pad),
                              fmt_double(vd.witness_z.real()), fmt_double(vd.witness_z.imag()),
                              vd.pass() ? "1" : "0"});
    }
    int rc = emit(table, common);
    if (rc != 0) {
        return rc;
    }
    std::cerr << "verify " << v.theorem << ": samples=" << verdicts.size()
              << " worst_margin=" << fmt_double(summary.worst_margin)
              << " failures=" << summary.failures << "\n";
    return summary.failures == 0 ? 0 : 1;
}

int verify_multidim(const VerifyOpts& v, CommonOpts& common) {
    TheoremId theorem;
    double proven = 1.0 / 3.0;
    if (v.theorem == "t21") {
        theorem = TheoremId::t21;
    } else if (v.theorem == "t22") {
        theorem = TheoremId::t22;
        proven = 1.0 / std::numbers::sqrt2;
    } else if (v.theorem == "t23") {
        theorem = TheoremId::t23;
        proven = solve_rnp(v.n_start, v.p);
    } else if (v.theorem == "t24") {
        theorem = TheoremId::t24;
    } else {
        theorem = TheoremId::t25;
    }
    TheoremParams params;
    params.n_start = v.n_start;
    params.p = v.p;
    if (theorem == TheoremId::t25) {
        params.g = GPolynomial(v.gcoeffs.empty() ? std::vector<double>{8.0 / 9.0} : v.gcoeffs);
        if (g_constraint_check(*params.g) < -1e-14) {
            std::cerr << "inadmissible G: coefficient constraint violated\n";
            return 2;
        }
    }
    CircularDomain domain;
    domain.kind = v.domain == "ball" ? DomainKind::euclidean_ball : DomainKind::polydisk;
    domain.nvars = v.nvars;
    double theta = v.theta >= 0.0 ? v.theta : proven;

    Table table;
    base_meta(table, "verify", common);
    table.add_meta("theorem", v.theorem);
    table.add_meta("domain", v.domain);
    table.add_meta("nvars", std::to_string(v.nvars));
    table.add_meta("theta", fmt_double(theta));
    table.add_meta("probes", std::to_string(v.probes));
    table.add_meta("lift_degree", std::to_string(v.lift_degree));
    table.columns = {"index", "theorem", "theta", "margin", "pad", "pass"};

    SweepSummary summary;
    double max_pad = 0.0;
    for (int i = 0; i < common.samples; ++i) {
        Rng rng(Rng::stream_seed(common.seed, static_cast<std::uint64_t>(i)));
        // random direction with the domain's unit budget
        std::vector<Complex> a(static_cast<std::size_t>(v.nvars));
        double norm_sum = 0.0;
        for (Complex& c : a) {
            c = rng.gaussian();
        }
        if (domain.kind == DomainKind::polydisk) {
            for (Complex c : a) norm_sum += std::abs(c);
        } else {
            double s = 0.0;
            for (Complex c : a) s += std::norm(c);
            norm_sum = std::sqrt(s);
        }
        for (Complex& c : a) c /= norm_sum;

        SamplerConfig cfg;
        cfg.seed = common.seed;
        cfg.dim = common.dim;
        cfg.degree = common.degree;
        cfg.depth = common.depth;
        MatrixSeries1D h = common.dim == 1 ? sample_schur_scalar(cfg, rng)
                                           : sample_matrix_contractive(cfg, rng);
        if (theorem == TheoremId::t22) {
            // zero constant term: multiply by z
            std::vector<ComplexMatrix> zc{ComplexMatrix::zero(h.dim()),
                                          ComplexMatrix::identity(h.dim())};
            h = series_mul(MatrixSeries1D(std::move(zc)), h, h.degree() + 1);
        }
        MultiSeries lifted = lift_via_linear(h, a, domain, v.lift_degree);

        // directions maximizing |l_a|, both signs: the phase-aligned torus
        // point on the polydisk, conj(a) on the ball
        std::vector<std::vector<Complex>> extremal(2);
        for (Complex c : a) {
            Complex u;
            if (domain.kind == DomainKind::polydisk) {
                u = std::abs(c) > 0.0 ? std::conj(c) / std::abs(c) : Complex{0.0, 0.0};
            } else {
                u = std::conj(c);
            }
            extremal[0].push_back(u);
            extremal[1].push_back(-u);
        }
        InequalityVerdict vd = check_multidim(
            lifted, domain, theorem, params, theta, v.probes,
            Rng::stream_seed(common.seed ^ 0x5bd1e995u, static_cast<std::uint64_t>(i)),
            extremal, policy_of(common));
        max_pad = std::max(max_pad, vd.truncation_pad);
        if (summary.worst_index < 0 || vd.margin < summary.worst_margin) {
            summary.worst_margin = vd.margin;
            summary.worst_index = i;
        }
        if (!vd.pass()) {
            ++summary.failures;
        }
        table.rows.push_back({std::to_string(i), v.theorem, fmt_double(theta),
                              fmt_double(vd.margin), fmt_double(vd.truncation_pad),
                              vd.pass() ? "1" : "0"});
    }
    table.add_meta("truncation_pad", fmt_double(max_pad));
    table.add_meta("worst_margin", fmt_double(summary.worst_margin));
    table.add_meta("failures", std::to_string(summary.failures));
    int rc = emit(table, common);
    if (rc != 0) {
        return rc;
    }
    std::cerr << "verify " << v.theorem << ": samples=" << common.samples
              << " worst_margin=" << fmt_double(summary.worst_margin)
              << " failures=" << summary.failures << "\n";
    return summary.failures == 0 ? 0 : 1;
}

// ------------------------------------------------------------- sharpness --

struct SharpnessOpts {
    std::string family = "mobius";
    std::string radius_id = "one-third";
    int n_start = 1;
    double p = 1.0;
    std::vector<double> a_list;
    std::vector<double> r_list;
};

int cmd_sharpness(const SharpnessOpts& s, CommonOpts& common) {
    SharpnessFamily family;
    if (s.family == "mobius") {
        family = SharpnessFamily::mobius;
    } else if (s.family == "zero-constant") {
        family = SharpnessFamily::zero_constant;
    } else {
        std::cerr << "unknown family: " << s.family << "\n";
        return 2;
    }
    RadiusId radius;
    double proven;
    if (s.radius_id == "one-third") {
        radius = RadiusId::one_third;
        proven = 1.0 / 3.0;
    } else if (s.radius_id == "inv-sqrt2") {
        radius = RadiusId::inv_sqrt2;
        proven = 1.0 / std::numbers::sqrt2;
    } else if (s.radius_id == "rnp") {
        radius = RadiusId::rnp;
        proven = solve_rnp(s.n_start, s.p);
    } else {
        std::cerr << "unknown radius id: " << s.radius_id << "\n";
        return 2;
    }
    std::vector<double> a_list = s.a_list.empty() ? std::vector<double>{0.999, 0.9999} : s.a_list;
    std::vector<double> r_list = s.r_list;
    if (r_list.empty()) {
        r_list = {proven - 0.01, proven + 0.01, proven + 0.02};
    }
    std::vector<SharpnessRow> rows =
        sharpness_sweep(family, radius, a_list, r_list, s.n_start, s.p);

    Table table;
    base_meta(table, "sharpness", common);
    table.add_meta("family", s.family);
    table.add_meta("radius_id", s.radius_id);
    table.add_meta("proven_radius", fmt_double(proven));
    if (radius == RadiusId::rnp) {
        table.add_meta("N", std::to_string(s.n_start));
        table.add_meta("p", fmt_double(s.p));
    }
    table.add_meta("truncation_pad", "0");
    table.columns = {"family", "a", "r", "margin", "sign"};
    bool flip_seen = false;
    bool fail_beyond = false;
    for (const auto& row : rows) {
        table.rows.push_back({s.family, fmt_double(row.a), fmt_double(row.r),
                              fmt_double(row.margin), row.margin >= 0.0 ? "+" : "-"});
        if (row.r <= proven + 1e-12 && row.margin >= 0.0) {
            flip_seen = true;
        }
        if (row.r > proven && row.margin < 0.0) {
            fail_beyond = true;
        }
    }
    int rc = emit(table, common);
    if (rc != 0) {
        return rc;
    }
    std::cerr << "sharpness " << s.family << "/" << s.radius_id
              << (flip_seen && fail_beyond ? ": sign flip demonstrated" : ": no flip in range")
              << "\n";
    return 0;
}

// ------------------------------------------------------------------ mchi --

struct MchiOpts {
    double rmin = 0.05;
    double rmax = 0.95;
    double rstep = 0.05;
};

int cmd_mchi(const MchiOpts& m, CommonOpts& common) {
    if (!(m.rmin >= 0.0 && m.rmax < 1.0 && m.rmin <= m.rmax && m.rstep > 0.0)) {
        std::cerr << "mchi: bad r grid\n";
        return 2;
    }
    SampleSetSpec sset;
    sset.seed = common.seed;
    sset.count = common.samples;
    sset.dims = {1, 2, 4};
    sset.degree = common.degree;
    sset.depth = common.depth;
    std::vector<MatrixSeries1D> samples = make_sample_set(sset, policy_of(common));

    MatrixSeries1D witness = adversarial_diag_witness();

    Table table;
    base_meta(table, "mchi", common);
    table.add_meta("upper_bound_caveat", mchi_upper_caveat_note());
    table.add_meta("witness_coeff_square_sum", fmt_double(h2_coefficient_sum(witness)));
    table.add_meta("truncation_pad", "0");

    std::vector<double> r_grid;
    for (int i = 0; m.rmin + i * m.rstep <= m.rmax + 1e-12; ++i) {
        r_grid.push_back(std::min(m.rmin + i * m.rstep, m.rmax));
    }
    MchiSearchOutcome search = search_mchi_violations(samples, r_grid, policy_of(common));
    table.add_meta("search_violations", std::to_string(search.violations));
    table.add_meta("search_max_ratio", fmt_double(search.max_ratio));
    table.add_meta("search_max_ratio_r", fmt_double(search.at_r));

    table.columns = {"r",           "upper",         "lower",        "printed_lower",
                     "printed_exceeds_upper", "empirical_sup", "product_lower", "product_upper"};
    for (double r : r_grid) {
        double upper = mchi_upper(r);
        double lower = mchi_lower(r);
        double printed = mchi_printed_lower(r);
        std::vector<double> maj = majorants_at(samples, r, policy_of(common));
        double sup = 0.0;
        for (double v : maj) {
            sup = std::max(sup, v);
        }
        table.rows.push_back({fmt_double(r), fmt_double(upper), fmt_double(lower),
                              fmt_double(printed), printed > upper + 1e-12 ? "1" : "0",
                              fmt_double(sup), fmt_double(r * lower), fmt_double(r * upper)});
    }
    int rc = emit(table, common);
    if (rc != 0) {
        return rc;
    }
    std::cerr << "mchi: search_violations=" << search.violations
              << " max_ratio=" << fmt_double(search.max_ratio) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coefficient-norm inequality laboratory for matrix-valued power series"};
    app.require_subcommand(1);

    CommonOpts common;

    RadiusOpts radius_opts;
    CLI::App* radius_cmd = app.add_subcommand("radius", "R_{N,p} radius table");
    radius_cmd->add_option("--nmin", radius_opts.nmin, "smallest N");
    radius_cmd->add_option("--nmax", radius_opts.nmax, "largest N");
    radius_cmd->add_option("--pmin", radius_opts.pmin, "smallest p");
    radius_cmd->add_option("--pmax", radius_opts.pmax, "largest p");
    radius_cmd->add_option("--pstep", radius_opts.pstep, "p increment");
    add_common(radius_cmd, common);

    VerifyOpts verify_opts;
    CLI::App* verify_cmd = app.add_subcommand("verify", "inequality sweep over fresh samples");
    verify_cmd
        ->add_option("--theorem", verify_opts.theorem,
                     "bohr, refined-p, refined-quadratic, refined-g, t21, t22, t23, t24, t25")
        ->required();
    verify_cmd->add_option("--r", verify_opts.r, "radius (defaults to the proven radius)");
    verify_cmd->add_option("--theta", verify_opts.theta,
                           "homothety factor (defaults to the proven radius)");
    verify_cmd->add_option("-N,--tail-start", verify_opts.n_start, "tail start for refined-p/t23");
    verify_cmd->add_option("-p,--exponent", verify_opts.p, "exponent for refined-p/t23");
    verify_cmd->add_option("--gcoeff", verify_opts.gcoeffs, "G polynomial coefficients c_1..c_l");
    verify_cmd->add_option("--domain", verify_opts.domain, "polydisk or ball")
        ->check(CLI::IsMember({"polydisk", "ball"}));
    verify_cmd->add_option("--nvars", verify_opts.nvars, "number of variables");
    verify_cmd->add_option("--probes", verify_opts.probes, "random probe points per sample");
    verify_cmd->add_option("--lift-degree", verify_opts.lift_degree, "lift truncation degree");
    verify_cmd->add_option("--save-samples", verify_opts.save_samples,
                           "write the generated sample set to a JSON manifest");
    verify_cmd->add_option("--load-samples", verify_opts.load_samples,
                           "replay a sample set from a JSON manifest");
    add_common(verify_cmd, common);

    SharpnessOpts sharp_opts;
    CLI::App* sharp_cmd = app.add_subcommand("sharpness", "sign-flip table across a proven radius");
    sharp_cmd->add_option("--family", sharp_opts.family, "mobius or zero-constant")->required();
    sharp_cmd->add_option("--radius-id", sharp_opts.radius_id, "one-third, inv-sqrt2 or rnp")
        ->required();
    sharp_cmd->add_option("-N,--tail-start", sharp_opts.n_start, "tail start for rnp");
    sharp_cmd->add_option("-p,--exponent", sharp_opts.p, "exponent for rnp");
    sharp_cmd->add_option("--a", sharp_opts.a_list, "family parameters");
    sharp_cmd->add_option("--r", sharp_opts.r_list, "radii to tabulate");
    add_common(sharp_cmd, common);

    MchiOpts mchi_opts;
    CLI::App* mchi_cmd = app.add_subcommand("mchi", "growth-function bound table");
    mchi_cmd->add_option("--rmin", mchi_opts.rmin, "smallest r");
    mchi_cmd->add_option("--rmax", mchi_opts.rmax, "largest r");
    mchi_cmd->add_option("--rstep", mchi_opts.rstep, "r increment");
    add_common(mchi_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (radius_cmd->parsed()) {
            return cmd_radius(radius_opts, common);
        }
        if (verify_cmd->parsed()) {
            return is_multidim(verify_opts.theorem) ? verify_multidim(verify_opts, common)
                                                    : verify_onedim(verify_opts, common);
        }
        if (sharp_cmd->parsed()) {
            return cmd_sharpness(sharp_opts, common);
        }
        if (mchi_cmd->parsed()) {
            return cmd_mchi(mchi_opts, common);
        }
    } catch (const InadmissibleG& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
