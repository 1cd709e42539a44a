#include "bohrlab/sampler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bohrlab {

using json = nlohmann::json;

namespace {

constexpr double kSchurParameterRadius = 0.95;

}  // namespace

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

Complex Rng::unit_disk(double radius) {
    double r = radius * std::sqrt(uniform());
    double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, theta);
}

Complex Rng::gaussian() {
    double u = uniform();
    double v = uniform();
    // guard the log; u = 0 happens with probability 2^-53
    double mag = std::sqrt(-std::log(1.0 - u));
    double theta = 2.0 * std::numbers::pi * v;
    return std::polar(mag, theta);
}

std::uint64_t Rng::stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

int SamplerConfig::resolved_grid() const {
    if (grid > 0) {
        return grid;
    }
    return std::max(256, static_cast<int>(std::ceil(4.0 * std::numbers::pi * degree)));
}

double SamplerConfig::resolved_safety() const {
    if (safety > 0.0) {
        return safety;
    }
    double ratio = std::numbers::pi * degree / resolved_grid();
    // floored so degree-0 samples normalize strictly inside the ball
    return std::max(1.0 / (1.0 - ratio) - 1.0, 1e-9);
}

void SamplerConfig::validate() const {
    if (dim < 1 || degree < 0 || depth < 1) {
        throw std::invalid_argument("SamplerConfig: need dim >= 1, degree >= 0, depth >= 1");
    }
    if (resolved_grid() <= std::numbers::pi * degree) {
        throw std::invalid_argument("SamplerConfig: grid must exceed pi * degree");
    }
}

double certified_circle_sup(const MatrixSeries1D& f, int grid_points) {
    int deg = f.degree();
    while (deg > 0 && f.coeff_norm(deg) == 0.0) {
        --deg;
    }
    if (grid_points <= std::numbers::pi * deg) {
        throw std::invalid_argument("certified_circle_sup: grid must exceed pi * degree");
    }
    double grid_max = 0.0;
    for (int j = 0; j < grid_points; ++j) {
        double theta = 2.0 * std::numbers::pi * j / grid_points;
        grid_max = std::max(grid_max, operator_norm(f.eval(std::polar(1.0, theta))));
    }
    return grid_max / (1.0 - std::numbers::pi * deg / grid_points);
}

namespace {

MatrixSeries1D scale_series(const MatrixSeries1D& f, double factor) {
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int k = 0; k <= f.degree(); ++k) {
        coeffs.push_back(Complex{factor, 0.0} * f.coeff(k));
    }
    return MatrixSeries1D(std::move(coeffs));
}

MatrixSeries1D shift_series(const MatrixSeries1D& f, int max_degree) {
    // z * f, truncated
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(std::min(f.degree() + 1, max_degree)) + 1);
    coeffs.push_back(ComplexMatrix::zero(f.dim()));
    for (int k = 0; k + 1 <= max_degree && k <= f.degree(); ++k) {
        coeffs.push_back(f.coeff(k));
    }
    return MatrixSeries1D(std::move(coeffs));
}

}  // namespace

MatrixSeries1D sample_schur_scalar(const SamplerConfig& cfg, Rng& rng) {
    cfg.validate();
    std::vector<Complex> params;
    params.reserve(static_cast<std::size_t>(cfg.depth));
    for (int k = 0; k < cfg.depth; ++k) {
        params.push_back(rng.unit_disk(kSchurParameterRadius));
    }
    MatrixSeries1D f = MatrixSeries1D::constant(scalar_embed(params.back(), 1));
    for (int k = cfg.depth - 2; k >= 0; --k) {
        Complex gamma = params[static_cast<std::size_t>(k)];
        MatrixSeries1D zf = shift_series(f, cfg.degree);
        // gamma + z f
        std::vector<ComplexMatrix> num = zf.coeffs();
        num[0] = num[0] + scalar_embed(gamma, 1);
        // 1 + conj(gamma) z f
        std::vector<ComplexMatrix> den = zf.coeffs();
        for (auto& c : den) {
            c = std::conj(gamma) * c;
        }
        den[0] = den[0] + scalar_embed(1.0, 1);
        f = series_div(MatrixSeries1D(std::move(num)), MatrixSeries1D(std::move(den)), cfg.degree);
    }
    // Re-certify the truncation and scale down when it overshoots; the
    // emitted polynomial is then exactly a member of the unit ball.
    double sup = certified_circle_sup(f, cfg.resolved_grid());
    if (sup > 1.0) {
        return scale_series(f, 1.0 / sup);
    }
    return MatrixSeries1D(f.coeffs());
}

MatrixSeries1D sample_matrix_contractive(const SamplerConfig& cfg, Rng& rng) {
    cfg.validate();
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(cfg.degree) + 1);
    for (int k = 0; k <= cfg.degree; ++k) {
        Eigen::MatrixXcd m(cfg.dim, cfg.dim);
        for (int i = 0; i < cfg.dim; ++i) {
            for (int j = 0; j < cfg.dim; ++j) {
                m(i, j) = rng.gaussian();
            }
        }
        coeffs.push_back(ComplexMatrix(std::move(m)));
    }
    // scalar head: replace A_0 by its normalized trace times I
    Complex a0 = coeffs[0].trace() / static_cast<double>(cfg.dim);
    coeffs[0] = scalar_embed(a0, cfg.dim);
    MatrixSeries1D p(std::move(coeffs));

    int grid = cfg.resolved_grid();
    double grid_max = 0.0;
    for (int j = 0; j < grid; ++j) {
        double theta = 2.0 * std::numbers::pi * j / grid;
        grid_max = std::max(grid_max, operator_norm(p.eval(std::polar(1.0, theta))));
    }
    double scale = grid_max * (1.0 + cfg.resolved_safety());
    return scale_series(p, 1.0 / scale);
}

MatrixSeries1D adversarial_diag_witness() {
    Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::MatrixXcd a2 = Eigen::MatrixXcd::Zero(2, 2);
    a1(0, 0) = 1.0;
    a2(1, 1) = 1.0;
    std::vector<ComplexMatrix> coeffs;
    coeffs.push_back(ComplexMatrix::zero(2));
    coeffs.push_back(ComplexMatrix(std::move(a1)));
    coeffs.push_back(ComplexMatrix(std::move(a2)));
    return MatrixSeries1D(std::move(coeffs));
}

std::string sample_set_to_json(const SamplerConfig& cfg, const std::vector<MatrixSeries1D>& samples) {
    json root;
    root["schema_version"] = 1;
    root["rng"] = std::string(kRngVersion);
    root["seed"] = cfg.seed;
    root["config"] = {{"dim", cfg.dim},
                      {"degree", cfg.degree},
                      {"depth", cfg.depth},
                      {"grid", cfg.resolved_grid()},
                      {"safety", cfg.resolved_safety()}};
    json list = json::array();
    for (const auto& f : samples) {
        json coeffs = json::array();
        for (int k = 0; k <= f.degree(); ++k) {
            json entries = json::array();
            for (int i = 0; i < f.dim(); ++i) {
                for (int j = 0; j < f.dim(); ++j) {
                    Complex v = f.coeff(k)(i, j);
                    entries.push_back(json::array({v.real(), v.imag()}));
                }
            }
            coeffs.push_back(std::move(entries));
        }
        list.push_back(json{{"dim", f.dim()},
                            {"degree", f.degree()},
                            {"truncated_tail", f.truncated_tail()},
                            {"coeffs", std::move(coeffs)}});
    }
    root["samples"] = std::move(list);
    return root.dump(2);
}

std::vector<MatrixSeries1D> sample_set_from_json(const std::string& text, SamplerConfig* cfg_out) {
    json root = json::parse(text);
    if (root.at("schema_version").get<int>() != 1) {
        throw std::invalid_argument("sample manifest: unsupported schema_version");
    }
    if (cfg_out != nullptr) {
        const json& c = root.at("config");
        cfg_out->seed = root.at("seed").get<std::uint64_t>();
        cfg_out->dim = c.at("dim").get<int>();
        cfg_out->degree = c.at("degree").get<int>();
        cfg_out->depth = c.at("depth").get<int>();
        cfg_out->grid = c.at("grid").get<int>();
        cfg_out->safety = c.at("safety").get<double>();
    }
    std::vector<MatrixSeries1D> samples;
    for (const json& s : root.at("samples")) {
        int dim = s.at("dim").get<int>();
        int degree = s.at("degree").get<int>();
        const json& coeffs = s.at("coeffs");
        if (static_cast<int>(coeffs.size()) != degree + 1) {
            throw std::invalid_argument("sample manifest: degree does not match coefficient count");
        }
        std::vector<ComplexMatrix> mats;
        mats.reserve(coeffs.size());
        for (const json& ck : coeffs) {
            if (static_cast<int>(ck.size()) != dim * dim) {
                throw std::invalid_argument("sample manifest: coefficient entry count mismatch");
            }
            Eigen::MatrixXcd m(dim, dim);
            int idx = 0;
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j, ++idx) {
                    m(i, j) = Complex{ck[idx][0].get<double>(), ck[idx][1].get<double>()};
                }
            }
            mats.push_back(ComplexMatrix(std::move(m)));
        }
        samples.push_back(MatrixSeries1D(std::move(mats), s.value("truncated_tail", false)));
    }
    return samples;
}

}  // namespace bohrlab
