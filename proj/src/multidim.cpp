#include "bohrlab/multidim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bohrlab/sampler.hpp"

namespace bohrlab {

using json = nlohmann::json;

namespace {

constexpr int kMaxVars = 6;
constexpr double kEnumerationBudget = 3e5;
constexpr double kProbeShrink = 1e-6;

}  // namespace

int MultiIndex::total_degree() const {
    int sum = 0;
    for (int a : alpha) {
        sum += a;
    }
    return sum;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = a.total_degree();
    int db = b.total_degree();
    if (da != db) {
        return da < db;
    }
    return a.alpha < b.alpha;
}

double CircularDomain::gauge(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != nvars) {
        throw std::invalid_argument("gauge: point has wrong number of variables");
    }
    if (kind == DomainKind::polydisk) {
        double g = 0.0;
        for (Complex v : z) {
            g = std::max(g, std::abs(v));
        }
        return g;
    }
    double s = 0.0;
    for (Complex v : z) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double multi_index_count(int nvars, int cap) {
    // C(nvars + cap, nvars)
    double c = 1.0;
    for (int i = 1; i <= nvars; ++i) {
        c *= static_cast<double>(cap + i) / i;
    }
    return c;
}

MultiSeries::MultiSeries(int nvars, int dim, int degree_cap, bool truncated_tail)
    : nvars_(nvars), dim_(dim), degree_cap_(degree_cap), truncated_(truncated_tail) {
    if (nvars < 1 || nvars > kMaxVars) {
        throw std::invalid_argument("MultiSeries: nvars must lie in [1, 6]");
    }
    if (dim < 1 || degree_cap < 0) {
        throw std::invalid_argument("MultiSeries: need dim >= 1 and degree_cap >= 0");
    }
    if (multi_index_count(nvars, degree_cap) > kEnumerationBudget) {
        throw std::invalid_argument("MultiSeries: enumeration budget exceeded; lower the degree cap");
    }
}

void MultiSeries::set_coeff(MultiIndex alpha, ComplexMatrix a) {
    if (static_cast<int>(alpha.alpha.size()) != nvars_) {
        throw std::invalid_argument("set_coeff: multi-index arity mismatch");
    }
    for (int c : alpha.alpha) {
        if (c < 0) {
            throw std::invalid_argument("set_coeff: multi-index components must be nonnegative");
        }
    }
    int deg = alpha.total_degree();
    if (deg > degree_cap_) {
        throw std::invalid_argument("set_coeff: total degree exceeds the cap");
    }
    if (a.dim() != dim_) {
        throw std::invalid_argument("set_coeff: coefficient dimension mismatch");
    }
    max_degree_ = std::max(max_degree_, deg);
    terms_.insert_or_assign(std::move(alpha), std::move(a));
}

namespace {

Complex monomial(std::span<const Complex> z, const MultiIndex& alpha) {
    Complex v{1.0, 0.0};
    for (std::size_t j = 0; j < alpha.alpha.size(); ++j) {
        for (int c = 0; c < alpha.alpha[j]; ++c) {
            v *= z[j];
        }
    }
    return v;
}

// all homogeneous values P_0(z) .. P_K(z) in one pass
std::vector<ComplexMatrix> homogeneous_values(const MultiSeries& f, std::span<const Complex> z) {
    std::vector<ComplexMatrix> parts(static_cast<std::size_t>(f.max_total_degree()) + 1,
                                     ComplexMatrix::zero(f.dim()));
    for (const auto& [alpha, a] : f.terms()) {
        std::size_t k = static_cast<std::size_t>(alpha.total_degree());
        parts[k] = parts[k] + monomial(z, alpha) * a;
    }
    return parts;
}

void require_point(const MultiSeries& f, std::span<const Complex> z) {
    if (static_cast<int>(z.size()) != f.nvars()) {
        throw std::invalid_argument("point has wrong number of variables");
    }
}

}  // namespace

ComplexMatrix homogeneous_part(const MultiSeries& f, int k, std::span<const Complex> z) {
    require_point(f, z);
    if (k < 0) {
        throw std::invalid_argument("homogeneous_part: k must be nonnegative");
    }
    ComplexMatrix acc = ComplexMatrix::zero(f.dim());
    for (const auto& [alpha, a] : f.terms()) {
        if (alpha.total_degree() == k) {
            acc = acc + monomial(z, alpha) * a;
        }
    }
    return acc;
}

double homogeneous_majorant(const MultiSeries& f, std::span<const Complex> z) {
    require_point(f, z);
    double sum = 0.0;
    for (const auto& part : homogeneous_values(f, z)) {
        sum += operator_norm(part);
    }
    return sum;
}

ComplexMatrix eval_multi(const MultiSeries& f, std::span<const Complex> z) {
    require_point(f, z);
    ComplexMatrix acc = ComplexMatrix::zero(f.dim());
    for (const auto& part : homogeneous_values(f, z)) {
        acc = acc + part;
    }
    return acc;
}

MatrixSeries1D slice(const MultiSeries& f, std::span<const Complex> a) {
    require_point(f, a);
    bool nonzero = false;
    for (Complex v : a) {
        nonzero = nonzero || v != Complex{0.0, 0.0};
    }
    if (!nonzero) {
        throw std::invalid_argument("slice: direction must be nonzero");
    }
    return MatrixSeries1D(homogeneous_values(f, a), f.truncated_tail());
}

namespace {

void enumerate_degree(int nvars, int k, std::vector<int>& partial,
                      std::vector<MultiIndex>& out) {
    if (static_cast<int>(partial.size()) == nvars - 1) {
        partial.push_back(k);
        out.push_back(MultiIndex{partial});
        partial.pop_back();
        return;
    }
    for (int c = 0; c <= k; ++c) {
        partial.push_back(c);
        enumerate_degree(nvars, k - c, partial, out);
        partial.pop_back();
    }
}

std::vector<MultiIndex> indices_of_degree(int nvars, int k) {
    std::vector<MultiIndex> out;
    std::vector<int> partial;
    enumerate_degree(nvars, k, partial, out);
    return out;
}

double multinomial(const MultiIndex& alpha) {
    // product of binomials C(s_i, alpha_i) over the running sums s_i
    double result = 1.0;
    int s = 0;
    for (int c : alpha.alpha) {
        s += c;
        // C(s, c)
        double b = 1.0;
        for (int i = 1; i <= c; ++i) {
            b *= static_cast<double>(s - c + i) / i;
        }
        result *= b;
    }
    return result;
}

}  // namespace

MultiSeries lift_via_linear(const MatrixSeries1D& h, std::span<const Complex> a,
                            const CircularDomain& domain, int degree_cap) {
    if (static_cast<int>(a.size()) != domain.nvars) {
        throw std::invalid_argument("lift_via_linear: coefficient vector arity mismatch");
    }
    double budget = 0.0;
    if (domain.kind == DomainKind::polydisk) {
        for (Complex v : a) {
            budget += std::abs(v);
        }
    } else {
        double s = 0.0;
        for (Complex v : a) {
            s += std::norm(v);
        }
        budget = std::sqrt(s);
    }
    if (budget > 1.0 + 1e-12) {
        throw std::invalid_argument("lift_via_linear: l_a does not map the domain into the disk");
    }
    int cap = std::min(degree_cap, h.degree());
    bool clipped = degree_cap < h.degree();
    MultiSeries f(domain.nvars, h.dim(), cap, h.truncated_tail() || clipped);
    for (int k = 0; k <= cap; ++k) {
        for (MultiIndex& alpha : indices_of_degree(domain.nvars, k)) {
            Complex factor = multinomial(alpha);
            for (int j = 0; j < domain.nvars; ++j) {
                for (int c = 0; c < alpha.alpha[static_cast<std::size_t>(j)]; ++c) {
                    factor *= a[static_cast<std::size_t>(j)];
                }
            }
            if (factor == Complex{0.0, 0.0}) {
                continue;
            }
            f.set_coeff(std::move(alpha), factor * h.coeff(k));
        }
    }
    return f;
}

namespace {

std::vector<Complex> scale_point(std::span<const Complex> dir, double gauge_now, double target) {
    std::vector<Complex> z(dir.begin(), dir.end());
    for (Complex& v : z) {
        v *= target / gauge_now;
    }
    return z;
}

struct ProbeMargin {
    double margin;
    double pad;
};

ProbeMargin probe_margin(const MultiSeries& f, const CircularDomain& domain, TheoremId theorem,
                         const TheoremParams& params, std::span<const Complex> z, double a0_abs) {
    double r = domain.gauge(z);
    std::vector<ComplexMatrix> parts = homogeneous_values(f, z);
    std::vector<double> norms;
    norms.reserve(parts.size());
    for (const auto& part : parts) {
        norms.push_back(operator_norm(part));
    }
    int top = f.max_total_degree();
    bool padded = f.truncated_tail();
    double coeff_sq = (1.0 - a0_abs * a0_abs);
    double pad = padded ? coeff_sq * std::pow(r, top + 1) / (1.0 - r) : 0.0;

    double lhs = 0.0;
    switch (theorem) {
        case TheoremId::t21: {
            for (double nk : norms) {
                lhs += nk;
            }
            break;
        }
        case TheoremId::t22: {
            for (std::size_t k = 1; k < norms.size(); ++k) {
                lhs += norms[k];
            }
            break;
        }
        case TheoremId::t23: {
            ComplexMatrix value = parts[0];
            for (std::size_t k = 1; k < parts.size(); ++k) {
                value = value + parts[k];
            }
            lhs = std::pow(operator_norm(value), params.p);
            for (std::size_t k = static_cast<std::size_t>(params.n_start); k < norms.size(); ++k) {
                lhs += norms[k];
            }
            break;
        }
        case TheoremId::t24: {
            double weight = 1.0 / (1.0 + norms[0]) + r / (1.0 - r);
            double quad = 0.0;
            for (std::size_t k = 1; k < norms.size(); ++k) {
                lhs += norms[k];
                quad += norms[k] * norms[k];
            }
            lhs += norms[0] + weight * quad;
            if (padded) {
                pad += weight * coeff_sq * coeff_sq * std::pow(r, 2 * (top + 1)) / (1.0 - r * r);
            }
            break;
        }
        case TheoremId::t25: {
            double area = 0.0;
            for (std::size_t k = 1; k < norms.size(); ++k) {
                lhs += norms[k];
                area += static_cast<double>(k) * norms[k] * norms[k];
            }
            lhs += norms[0];
            double x = r * r;
            double area_pad = padded ? coeff_sq * coeff_sq * std::pow(x, top + 1) *
                                           ((top + 1) - top * x) / ((1.0 - x) * (1.0 - x))
                                     : 0.0;
            double g_now = params.g->eval(area);
            double g_padded = params.g->eval(area + area_pad);
            lhs += g_now;
            pad += g_padded - g_now;
            break;
        }
    }
    return {1.0 - lhs - pad, pad};
}

VerdictKind verdict_kind_of(TheoremId theorem) {
    switch (theorem) {
        case TheoremId::t23:
            return VerdictKind::refined_p;
        case TheoremId::t24:
            return VerdictKind::refined_quadratic;
        case TheoremId::t25:
            return VerdictKind::refined_g;
        default:
            return VerdictKind::bohr;
    }
}

}  // namespace

InequalityVerdict check_multidim(const MultiSeries& f, const CircularDomain& domain,
                                 TheoremId theorem, const TheoremParams& params, double theta,
                                 int probes, std::uint64_t seed,
                                 std::span<const std::vector<Complex>> extra_directions,
                                 ExecutionPolicy policy) {
    if (domain.nvars != f.nvars()) {
        throw std::invalid_argument("check_multidim: domain arity mismatch");
    }
    if (!(theta > 0.0 && theta < 1.0)) {
        throw std::domain_error("check_multidim: theta must lie in (0, 1)");
    }
    if (probes < 0) {
        throw std::invalid_argument("check_multidim: probes must be nonnegative");
    }
    if (theorem == TheoremId::t23 && (params.n_start < 1 || !(params.p > 0.0 && params.p <= 1.0))) {
        throw std::invalid_argument("check_multidim: t23 needs N >= 1 and p in (0, 1]");
    }
    if (theorem == TheoremId::t25 && !params.g.has_value()) {
        throw std::invalid_argument("check_multidim: t25 requires a G polynomial");
    }
    if (theorem == TheoremId::t25 && g_constraint_check(*params.g) < -1e-14) {
        throw InadmissibleG("inadmissible G: coefficient constraint violated");
    }

    // hypothesis on the constant term
    ComplexMatrix head = ComplexMatrix::zero(f.dim());
    MultiIndex origin{std::vector<int>(static_cast<std::size_t>(f.nvars()), 0)};
    if (auto it = f.terms().find(origin); it != f.terms().end()) {
        head = it->second;
    }
    double a0_abs = 0.0;
    if (theorem == TheoremId::t22) {
        if (operator_norm(head) > kScalarHeadTol) {
            throw std::invalid_argument("check_multidim: zero constant term required");
        }
    } else {
        Complex a0 = head.trace() / static_cast<double>(f.dim());
        if (max_abs_diff(head, scalar_embed(a0, f.dim())) > kScalarHeadTol) {
            throw std::invalid_argument("check_multidim: constant term must be a0 * I");
        }
        if (std::abs(a0) >= 1.0) {
            throw std::invalid_argument("check_multidim: |a0| must be < 1");
        }
        a0_abs = std::abs(a0);
    }

    double target = theta * (1.0 - kProbeShrink);
    std::vector<std::vector<Complex>> points;
    points.reserve(static_cast<std::size_t>(probes) + extra_directions.size());
    Rng rng(seed);
    for (int i = 0; i < probes; ++i) {
        std::vector<Complex> z(static_cast<std::size_t>(f.nvars()));
        if (domain.kind == DomainKind::polydisk) {
            for (Complex& v : z) {
                v = std::polar(target, 2.0 * std::numbers::pi * rng.uniform());
            }
        } else {
            for (Complex& v : z) {
                v = rng.gaussian();
            }
            double g = domain.gauge(z);
            for (Complex& v : z) {
                v *= target / g;
            }
        }
        points.push_back(std::move(z));
    }
    for (const auto& dir : extra_directions) {
        double g = domain.gauge(std::span<const Complex>(dir));
        if (g <= 0.0) {
            throw std::invalid_argument("check_multidim: zero extra direction");
        }
        points.push_back(scale_point(dir, g, target));
    }
    if (points.empty()) {
        throw std::invalid_argument("check_multidim: no probe points");
    }

    std::vector<ProbeMargin> margins(points.size());
    if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < static_cast<int>(points.size()); ++i) {
            margins[static_cast<std::size_t>(i)] =
                probe_margin(f, domain, theorem, params, points[static_cast<std::size_t>(i)], a0_abs);
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) {
            margins[i] = probe_margin(f, domain, theorem, params, points[i], a0_abs);
        }
    }

    std::size_t worst = 0;
    for (std::size_t i = 1; i < margins.size(); ++i) {
        if (margins[i].margin < margins[worst].margin) {
            worst = i;
        }
    }
    InequalityVerdict v;
    v.kind = verdict_kind_of(theorem);
    v.r = target;
    v.margin = margins[worst].margin;
    v.truncation_pad = margins[worst].pad;
    v.witness_point = points[worst];
    return v;
}

std::string multi_series_to_json(const MultiSeries& f) {
    json root;
    root["schema_version"] = 1;
    root["nvars"] = f.nvars();
    root["dim"] = f.dim();
    root["degree_cap"] = f.degree_cap();
    root["truncated_tail"] = f.truncated_tail();
    json terms = json::array();
    for (const auto& [alpha, a] : f.terms()) {
        json entries = json::array();
        for (int i = 0; i < f.dim(); ++i) {
            for (int j = 0; j < f.dim(); ++j) {
                entries.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
            }
        }
        terms.push_back(json{{"alpha", alpha.alpha}, {"matrix", std::move(entries)}});
    }
    root["terms"] = std::move(terms);
    return root.dump(2);
}

MultiSeries multi_series_from_json(const std::string& text) {
    json root = json::parse(text);
    if (root.at("schema_version").get<int>() != 1) {
        throw std::invalid_argument("multi-series manifest: unsupported schema_version");
    }
    int nvars = root.at("nvars").get<int>();
    int dim = root.at("dim").get<int>();
    int cap = root.at("degree_cap").get<int>();
    MultiSeries f(nvars, dim, cap, root.value("truncated_tail", false));
    for (const json& t : root.at("terms")) {
        MultiIndex alpha{t.at("alpha").get<std::vector<int>>()};
        const json& entries = t.at("matrix");
        if (static_cast<int>(entries.size()) != dim * dim) {
            throw std::invalid_argument("multi-series manifest: entry count mismatch");
        }
        Eigen::MatrixXcd m(dim, dim);
        int idx = 0;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j, ++idx) {
                m(i, j) = Complex{entries[idx][0].get<double>(), entries[idx][1].get<double>()};
            }
        }
        f.set_coeff(std::move(alpha), ComplexMatrix(std::move(m)));
    }
    return f;
}

}  // namespace bohrlab
