#include "bohrlab/sweep.hpp"

#include <exception>
#include <stdexcept>

#include "bohrlab/radii.hpp"

namespace bohrlab {

namespace {

// Shared skeleton: independent per-index work, results stored by index.
// The serial branch is the reference implementation the parallel one is
// tested against. Exceptions must not escape an OpenMP region, so the
// first one is captured and rethrown after the loop.
template <typename T, typename Fn>
std::vector<T> indexed_map(int count, ExecutionPolicy policy, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(count));
    if (policy == ExecutionPolicy::parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
#pragma omp critical
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
        if (error) {
            std::rethrow_exception(error);
        }
    } else {
        for (int i = 0; i < count; ++i) {
            out[static_cast<std::size_t>(i)] = fn(i);
        }
    }
    return out;
}

}  // namespace

std::vector<MatrixSeries1D> make_sample_set(const SampleSetSpec& spec, ExecutionPolicy policy) {
    if (spec.count < 1 || spec.dims.empty()) {
        throw std::invalid_argument("make_sample_set: need count >= 1 and at least one dim");
    }
    for (int d : spec.dims) {
        SamplerConfig cfg;
        cfg.dim = d;
        cfg.degree = spec.degree;
        cfg.depth = spec.depth;
        cfg.validate();
    }
    std::vector<std::optional<MatrixSeries1D>> slots(static_cast<std::size_t>(spec.count));
    auto build = [&](int i) {
        SamplerConfig cfg;
        cfg.seed = spec.seed;
        cfg.dim = spec.dims[static_cast<std::size_t>(i) % spec.dims.size()];
        cfg.degree = spec.degree;
        cfg.depth = spec.depth;
        Rng rng(Rng::stream_seed(spec.seed, static_cast<std::uint64_t>(i)));
        return cfg.dim == 1 ? sample_schur_scalar(cfg, rng) : sample_matrix_contractive(cfg, rng);
    };
    if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < spec.count; ++i) {
            slots[static_cast<std::size_t>(i)] = build(i);
        }
    } else {
        for (int i = 0; i < spec.count; ++i) {
            slots[static_cast<std::size_t>(i)] = build(i);
        }
    }
    std::vector<MatrixSeries1D> samples;
    samples.reserve(slots.size());
    for (auto& s : slots) {
        samples.push_back(std::move(*s));
    }
    return samples;
}

std::vector<InequalityVerdict> sweep_check(const CheckSpec& spec,
                                           std::span<const MatrixSeries1D> samples,
                                           ExecutionPolicy policy) {
    if (spec.kind == VerdictKind::refined_g) {
        if (!spec.g.has_value()) {
            throw std::invalid_argument("sweep_check: refined_g needs a G polynomial");
        }
        if (g_constraint_check(*spec.g) < -1e-14) {
            throw InadmissibleG("inadmissible G: coefficient constraint violated");
        }
    }
    return indexed_map<InequalityVerdict>(
        static_cast<int>(samples.size()), policy, [&](int i) {
            const MatrixSeries1D& f = samples[static_cast<std::size_t>(i)];
            switch (spec.kind) {
                case VerdictKind::bohr:
                    return check_bohr(f, spec.r);
                case VerdictKind::refined_p:
                    return check_refined_p(f, spec.r, spec.n_start, spec.p, spec.grid);
                case VerdictKind::refined_quadratic:
                    return check_refined_quadratic(f, spec.r);
                case VerdictKind::refined_g:
                    return check_refined_g(f, spec.r, *spec.g);
            }
            throw std::logic_error("sweep_check: unreachable");
        });
}

std::vector<double> schwarz_pick_margins(std::span<const MatrixSeries1D> samples,
                                         ExecutionPolicy policy) {
    return indexed_map<double>(static_cast<int>(samples.size()), policy, [&](int i) {
        return schwarz_pick_margin(samples[static_cast<std::size_t>(i)]);
    });
}

std::vector<double> growth_margins(std::span<const MatrixSeries1D> samples, double r, int grid,
                                   ExecutionPolicy policy) {
    return indexed_map<double>(static_cast<int>(samples.size()), policy, [&](int i) {
        return growth_bound_margin(samples[static_cast<std::size_t>(i)], r, grid);
    });
}

std::vector<double> majorants_at(std::span<const MatrixSeries1D> samples, double r,
                                 ExecutionPolicy policy) {
    return indexed_map<double>(static_cast<int>(samples.size()), policy, [&](int i) {
        return samples[static_cast<std::size_t>(i)].majorant(r);
    });
}

SweepSummary summarize(std::span<const double> margins) {
    SweepSummary s;
    for (std::size_t i = 0; i < margins.size(); ++i) {
        if (s.worst_index < 0 || margins[i] < s.worst_margin) {
            s.worst_margin = margins[i];
            s.worst_index = static_cast<int>(i);
        }
        if (margins[i] < 0.0) {
            ++s.failures;
        }
    }
    return s;
}

SweepSummary summarize(std::span<const InequalityVerdict> verdicts) {
    SweepSummary s;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        if (s.worst_index < 0 || verdicts[i].margin < s.worst_margin) {
            s.worst_margin = verdicts[i].margin;
            s.worst_index = static_cast<int>(i);
        }
        if (!verdicts[i].pass()) {
            ++s.failures;
        }
    }
    return s;
}

MchiSearchOutcome search_mchi_violations(std::span<const MatrixSeries1D> samples,
                                         std::span<const double> r_list, ExecutionPolicy policy) {
    struct Best {
        double ratio = 0.0;
        double r = 0.0;
        int violations = 0;
    };
    std::vector<Best> per_sample = indexed_map<Best>(
        static_cast<int>(samples.size()), policy, [&](int i) {
            Best b;
            for (double r : r_list) {
                double ratio = samples[static_cast<std::size_t>(i)].majorant(r) / mchi_upper(r);
                if (ratio > b.ratio) {
                    b.ratio = ratio;
                    b.r = r;
                }
                if (ratio > 1.0 + 1e-12) {
                    ++b.violations;
                }
            }
            return b;
        });
    MchiSearchOutcome out;
    for (std::size_t i = 0; i < per_sample.size(); ++i) {
        out.violations += per_sample[i].violations;
        if (per_sample[i].ratio > out.max_ratio) {
            out.max_ratio = per_sample[i].ratio;
            out.at_r = per_sample[i].r;
            out.sample_index = static_cast<int>(i);
        }
    }
    return out;
}

}  // namespace bohrlab
