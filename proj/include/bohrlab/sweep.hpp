#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bohrlab/exec.hpp"
#include "bohrlab/inequalities.hpp"
#include "bohrlab/matrix_series.hpp"
#include "bohrlab/sampler.hpp"

namespace bohrlab {

struct SampleSetSpec {
    std::uint64_t seed = 1;
    int count = 2000;
    std::vector<int> dims = {1, 2, 4};  // cycled across sample indices
    int degree = 32;
    int depth = 4;
};

// Certified sample set: dim-1 entries come from the Schur sampler, larger
// dims from the Gaussian matrix sampler. Sample i depends only on
// (seed, i), so serial and parallel runs produce identical sets.
std::vector<MatrixSeries1D> make_sample_set(const SampleSetSpec& spec,
                                            ExecutionPolicy policy = ExecutionPolicy::parallel);

struct CheckSpec {
    VerdictKind kind = VerdictKind::bohr;
    double r = 1.0 / 3.0;
    int n_start = 1;                // refined_p
    double p = 1.0;                 // refined_p
    int grid = 256;                 // refined_p angular grid
    std::optional<GPolynomial> g;   // refined_g
};

// One verdict per sample, index-aligned.
std::vector<InequalityVerdict> sweep_check(const CheckSpec& spec,
                                           std::span<const MatrixSeries1D> samples,
                                           ExecutionPolicy policy = ExecutionPolicy::parallel);

std::vector<double> schwarz_pick_margins(std::span<const MatrixSeries1D> samples,
                                         ExecutionPolicy policy = ExecutionPolicy::parallel);

std::vector<double> growth_margins(std::span<const MatrixSeries1D> samples, double r, int grid,
                                   ExecutionPolicy policy = ExecutionPolicy::parallel);

std::vector<double> majorants_at(std::span<const MatrixSeries1D> samples, double r,
                                 ExecutionPolicy policy = ExecutionPolicy::parallel);

struct SweepSummary {
    double worst_margin = 0.0;
    int worst_index = -1;
    int failures = 0;  // margins below zero
};
SweepSummary summarize(std::span<const double> margins);
SweepSummary summarize(std::span<const InequalityVerdict> verdicts);

// Outcome of the counterexample search for the coefficient-norm upper
// bound: reported, never asserted.
struct MchiSearchOutcome {
    int violations = 0;
    double max_ratio = 0.0;  // max over samples and radii of majorant / bound
    double at_r = 0.0;
    int sample_index = -1;
};
MchiSearchOutcome search_mchi_violations(std::span<const MatrixSeries1D> samples,
                                         std::span<const double> r_list,
                                         ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace bohrlab
