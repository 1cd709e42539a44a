#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bohrlab/matrix_series.hpp"

namespace bohrlab {

// Recorded in every manifest and report so runs can be replayed bit-exactly.
inline constexpr std::string_view kRngVersion = "mt19937_64/v1";

// Deterministic draws on top of mt19937_64. The raw-bit mappings are fixed
// here rather than delegated to <random> distributions, whose outputs are
// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1), 53-bit resolution
    double uniform();
    double uniform(double lo, double hi);
    // uniform on the closed disk of the given radius (polar map)
    Complex unit_disk(double radius);
    // standard complex Gaussian (Box-Muller; real and imaginary parts N(0, 1/2))
    Complex gaussian();

    // splitmix64 mix of (seed, index): each sample index owns its stream, so
    // parallel generation is deterministic regardless of scheduling.
    static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

  private:
    std::mt19937_64 engine_;
};

struct SamplerConfig {
    std::uint64_t seed = 1;
    int dim = 1;
    int degree = 32;
    int depth = 4;       // Schur parameter count
    int grid = 0;        // circle points for certification; 0 = max(256, ceil(4 pi D))
    double safety = 0.0; // 0 = derive from the grid (see resolved_safety)

    int resolved_grid() const;
    double resolved_safety() const;
    void validate() const;
};

// Certified upper bound of sup_{|z|=1} ||f(z)||: grid maximum times the
// correction 1/(1 - pi D / M), valid for M > pi D because the derivative
// of a degree-D polynomial on the circle is bounded by D times its sup.
double certified_circle_sup(const MatrixSeries1D& f, int grid_points);

// Truncated Taylor series of the Schur continued fraction
//   f_k = (g_k + z f_{k+1}) / (1 + conj(g_k) z f_{k+1}),
// with parameters drawn uniformly from the disk of radius 0.95. The exact
// function has sup-norm <= 1; the truncation is re-certified on the grid
// and scaled down when it overshoots, which preserves the coefficient
// bound |c_n| <= 1 - |c_0|^2.
MatrixSeries1D sample_schur_scalar(const SamplerConfig& cfg, Rng& rng);

// Random matrix polynomial with Gaussian entries, constant coefficient
// replaced by its normalized trace times I, then scaled by the certified
// circle sup so that ||f||_inf <= 1 holds exactly for the emitted series.
MatrixSeries1D sample_matrix_contractive(const SamplerConfig& cfg, Rng& rng);

// f(z) = diag(z, z^2): unit sup-norm, zero scalar head, coefficient-square
// sum equal to 2. The stress case for the coefficient-square proof step.
MatrixSeries1D adversarial_diag_witness();

// JSON manifest of a sample set (coefficients as [re, im] pairs).
std::string sample_set_to_json(const SamplerConfig& cfg, const std::vector<MatrixSeries1D>& samples);
std::vector<MatrixSeries1D> sample_set_from_json(const std::string& text,
                                                 SamplerConfig* cfg_out = nullptr);

}  // namespace bohrlab
