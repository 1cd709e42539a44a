#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bohrlab/exec.hpp"
#include "bohrlab/inequalities.hpp"
#include "bohrlab/matrix_series.hpp"

namespace bohrlab {

struct MultiIndex {
    std::vector<int> alpha;
    int total_degree() const;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// graded lexicographic: lower total degree first, then lex within a degree
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

enum class DomainKind { polydisk, euclidean_ball };

// Gauge description of the two supported complete circular domains.
// z lies in theta * Q exactly when gauge(z) < theta.
struct CircularDomain {
    DomainKind kind = DomainKind::polydisk;
    int nvars = 1;
    double gauge(std::span<const Complex> z) const;
};

// number of multi-indices with nvars components and total degree <= cap
double multi_index_count(int nvars, int cap);

// Multivariable truncated power series sum_alpha A_alpha z^alpha with d x d
// matrix coefficients, all |alpha| <= degree_cap. Built once via set_coeff,
// then treated as an immutable value.
class MultiSeries {
  public:
    MultiSeries(int nvars, int dim, int degree_cap, bool truncated_tail = false);

    int nvars() const { return nvars_; }
    int dim() const { return dim_; }
    int degree_cap() const { return degree_cap_; }
    int max_total_degree() const { return max_degree_; }
    bool truncated_tail() const { return truncated_; }

    void set_coeff(MultiIndex alpha, ComplexMatrix a);
    const std::map<MultiIndex, ComplexMatrix, GradedLexLess>& terms() const { return terms_; }

  private:
    int nvars_;
    int dim_;
    int degree_cap_;
    bool truncated_;
    int max_degree_ = 0;
    std::map<MultiIndex, ComplexMatrix, GradedLexLess> terms_;
};

// P_k(z) = sum_{|alpha| = k} A_alpha z^alpha; zero matrix for k beyond the cap.
ComplexMatrix homogeneous_part(const MultiSeries& f, int k, std::span<const Complex> z);

// sum_k ||P_k(z)||
double homogeneous_majorant(const MultiSeries& f, std::span<const Complex> z);

// full value sum_alpha A_alpha z^alpha
ComplexMatrix eval_multi(const MultiSeries& f, std::span<const Complex> z);

// One-variable restriction along the complex line z = a t: the series with
// coefficients P_k(a).
MatrixSeries1D slice(const MultiSeries& f, std::span<const Complex> a);

// h composed with the linear functional l_a(z) = a_1 z_1 + ... + a_n z_n,
// expanded to multi-index form. Requires l_a to map the domain into the
// closed unit disk: sum |a_j| <= 1 on the polydisk, ||a||_2 <= 1 on the
// ball. The result inherits h's certificate.
MultiSeries lift_via_linear(const MatrixSeries1D& h, std::span<const Complex> a,
                            const CircularDomain& domain, int degree_cap);

enum class TheoremId { t21, t22, t23, t24, t25 };

struct TheoremParams {
    int n_start = 1;                // t23 tail start
    double p = 1.0;                 // t23 exponent
    std::optional<GPolynomial> g;   // t25 polynomial
};

// Worst-case margin of the selected homogeneous inequality over random
// probe points with gauge = theta (1 - 1e-6), plus any caller-supplied
// directions (each scaled to that gauge). The probe set is derived from
// the seed alone, so results are reproducible and thread-count
// independent.
InequalityVerdict check_multidim(const MultiSeries& f, const CircularDomain& domain,
                                 TheoremId theorem, const TheoremParams& params, double theta,
                                 int probes, std::uint64_t seed,
                                 std::span<const std::vector<Complex>> extra_directions = {},
                                 ExecutionPolicy policy = ExecutionPolicy::parallel);

// JSON manifest of a multivariable series (alpha plus [re, im] entry pairs).
std::string multi_series_to_json(const MultiSeries& f);
MultiSeries multi_series_from_json(const std::string& text);

}  // namespace bohrlab
