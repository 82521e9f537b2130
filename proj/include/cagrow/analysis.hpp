#pragma once

#include <array>
#include <optional>

#include "cagrow/ca.hpp"

namespace cagrow {

// The four growth classes: 1 pattern dies, 2 bounded (periodic or glider),
// 3 unbounded eventually monotone, 4 unbounded not eventually monotone.
// 1 and 2 are exact (a repeat certificate or the all-blank absorbing state);
// 3 and 4 are horizon-bounded calls backed by window statistics.
struct RepeatCertificate {
    std::uint64_t t1 = 0, t2 = 0;
    std::int64_t shift = 0;  // offset(t2) - offset(t1)
};

struct ClassVerdict {
    int label = 0;  // 1..4, or 0 for unknown
    bool exact = false;
    std::optional<RepeatCertificate> certificate;
    std::uint64_t horizon = 0;
    GrowthTrace trace;

    bool unknown() const { return label == 0; }
    std::string summary() const;
};

// Trailing analysis window used for the tentative 3/4 split.
inline std::uint64_t analysis_window(std::uint64_t horizon) {
    return std::max<std::uint64_t>(horizon / 10, 100);
}

ClassVerdict classify_pair(const CaRule& rule, const Configuration& input, std::uint64_t horizon,
                           std::uint64_t span_budget = 1u << 22);

// Replays the run to check an exact certificate: class 1 reaches all-blank,
// class 2 reproduces the t1 configuration (up to translation) at t2.
bool verify_certificate(const CaRule& rule, const Configuration& input, const ClassVerdict& v);

// Lemma-2 bounds for repeat-free traces: span(t) < |x| + r t and
// span(t) >= log_{sigma_size+1} t, checked for 2 <= t < trace length.
bool check_growth_bounds(const GrowthTrace& trace, std::size_t sigma_size, unsigned radius,
                         std::uint64_t input_len);

// Plateau-aware local minima: a maximal constant run strictly below both
// flanking values; reported at the run's first index.
std::vector<std::pair<std::uint64_t, std::uint64_t>> local_minima(const GrowthTrace& trace);

// Smallest (t0, lag) with tx.span(t) == tstd.span(t - lag) for all
// t in [t0, end]. Positive lag: tx runs behind the standard trace; negative:
// ahead of it. Minimizes t0 first, then |lag|.
struct Alignment {
    std::uint64_t t0 = 0;
    std::int64_t lag = 0;
};
std::optional<Alignment> align_traces(const GrowthTrace& tx, const GrowthTrace& tstd,
                                      std::uint64_t max_shift, std::uint64_t min_overlap = 1);

enum class GrowthModel { logarithmic, linear, other };
struct GrowthFit {
    GrowthModel model = GrowthModel::other;
    double coefficient = 0.0;
    double rms_log = 0.0, rms_lin = 0.0;
};
// Least squares over the trailing 90% of the trace; the winner's RMS residual
// must be under half the loser's.
GrowthFit fit_growth_rate(const GrowthTrace& trace);
// Same fit restricted to t in [from, to].
GrowthFit fit_growth_rate_range(const GrowthTrace& trace, std::uint64_t from, std::uint64_t to);

struct ClassDistribution {
    std::uint64_t samples = 0;
    std::array<std::uint64_t, 5> counts{};  // [0] unknown, [1..4] classes
    bool exhaustive = false;
    double frequency(int label) const {
        return samples ? static_cast<double>(counts.at(label)) / samples : 0.0;
    }
};

// Uniform seeded sampling of inputs of length n (exact first and last cells
// non-blank is not imposed: cells are uniform over the alphabet, so the
// effective window may be shorter). Switches to exhaustive enumeration when
// alphabet^n <= samples. Deterministic for a fixed seed.
ClassDistribution estimate_class_distribution(const CaRule& rule, std::size_t n,
                                              std::uint64_t samples, std::uint64_t seed,
                                              std::uint64_t horizon);

std::string distribution_csv(const ClassDistribution& d);

// Deterministic splittable generator for the sample streams.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

  private:
    std::uint64_t state_;
};

Configuration random_configuration(const AlphabetPtr& a, std::size_t n, SampleRng& rng);

}  // namespace cagrow
