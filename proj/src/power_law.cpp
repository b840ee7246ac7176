#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include "sptree/error.hpp"
#include "sptree/parallel.hpp"
#include "sptree/rng.hpp"
#include "sptree/stats_fit.hpp"

namespace sptree {

namespace {

constexpr double kGammaFloor = 1.0 + 1e-6;
constexpr double kGammaCeiling = 60.0;

/// zeta(s, q) * q^s = sum_k (q / (q + k))^s, summed directly. Only used when
/// q^-s would underflow, where the terms decay quickly.
double scaled_zeta_direct(double s, double q) {
    double sum = 0.0;
    for (double k = 0.0; k < 1e7; k += 1.0) {
        const double term = std::exp(-s * std::log1p(k / q));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

}  // namespace

double log_hurwitz_zeta(double s, double q) {
    if (!(s > 1.0) || !(q >= 1.0)) throw InvalidArgument("hurwitz zeta needs s > 1 and q >= 1");
    if (s * std::log(q) < 600.0) {
        static const gsl_error_handler_t* previous = gsl_set_error_handler_off();
        (void)previous;
        gsl_sf_result result;
        if (gsl_sf_hzeta_e(s, q, &result) == GSL_SUCCESS && result.val > 0.0) return std::log(result.val);
    }
    return -s * std::log(q) + std::log(scaled_zeta_direct(s, q));
}

double power_law_mle(std::span<const std::uint64_t> tail, std::uint64_t k_min) {
    if (tail.empty()) throw InvalidArgument("power-law fit of an empty tail");
    const auto n = static_cast<double>(tail.size());
    double sum_log = 0.0;
    double sum_log_shifted = 0.0;
    const double shifted = static_cast<double>(k_min) - 0.5;
    for (std::uint64_t k : tail) {
        sum_log += std::log(static_cast<double>(k));
        sum_log_shifted += std::log(static_cast<double>(k) / shifted);
    }
    if (sum_log_shifted <= 0.0) throw InvalidArgument("power-law fit of a degenerate tail");
    // continuous approximation centres the search bracket
    const double guess = 1.0 + n / sum_log_shifted;
    const double upper = std::min(kGammaCeiling, std::max(3.0 * guess, guess + 5.0));
    const double qmin = static_cast<double>(k_min);
    auto negative_log_likelihood = [&](double gamma) { return gamma * sum_log + n * log_hurwitz_zeta(gamma, qmin); };
    const auto [gamma, value] =
        boost::math::tools::brent_find_minima(negative_log_likelihood, kGammaFloor, upper, 40);
    (void)value;
    return gamma;
}

double power_law_ks(std::span<const std::uint64_t> tail, std::uint64_t k_min, double gamma) {
    const auto n = static_cast<double>(tail.size());
    const double log_norm = log_hurwitz_zeta(gamma, static_cast<double>(k_min));
    auto cdf = [&](std::uint64_t k) {
        return -std::expm1(log_hurwitz_zeta(gamma, static_cast<double>(k) + 1.0) - log_norm);
    };
    double worst = 0.0;
    std::size_t i = 0;
    while (i < tail.size()) {
        const std::uint64_t value = tail[i];
        std::size_t j = i;
        while (j < tail.size() && tail[j] == value) ++j;
        const double empirical = static_cast<double>(j) / n;
        // step function: check just after the jump and just before the next one
        if (i == 0 && value > k_min) worst = std::max(worst, cdf(value - 1));
        worst = std::max(worst, std::abs(empirical - cdf(value)));
        if (j < tail.size() && tail[j] > value + 1) {
            worst = std::max(worst, std::abs(empirical - cdf(tail[j] - 1)));
        }
        i = j;
    }
    return worst;
}

TailFit fit_power_law_tail(std::span<const std::uint64_t> samples) {
    std::vector<std::uint64_t> sorted;
    sorted.reserve(samples.size());
    for (std::uint64_t k : samples) {
        if (k > 0) sorted.push_back(k);
    }
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || sorted.front() == sorted.back()) {
        throw InvalidArgument("power-law fit needs at least two distinct positive values");
    }

    const std::size_t total = sorted.size();
    const auto min_tail = static_cast<std::size_t>(std::ceil(kMinTailFraction * static_cast<double>(total)));
    TailFit best;
    bool found = false;
    std::size_t start = 0;
    for (std::size_t candidate = 0; candidate < kMaxCutoffCandidates; ++candidate) {
        const std::uint64_t k_min = sorted[start];
        if (k_min == sorted.back()) break;
        const std::size_t n_tail = total - start;
        if (n_tail < min_tail) break;
        const std::span<const std::uint64_t> tail(sorted.data() + start, n_tail);
        const double gamma = power_law_mle(tail, k_min);
        const double ks = power_law_ks(tail, k_min, gamma);
        if (!found || ks < best.ks_stat) {
            best = {gamma, k_min, ks, n_tail};
            found = true;
        }
        start = static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), k_min) - sorted.begin());
    }
    return best;
}

namespace {

/// Inverse-CDF sampler for the fitted law: a cumulative table for the head and
/// the continuous approximation beyond it.
class DiscretePowerLawSampler {
public:
    DiscretePowerLawSampler(double gamma, std::uint64_t k_min) : gamma_(gamma), k_min_(k_min) {
        constexpr std::size_t kMaxTable = std::size_t{1} << 18;
        const double log_norm = log_hurwitz_zeta(gamma, static_cast<double>(k_min));
        double cumulative = 0.0;
        for (std::size_t i = 0; i < kMaxTable; ++i) {
            const double k = static_cast<double>(k_min + i);
            cumulative += std::exp(-gamma * std::log(k) - log_norm);
            cdf_.push_back(cumulative);
            if (1.0 - cumulative < 1e-12) break;
        }
        last_ = k_min_ + cdf_.size() - 1;
    }

    template <class Engine>
    std::uint64_t operator()(Engine& rng) const {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double u = unit(rng);
        if (u < cdf_.back()) {
            const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
            return k_min_ + static_cast<std::uint64_t>(it - cdf_.begin());
        }
        const double v = 1.0 - unit(rng);
        const double x = (static_cast<double>(last_) + 0.5) * std::pow(v, -1.0 / (gamma_ - 1.0));
        const double k = std::floor(x + 0.5);
        if (!(k < 1e18)) return static_cast<std::uint64_t>(1e18);
        return std::max<std::uint64_t>(last_ + 1, static_cast<std::uint64_t>(k));
    }

private:
    double gamma_;
    std::uint64_t k_min_;
    std::uint64_t last_ = 0;
    std::vector<double> cdf_;
};

}  // namespace

PowerLawFit fit_power_law(std::span<const std::uint64_t> samples, std::size_t bootstraps, std::uint64_t seed,
                          std::size_t threads) {
    const TailFit observed = fit_power_law_tail(samples);

    std::vector<std::uint64_t> positive;
    std::vector<std::uint64_t> below;
    for (std::uint64_t k : samples) {
        if (k == 0) continue;
        positive.push_back(k);
        if (k < observed.k_min) below.push_back(k);
    }

    PowerLawFit fit;
    fit.gamma = observed.gamma;
    fit.k_min = observed.k_min;
    fit.ks_stat = observed.ks_stat;
    fit.n_tail = observed.n_tail;
    fit.n_samples = positive.size();
    fit.bootstraps = bootstraps;
    fit.low_power = positive.size() < kLowPowerSamples;

    if (bootstraps > 0) {
        const DiscretePowerLawSampler sampler(observed.gamma, observed.k_min);
        const double tail_probability = static_cast<double>(observed.n_tail) / static_cast<double>(positive.size());
        std::vector<char> at_least_as_bad(bootstraps, 0);
        parallel_chunks(bootstraps, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
            std::vector<std::uint64_t> replicate(positive.size());
            for (std::size_t b = begin; b < end; ++b) {
                Rng rng(derive_seed(seed, b));
                std::bernoulli_distribution from_tail(tail_probability);
                std::uniform_int_distribution<std::size_t> pick_below(0, below.empty() ? 0 : below.size() - 1);
                for (auto& k : replicate) {
                    k = (below.empty() || from_tail(rng)) ? sampler(rng) : below[pick_below(rng)];
                }
                double ks = 0.0;
                try {
                    ks = fit_power_law_tail(replicate).ks_stat;
                } catch (const InvalidArgument&) {
                    ks = 0.0;  // degenerate replicate counts against plausibility
                }
                at_least_as_bad[b] = ks >= observed.ks_stat ? 1 : 0;
            }
        });
        const auto hits = static_cast<double>(std::count(at_least_as_bad.begin(), at_least_as_bad.end(), 1));
        fit.p_value = hits / static_cast<double>(bootstraps);
        fit.p_value_stderr = std::sqrt(fit.p_value * (1.0 - fit.p_value) / static_cast<double>(bootstraps));
    }
    fit.plausible = fit.p_value >= kPlausibilityThreshold;
    return fit;
}

}  // namespace sptree
