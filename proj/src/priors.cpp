#include "succession/priors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace succession {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log2_gamma(double x) { return std::lgamma(x) / kLn2; }

double log2_factorial(std::uint64_t m) { return log2_gamma(static_cast<double>(m) + 1.0); }

double log2_binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return -std::numeric_limits<double>::infinity();
    return log2_factorial(n) - log2_factorial(r) - log2_factorial(n - r);
}

/// log2 sum of exp2 terms, stable against the largest term.
double log2_sum_exp2(const std::vector<double>& terms) {
    const double top = *std::max_element(terms.begin(), terms.end());
    if (!std::isfinite(top)) return top;
    double acc = 0.0;
    for (double t : terms) acc += std::exp2(t - top);
    return top + std::log2(acc);
}

// log2 of the number of nonempty subsets of size at most m of a k-symbol
// alphabet: sum_{i=1}^{m} C(k, i). Equals 2^k - 1 when m = k.
double log2_subsets_norm(std::uint64_t k, std::uint64_t m) {
    if (m == k) {
        if (k >= 64) return static_cast<double>(k);  // 2^k - 1 to double precision
        return std::log2(static_cast<double>((std::uint64_t{1} << k) - 1));
    }
    std::vector<double> terms;
    terms.reserve(m);
    for (std::uint64_t i = 1; i <= m; ++i) terms.push_back(log2_binomial(k, i));
    return log2_sum_exp2(terms);
}

}  // namespace

LogProbability::LogProbability(double v) {
    // Tolerate log-domain rounding right at probability one.
    if (v > 0.0) {
        if (v > 1e-9) throw std::logic_error("log-probability above one");
        v = 0.0;
    }
    log2_value = v;
}

double LogProbability::prob() const { return std::exp2(log2_value); }

double multinomial_log2(const FrequencyVector& fv) {
    double lg = log2_factorial(fv.total());
    for (const auto& [j, f] : fv.frequency_of_frequencies())
        lg -= static_cast<double>(f) * log2_factorial(j);
    return lg;
}

LogProbability string_logprob(const FrequencyVector& fv, const SuccessionLaw& law) {
    const std::uint64_t n = fv.total();
    const std::uint64_t k = fv.alphabet_size();
    const std::uint64_t q = fv.attested();
    if (n == 0) throw std::domain_error("string probability needs at least one symbol");
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    switch (law.kind()) {
        case LawKind::laplace:
            return LogProbability(-log2_binomial(n + k - 1, k - 1) - multinomial_log2(fv));
        case LawKind::lidstone: {
            const double lambda = law.lambda();
            double lg = log2_gamma(kd * lambda) - log2_gamma(nd + kd * lambda);
            for (const auto& [j, f] : fv.frequency_of_frequencies())
                lg += static_cast<double>(f) *
                      (log2_gamma(static_cast<double>(j) + lambda) - log2_gamma(lambda));
            return LogProbability(lg);
        }
        case LawKind::uniform_subsets:
            return LogProbability(-log2_subsets_norm(k, std::min(k, n)) -
                                  log2_binomial(n - 1, q - 1) - multinomial_log2(fv));
        case LawKind::natural_cardinality:
            return LogProbability(-std::log2(static_cast<double>(std::min(k, n))) -
                                  log2_binomial(k, q) - log2_binomial(n - 1, q - 1) -
                                  multinomial_log2(fv));
        case LawKind::absolute_discount: {
            const double delta = law.delta();
            double lg = static_cast<double>(q - 1) * std::log2(delta) + log2_factorial(q - 1) +
                        log2_factorial(k - q) - log2_factorial(k) - log2_factorial(n - 1);
            for (const auto& [j, f] : fv.frequency_of_frequencies())
                lg += static_cast<double>(f) *
                      (log2_gamma(static_cast<double>(j) - delta) - log2_gamma(1.0 - delta));
            return LogProbability(lg);
        }
        case LawKind::linear_discount: {
            // Canonical order: all q distinct symbols before any repeat.
            const double alpha = law.alpha();
            double lg = static_cast<double>(q - 1) * std::log2(alpha) +
                        static_cast<double>(n - q) * std::log2(1.0 - alpha) +
                        log2_factorial(q - 1) + log2_factorial(k - q) - log2_factorial(k) -
                        log2_factorial(n - 1);
            for (const auto& [j, f] : fv.frequency_of_frequencies())
                lg += static_cast<double>(f) * log2_factorial(j - 1);
            return LogProbability(lg);
        }
        default:
            throw NoClosedFormError("law has no closed-form string probability: " + law.name());
    }
}

LogProbability freqvec_logprob(const FrequencyVector& fv, const SuccessionLaw& law) {
    return LogProbability(string_logprob(fv, law).log2_value + multinomial_log2(fv));
}

namespace {

double extended_string_logprob(const FrequencyVector& fv, std::uint64_t promoted_count,
                               const SuccessionLaw& law) {
    std::vector<std::int64_t> counts;
    counts.reserve(fv.attested() + 1);
    bool promoted = false;
    for (const auto& [j, f] : fv.frequency_of_frequencies())
        for (std::uint64_t i = 0; i < f; ++i) {
            if (!promoted && j == promoted_count) {
                counts.push_back(static_cast<std::int64_t>(j) + 1);
                promoted = true;
            } else {
                counts.push_back(static_cast<std::int64_t>(j));
            }
        }
    if (promoted_count == 0) {
        counts.push_back(1);
        promoted = true;
    }
    if (!promoted) throw std::invalid_argument("no symbol has the requested count");
    return string_logprob(FrequencyVector::from_counts(fv.alphabet_size(), counts), law)
        .log2_value;
}

}  // namespace

double count_conditional_from_prior(const FrequencyVector& fv, std::uint64_t observed_count,
                                    const SuccessionLaw& law) {
    const double numerator = extended_string_logprob(fv, observed_count, law);
    std::vector<double> terms;
    for (const auto& [j, f] : fv.frequency_of_frequencies())
        terms.push_back(std::log2(static_cast<double>(f)) +
                        extended_string_logprob(fv, j, law));
    if (fv.novel_count() > 0)
        terms.push_back(std::log2(static_cast<double>(fv.novel_count())) +
                        extended_string_logprob(fv, 0, law));
    return std::exp2(numerator - log2_sum_exp2(terms));
}

double conditional_from_prior(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law) {
    return count_conditional_from_prior(fv, fv.count(i), law);
}

LogProbability possible_set_logprob(const SubsetScenario& scenario) {
    const auto [k, b, n, law] = scenario;
    if (b < 1 || b > k || n < 1) throw std::invalid_argument("bad possible-set scenario");
    switch (law.kind()) {
        case LawKind::laplace:
            return LogProbability(log2_binomial(n + b - 1, b - 1) -
                                  log2_binomial(n + k - 1, k - 1));
        case LawKind::lidstone: {
            const double lambda = law.lambda();
            const double bl = static_cast<double>(b) * lambda;
            const double kl = static_cast<double>(k) * lambda;
            const double nd = static_cast<double>(n);
            return LogProbability(log2_gamma(nd + bl) - log2_gamma(bl) - log2_gamma(nd + kl) +
                                  log2_gamma(kl));
        }
        case LawKind::natural_cardinality: {
            std::vector<double> strata;
            for (std::uint64_t q = 1; q <= std::min(b, n); ++q)
                strata.push_back(log2_binomial(b, q) -
                                 std::log2(static_cast<double>(std::min(k, n))) -
                                 log2_binomial(k, q));
            return LogProbability(log2_sum_exp2(strata));
        }
        case LawKind::uniform_subsets: {
            std::vector<double> strata;
            for (std::uint64_t q = 1; q <= std::min(b, n); ++q)
                strata.push_back(log2_binomial(b, q));
            return LogProbability(log2_sum_exp2(strata) - log2_subsets_norm(k, std::min(k, n)));
        }
        default:
            throw std::domain_error("possible-set total not defined for law " + law.name());
    }
}

LogProbability cardinality_dominant_stratum_logprob(std::uint64_t k, std::uint64_t b,
                                                    std::uint64_t n) {
    if (b < 1 || b > k || n < b) throw std::invalid_argument("bad dominant-stratum scenario");
    return LogProbability(-std::log2(static_cast<double>(std::min(k, n))) - log2_binomial(k, b));
}

double log_ratio_bits(const FrequencyVector& fv, const SuccessionLaw& a,
                      const SuccessionLaw& b) {
    return string_logprob(fv, a).log2_value - string_logprob(fv, b).log2_value;
}

}  // namespace succession
