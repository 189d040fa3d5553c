#pragma once

#include <stdexcept>

#include "succession/freq.hpp"
#include "succession/law.hpp"

namespace succession {

/// Thrown when a law has no closed-form string probability.
struct NoClosedFormError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A probability carried in base-2 log domain.
struct LogProbability {
    double log2_value;

    explicit LogProbability(double v);
    double prob() const;
};

/// log2 of n! / prod n_i! — the number of strings realizing fv.
double multinomial_log2(const FrequencyVector& fv);

// log2 probability of any single string realizing fv. Closed forms exist
// for Laplace, Lidstone, the subsets and cardinality laws, and the two
// discounting models; other laws raise NoClosedFormError. The linear-
// discounting form assumes the canonical symbol order in which all q
// distinct symbols appear before any repeat (the product of its
// conditionals is order-dependent; see the codec for arbitrary orders).
LogProbability string_logprob(const FrequencyVector& fv, const SuccessionLaw& law);

/// log2 probability mass of all strings realizing fv.
LogProbability freqvec_logprob(const FrequencyVector& fv, const SuccessionLaw& law);

// Conditional probability of symbol i derived purely from a prior's string
// probabilities: the odds that i extends the string relative to any symbol.
// For the four prior-based laws this reproduces the direct conditionals.
double conditional_from_prior(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law);
double count_conditional_from_prior(const FrequencyVector& fv, std::uint64_t observed_count,
                                    const SuccessionLaw& law);

/// All length-n strings over a b-symbol sub-alphabet of a k-symbol alphabet.
struct SubsetScenario {
    std::uint64_t k;
    std::uint64_t b;
    std::uint64_t n;
    SuccessionLaw law;
};

// log2 of the total probability the law assigns to the scenario's possible
// set. Supports Laplace, Lidstone, and the subsets/cardinality laws.
LogProbability possible_set_logprob(const SubsetScenario& scenario);

// The q = b stratum of the cardinality law's possible-set total,
// 1 / (min(k,n) * C(k,b)): the dominant, n-independent part for n >= k.
LogProbability cardinality_dominant_stratum_logprob(std::uint64_t k, std::uint64_t b,
                                                    std::uint64_t n);

/// string_logprob(fv, a) - string_logprob(fv, b), in bits.
double log_ratio_bits(const FrequencyVector& fv, const SuccessionLaw& a,
                      const SuccessionLaw& b);

}  // namespace succession
