#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "succession/freq.hpp"
#include "succession/law.hpp"

// Arbitrary-precision rational evaluation of every closed form in the
// library. This is the oracle mode: slow, exact, and independent of the
// double-precision hot path it is used to check. Intended for small
// problems (n up to a few hundred, k up to a few dozen); parameters given
// as doubles are converted to their exact dyadic rationals.
namespace succession::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of the double (doubles are dyadic rationals).
Rational rational_from_double(double x);

BigInt binomial(std::uint64_t n, std::uint64_t r);

/// n! / prod n_i! — the number of strings realizing the frequency vector.
BigInt multinomial(const FrequencyVector& fv);

/// Conditional probability of a symbol with the given current count.
Rational count_conditional(const FrequencyVector& fv, std::uint64_t observed_count,
                           const SuccessionLaw& law);

Rational conditional(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law);

// Total novel-symbol probability via the per-law closed forms (the same
// expressions the double path uses). Good-Turing's escape is f_1/n.
Rational escape_mass(const FrequencyVector& fv, const SuccessionLaw& law);

/// Total novel-symbol probability summed over the novel conditionals —
/// the independent route escape_mass is checked against.
Rational summed_novel_mass(const FrequencyVector& fv, const SuccessionLaw& law);

// Probability of any single string realizing fv, for the laws with a
// closed-form string probability: Laplace, Lidstone, the subsets and
// cardinality laws, and the two discounting models. Linear discounting is
// order-dependent; its closed form assumes the canonical order in which
// all q distinct symbols appear before any repeat. Throws
// priors-compatible std::domain_error for the other laws.
Rational string_prob(const FrequencyVector& fv, const SuccessionLaw& law);

/// Probability mass of all strings realizing fv.
Rational freqvec_prob(const FrequencyVector& fv, const SuccessionLaw& law);

// Conditional probability built from a prior's string probabilities:
// the odds of extending the string with symbol i relative to any symbol.
// The brute-force route the direct laws are checked against.
Rational conditional_from_prior(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law);
Rational count_conditional_from_prior(const FrequencyVector& fv, std::uint64_t observed_count,
                                      const SuccessionLaw& law);

// Total probability assigned to all strings of length n drawn from a
// b-symbol sub-alphabet of the k-symbol alphabet.
Rational possible_set_prob(std::uint64_t k, std::uint64_t b, std::uint64_t n,
                           const SuccessionLaw& law);

/// The q = b stratum of the cardinality law's possible-set total.
Rational cardinality_dominant_stratum(std::uint64_t k, std::uint64_t b, std::uint64_t n);

}  // namespace succession::exact
