#pragma once

#include "succession/freq.hpp"
#include "succession/law.hpp"

namespace succession {

enum class SharpenedVariant { subsets, cardinality };
enum class PpmMethod { a, b, c, d };

// Conditional probability of one symbol under each estimation rule.
//
// Conventions shared by every rule:
//   * with no observations (n = 0) the estimate is uniform, 1/k;
//   * a rule that leaves probability mass with no recipient (all symbols
//     attested, or every symbol seen twice for method B) spreads the
//     leftover uniformly over the whole alphabet, keeping the estimates
//     normalized.
// Good-Turing is exposed verbatim and is the one rule whose estimates may
// fail to sum to one; good_turing_mass_deviation reports by how much.

/// (n_i + 1) / (n + k).
double laplace_conditional(const FrequencyVector& fv, Symbol i);

/// (n_i + lambda) / (n + k*lambda); lambda = 1/2 is the Jeffreys-Perks rule.
double lidstone_conditional(const FrequencyVector& fv, Symbol i, double lambda);

// Uniform-subsets law. With D = (n+q)(n+1-q) + q(k-q):
//   attested: (n_i + 1)(n + 1 - q) / D      novel: q / D
double subsets_conditional(const FrequencyVector& fv, Symbol i);

// Uniform-cardinality (natural) law:
//   q = k:    (n_i + 1) / (n + k)
//   attested: (n_i + 1)(n + 1 - q) / (n^2 + n + 2q)
//   novel:    q(q + 1) / ((k - q)(n^2 + n + 2q))
double natural_conditional(const FrequencyVector& fv, Symbol i);

// Sharpened variants of the two laws above: attested symbols move toward
// the maximum-likelihood estimate n_i/n while novel symbols keep the same
// total mass. Undefined at n = 0 (throws std::domain_error).
double sharpened_conditional(const FrequencyVector& fv, Symbol i, SharpenedVariant variant);

// The four escape methods of adaptive text compression. Attested symbols:
//   A: n_i/(n+1)   B: (n_i-1)/n for n_i >= 2   C: n_i/(n+q)   D: (n_i-1/2)/n
// Method B splits a q/n pool uniformly over symbols seen fewer than twice;
// A, C, D give each novel symbol an equal share of the escape mass.
double ppm_method_conditional(const FrequencyVector& fv, Symbol i, PpmMethod method);

// ((n_i + 1)/n) * f_{n_i+1}/f_{n_i}, with f_0 = k - q. Unnormalized; zero
// for any count class whose successor class is empty. Rejects novel-symbol
// queries when every symbol is attested (f_0 = 0).
double good_turing_conditional(const FrequencyVector& fv, Symbol i);

// Ney-Essen discounting. law must be absolute_discount (attested
// (n_i - delta)/n, novel q*delta/(n(k-q))) or linear_discount (attested
// (1-alpha) n_i/n, novel alpha/(k-q)).
double discount_conditional(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law);

/// Dispatch on law kind.
double conditional(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law);

// Same as conditional() but keyed by the symbol's current count rather than
// its identity (observed_count = 0 means a novel symbol). The rules depend
// on the symbol only through its count, so this is the primitive form; it
// also works for aggregate-only frequency vectors.
double count_conditional(const FrequencyVector& fv, std::uint64_t observed_count,
                         const SuccessionLaw& law);

// Total probability the law grants all novel symbols. Equals the summed
// novel-symbol conditionals for every law but Good-Turing, whose escape is
// f_1/n by definition. 1 when n = 0; 0 when every symbol is attested
// (except Good-Turing).
double escape_mass(const FrequencyVector& fv, const SuccessionLaw& law);

/// |1 - sum of Good-Turing estimates over the whole alphabet|.
double good_turing_mass_deviation(const FrequencyVector& fv);

}  // namespace succession
