#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "succession/freq.hpp"
#include "succession/law.hpp"

// Exhaustive self-checks pitting independent computation routes against
// each other: per-symbol estimates must sum to one, prior-derived
// conditionals must match the direct laws, closed-form escape masses must
// match summed novel conditionals, and per-string probabilities must sum
// to one over all strings. Exposed through the `oracle` CLI subcommand.
namespace succession::oracle {

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    double max_rel_error = 0.0;          // double-path suites only
    std::vector<std::string> samples;    // first few failure descriptions
    bool passed() const { return failures == 0; }
};

/// Every count vector of length k summing to n, in lexicographic order.
void for_each_composition(std::uint64_t k, std::uint64_t n,
                          const std::function<void(std::span<const std::int64_t>)>& fn);

/// The parametrized law set the suites run over (Good-Turing excluded).
std::vector<SuccessionLaw> standard_laws();

// Double path: conditionals over the whole alphabet sum to 1 within
// rel_tol, exhaustively for k <= max_k, n <= max_n plus random vectors
// with k in {2,3,5,256} and n up to 10^4.
SuiteResult normalization_suite(std::uint64_t max_k, std::uint64_t max_n,
                                std::uint64_t random_vectors, std::uint64_t seed = 20250509,
                                double rel_tol = 1e-9);

// Exact rational path: conditionals derived from prior string
// probabilities equal the direct closed-form laws, exhaustively.
SuiteResult prior_equivalence_suite(std::uint64_t max_k, std::uint64_t max_n);

/// Exact rational path: closed-form escape equals summed novel conditionals.
SuiteResult escape_consistency_suite(std::uint64_t max_k, std::uint64_t max_n);

// Exact rational path: per-string probabilities of the three uniform
// priors sum to exactly 1 over all k^n strings.
SuiteResult string_totality_suite(std::uint64_t max_k, std::uint64_t max_n);

/// All four suites at their standard sizes.
std::vector<SuiteResult> run_all(std::uint64_t max_k = 6, std::uint64_t max_n = 10,
                                 std::uint64_t totality_max_k = 4,
                                 std::uint64_t totality_max_n = 8,
                                 std::uint64_t random_vectors = 1000);

}  // namespace succession::oracle
