#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

namespace succession {

/// A symbol is identified only by its index in [0, k).
struct Symbol {
    std::uint64_t index = 0;
};

// Sufficient statistics of an observed symbol stream over an alphabet of
// size k: the per-symbol counts n_i, the total n, the attested count
// q = |{i : n_i > 0}|, the multi-attested count q' = |{i : n_i > 1}|, and
// the frequency-of-frequencies f_j = |{i : n_i = j}| (f_0 = k - q, never
// stored). Every estimation rule in this library is a function of these
// quantities alone.
//
// Counts are stored densely for small alphabets and sparsely for large
// ones. A vector may also be built from aggregate statistics only (see
// from_frequency_of_frequencies); such a vector answers every aggregate
// query but cannot be observed into or queried per symbol.
class FrequencyVector {
public:
    /// All-zero vector over an alphabet of size k (k >= 1).
    explicit FrequencyVector(std::uint64_t alphabet_size);

    /// Builds a vector from explicit counts. counts may be shorter than k
    /// (missing entries are zero). Rejects negative entries and more
    /// entries than k.
    static FrequencyVector from_counts(std::uint64_t alphabet_size,
                                       std::span<const std::int64_t> counts);
    static FrequencyVector from_counts(std::uint64_t alphabet_size,
                                       std::initializer_list<std::int64_t> counts);

    // Builds a vector from aggregate statistics {j -> f_j}, j >= 1, without
    // materializing per-symbol counts. Intended for alphabet-scale analysis
    // (k up to 2^32) where the counts themselves are out of reach.
    static FrequencyVector from_frequency_of_frequencies(
        std::uint64_t alphabet_size, const std::map<std::uint64_t, std::uint64_t>& fof);

    /// Records one more occurrence of symbol i. Constant expected time.
    void observe(Symbol i);

    std::uint64_t alphabet_size() const { return k_; }
    std::uint64_t total() const { return n_; }            // n
    std::uint64_t attested() const { return q_; }         // q
    std::uint64_t multi_attested() const { return q_prime_; }  // q'

    /// n_i. Requires materialized counts.
    std::uint64_t count(Symbol i) const;

    /// f_j for j >= 1; f_0 is alphabet_size() - attested().
    std::uint64_t count_of_count(std::uint64_t j) const;
    std::uint64_t novel_count() const { return k_ - q_; }  // f_0

    const std::map<std::uint64_t, std::uint64_t>& frequency_of_frequencies() const {
        return fof_;
    }

    bool counts_materialized() const { return materialized_; }

    // n * H({n_i / n}) = sum over attested i of n_i * log2(n / n_i), in bits.
    // Zero when n == 0 or a single symbol is attested.
    double empirical_entropy_bits() const;

private:
    FrequencyVector() = default;

    std::uint64_t k_ = 0;
    std::uint64_t n_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t q_prime_ = 0;
    std::map<std::uint64_t, std::uint64_t> fof_;

    // Dense storage for small alphabets, sparse beyond.
    static constexpr std::uint64_t kDenseLimit = 1u << 20;
    bool materialized_ = true;
    std::vector<std::uint64_t> dense_;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_;

    void bump(std::uint64_t old_count);
};

}  // namespace succession
