#include "succession/freq.hpp"

#include <cmath>
#include <stdexcept>

namespace succession {

FrequencyVector::FrequencyVector(std::uint64_t alphabet_size) {
    if (alphabet_size == 0)
        throw std::invalid_argument("alphabet size must be at least 1");
    k_ = alphabet_size;
    if (k_ <= kDenseLimit) dense_.assign(k_, 0);
}

FrequencyVector FrequencyVector::from_counts(std::uint64_t alphabet_size,
                                             std::span<const std::int64_t> counts) {
    if (counts.size() > alphabet_size)
        throw std::invalid_argument("more counts than alphabet symbols");
    FrequencyVector fv(alphabet_size);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const std::int64_t c = counts[i];
        if (c < 0) throw std::invalid_argument("negative count");
        if (c == 0) continue;
        const auto u = static_cast<std::uint64_t>(c);
        if (fv.dense_.empty())
            fv.sparse_[i] = u;
        else
            fv.dense_[i] = u;
        fv.n_ += u;
        fv.q_ += 1;
        if (u > 1) fv.q_prime_ += 1;
        fv.fof_[u] += 1;
    }
    return fv;
}

FrequencyVector FrequencyVector::from_counts(std::uint64_t alphabet_size,
                                             std::initializer_list<std::int64_t> counts) {
    return from_counts(alphabet_size, std::span<const std::int64_t>(counts.begin(), counts.size()));
}

FrequencyVector FrequencyVector::from_frequency_of_frequencies(
    std::uint64_t alphabet_size, const std::map<std::uint64_t, std::uint64_t>& fof) {
    FrequencyVector fv(alphabet_size);
    fv.materialized_ = false;
    fv.dense_.clear();
    for (const auto& [j, f] : fof) {
        if (j == 0) throw std::invalid_argument("f_0 is derived, not stored");
        if (f == 0) continue;
        fv.fof_[j] = f;
        fv.q_ += f;
        if (j > 1) fv.q_prime_ += f;
        fv.n_ += j * f;
    }
    if (fv.q_ > alphabet_size)
        throw std::invalid_argument("more attested symbols than alphabet symbols");
    return fv;
}

void FrequencyVector::bump(std::uint64_t old_count) {
    if (old_count > 0) {
        auto it = fof_.find(old_count);
        if (--it->second == 0) fof_.erase(it);
    } else {
        q_ += 1;
    }
    if (old_count == 1) q_prime_ += 1;
    fof_[old_count + 1] += 1;
    n_ += 1;
}

void FrequencyVector::observe(Symbol i) {
    if (i.index >= k_) throw std::out_of_range("symbol outside alphabet");
    if (!materialized_)
        throw std::logic_error("cannot observe into an aggregate-only frequency vector");
    std::uint64_t old = 0;
    if (!dense_.empty()) {
        old = dense_[i.index]++;
    } else {
        old = sparse_[i.index]++;
    }
    bump(old);
}

std::uint64_t FrequencyVector::count(Symbol i) const {
    if (i.index >= k_) throw std::out_of_range("symbol outside alphabet");
    if (!materialized_)
        throw std::logic_error("per-symbol counts unavailable in an aggregate-only vector");
    if (!dense_.empty()) return dense_[i.index];
    auto it = sparse_.find(i.index);
    return it == sparse_.end() ? 0 : it->second;
}

std::uint64_t FrequencyVector::count_of_count(std::uint64_t j) const {
    if (j == 0) return novel_count();
    auto it = fof_.find(j);
    return it == fof_.end() ? 0 : it->second;
}

double FrequencyVector::empirical_entropy_bits() const {
    if (n_ == 0 || q_ <= 1) return 0.0;
    // Sum over count classes; identical to the per-symbol sum.
    const double n = static_cast<double>(n_);
    double bits = 0.0;
    for (const auto& [j, f] : fof_) {
        const double c = static_cast<double>(j);
        bits += static_cast<double>(f) * c * std::log2(n / c);
    }
    return bits;
}

}  // namespace succession
