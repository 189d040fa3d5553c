#pragma once

#include <cstdint>
#include <vector>

#include "succession/freq.hpp"
#include "succession/law.hpp"

namespace succession {

/// A byte stream to be coded over an alphabet of size k (k >= 256 covers
/// every byte; smaller k is allowed when the stream only uses symbols < k).
using SymbolStream = std::vector<std::uint8_t>;

// Result of coding one stream under one law: the analytic codelength
// (sum of -log2 of each conditional), its whole-byte size, the empirical
// entropy of the final frequency vector, and the score in whole bytes
// relative to that entropy.
struct CodelengthReport {
    SuccessionLaw law;
    double bits = 0.0;
    std::uint64_t bytes_ceil = 0;         // ceil(bits / 8)
    double entropy_bits = 0.0;            // n * H({n_i/n})
    std::uint64_t entropy_bytes_ceil = 0; // ceil(entropy_bits / 8)
    std::int64_t score_bytes = 0;         // bytes_ceil - entropy_bytes_ceil
    std::uint64_t attested = 0;           // q of the final vector
    std::uint64_t length = 0;             // n
};

// Codes the stream symbol by symbol: at each position the law's conditional
// for the next symbol is charged -log2 p and the symbol is then observed.
// Starts from the all-zero frequency vector. Good-Turing is rejected (its
// estimates do not normalize); symbols >= alphabet_size are rejected.
CodelengthReport evaluate_stream(const SymbolStream& stream, const SuccessionLaw& law,
                                 std::uint64_t alphabet_size);

struct CurvePoint {
    std::uint64_t t;  // symbols coded
    double bits;      // cumulative codelength
};

// Cumulative codelength sampled every `stride` symbols (plus the final
// point). Monotone non-decreasing in t.
std::vector<CurvePoint> emit_curve(const SymbolStream& stream, const SuccessionLaw& law,
                                   std::uint64_t alphabet_size, std::uint64_t stride);

/// A stream of `days` copies of the byte '1' — one successful sunrise per day.
SymbolStream synthesize_sunrise(std::uint64_t days);

}  // namespace succession
