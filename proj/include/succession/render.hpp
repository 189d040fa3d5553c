#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "succession/codec.hpp"
#include "succession/corpus.hpp"

namespace succession {

// Deterministic text output: probabilities carry 12 significant digits,
// bit counts 3 decimals, so identical requests render byte-identically.
std::string format_probability(double p);
std::string format_bits(double bits);

/// One row per report; columns law, n, q, bits, bytes, entropy_bits,
/// entropy_bytes, score.
std::string reports_tsv(std::span<const CodelengthReport> reports);
std::string reports_json(std::span<const CodelengthReport> reports);

/// Per-file rows plus a totals row, Table-1 style.
std::string corpus_tsv(const CorpusRunResult& result);
std::string corpus_json(const CorpusRunResult& result);

// Gnuplot-style data: '#'-prefixed header lines, then one whitespace-
// separated numeric row per entry. Column kinds pick the cell format;
// without kinds, integral values print as integers and fractional ones
// as bits.
enum class ColumnKind { integer, bits, probability };

struct PlotData {
    std::vector<std::string> header;
    std::vector<ColumnKind> kinds;  // optional; applied per column
    std::vector<std::vector<double>> rows;
};

std::string plotdata_string(const PlotData& data);
void emit_plotdata(const PlotData& data, const std::filesystem::path& path);

}  // namespace succession
