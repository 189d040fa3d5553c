#include "succession/render.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace succession {

namespace {

double round_bits(double bits) { return std::round(bits * 1000.0) / 1000.0; }

std::string plot_integer(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
}

std::string plot_cell(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) return plot_integer(v);
    return format_bits(v);
}

}  // namespace

std::string format_probability(double p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    return buf;
}

std::string format_bits(double bits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", bits);
    return buf;
}

std::string reports_tsv(std::span<const CodelengthReport> reports) {
    std::ostringstream out;
    out << "law\tn\tq\tbits\tbits_ceil\tbytes\tentropy_bits\tentropy_bytes\tscore\n";
    for (const auto& r : reports) {
        out << r.law.name() << '\t' << r.length << '\t' << r.attested << '\t'
            << format_bits(r.bits) << '\t' << static_cast<std::uint64_t>(std::ceil(r.bits))
            << '\t' << r.bytes_ceil << '\t' << format_bits(r.entropy_bits) << '\t'
            << r.entropy_bytes_ceil << '\t' << r.score_bytes << '\n';
    }
    return out.str();
}

std::string reports_json(std::span<const CodelengthReport> reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back({{"law", r.law.name()},
                       {"n", r.length},
                       {"q", r.attested},
                       {"bits", round_bits(r.bits)},
                       {"bits_ceil", static_cast<std::uint64_t>(std::ceil(r.bits))},
                       {"bytes", r.bytes_ceil},
                       {"entropy_bits", round_bits(r.entropy_bits)},
                       {"entropy_bytes", r.entropy_bytes_ceil},
                       {"score", r.score_bytes}});
    }
    return arr.dump(2) + "\n";
}

std::string corpus_tsv(const CorpusRunResult& result) {
    std::ostringstream out;
    out << "file\tsize\tq\tentropy_bytes";
    for (const auto& law : result.laws) out << '\t' << law.name();
    out << '\n';
    for (const auto& row : result.rows) {
        out << row.name << '\t' << row.size_bytes << '\t' << row.attested << '\t'
            << row.entropy_bytes_ceil;
        for (const auto& report : row.reports) out << '\t' << report.score_bytes;
        out << '\n';
    }
    out << "total\t" << result.total_size << "\t-\t" << result.total_entropy_bytes;
    for (auto score : result.total_scores) out << '\t' << score;
    out << '\n';
    return out.str();
}

std::string corpus_json(const CorpusRunResult& result) {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& row : result.rows) {
        nlohmann::json scores;
        for (std::size_t i = 0; i < result.laws.size(); ++i)
            scores[result.laws[i].name()] = row.reports[i].score_bytes;
        files.push_back({{"file", row.name},
                         {"size", row.size_bytes},
                         {"q", row.attested},
                         {"entropy_bytes", row.entropy_bytes_ceil},
                         {"scores", scores}});
    }
    nlohmann::json totals;
    for (std::size_t i = 0; i < result.laws.size(); ++i)
        totals[result.laws[i].name()] = result.total_scores[i];
    nlohmann::json doc = {{"files", files},
                          {"total_size", result.total_size},
                          {"total_entropy_bytes", result.total_entropy_bytes},
                          {"total_scores", totals},
                          {"skipped", result.skipped},
                          {"mismatches", result.mismatches},
                          {"ok", result.all_expectations_met}};
    return doc.dump(2) + "\n";
}

std::string plotdata_string(const PlotData& data) {
    std::ostringstream out;
    for (const auto& line : data.header) out << "# " << line << '\n';
    for (const auto& row : data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ' ';
            if (i < data.kinds.size()) {
                switch (data.kinds[i]) {
                    case ColumnKind::integer: out << plot_integer(row[i]); break;
                    case ColumnKind::bits: out << format_bits(row[i]); break;
                    case ColumnKind::probability: out << format_probability(row[i]); break;
                }
            } else {
                out << plot_cell(row[i]);
            }
        }
        out << '\n';
    }
    return out.str();
}

void emit_plotdata(const PlotData& data, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << plotdata_string(data);
}

}  // namespace succession
