// Command-line front end: codelength evaluation, the sunrise experiment,
// benchmark-corpus runs, analysis curves, and the exhaustive oracle suites.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "succession/codec.hpp"
#include "succession/corpus.hpp"
#include "succession/laws.hpp"
#include "succession/oracle.hpp"
#include "succession/priors.hpp"
#include "succession/render.hpp"

namespace {

using namespace succession;

constexpr const char* kDefaultLaws = "natural,subsets,laplace,jp,a,b,c,d";

std::vector<SuccessionLaw> parse_laws(const std::string& list) {
    std::vector<SuccessionLaw> laws;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto token = list.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        if (!token.empty()) laws.push_back(SuccessionLaw::parse(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (laws.empty()) throw CLI::ValidationError("--laws", "no laws given");
    return laws;
}

SymbolStream read_stream(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return SymbolStream(std::istreambuf_iterator<char>(in), {});
}

void print_reports(const std::vector<CodelengthReport>& reports, const std::string& format) {
    if (format == "json")
        std::cout << reports_json(reports);
    else
        std::cout << reports_tsv(reports);
}

// Cumulative codelength per law plus the running empirical entropy,
// sampled every `stride` symbols. Columns: t, entropy_bits, bits per law.
PlotData curve_plotdata(const SymbolStream& stream, const std::vector<SuccessionLaw>& laws,
                        std::uint64_t k, std::uint64_t stride) {
    PlotData data;
    std::string columns = "columns: t entropy_bits";
    for (const auto& law : laws) columns += " " + law.name();
    data.header = {"cumulative codelength, alphabet size " + std::to_string(k) +
                       ", stride " + std::to_string(stride),
                   columns};
    data.kinds = {ColumnKind::integer, ColumnKind::bits};
    for (std::size_t i = 0; i < laws.size(); ++i) data.kinds.push_back(ColumnKind::bits);

    std::vector<std::vector<CurvePoint>> curves;
    for (const auto& law : laws) curves.push_back(emit_curve(stream, law, k, stride));

    // Running entropy at the same sample points.
    FrequencyVector fv(k);
    double sum_nlogn = 0.0;  // sum n_i log2 n_i
    std::vector<double> entropy;
    std::uint64_t t = 0;
    for (std::uint8_t b : stream) {
        const double c = static_cast<double>(fv.count(Symbol{b}));
        if (c > 0) sum_nlogn -= c * std::log2(c);
        sum_nlogn += (c + 1.0) * std::log2(c + 1.0);
        fv.observe(Symbol{b});
        ++t;
        if (t % stride == 0) {
            const double n = static_cast<double>(t);
            entropy.push_back(n * std::log2(n) - sum_nlogn);
        }
    }
    if (t % stride != 0 || t == 0) {
        const double n = static_cast<double>(t);
        entropy.push_back(t == 0 ? 0.0 : n * std::log2(n) - sum_nlogn);
    }

    for (std::size_t p = 0; p < curves.front().size(); ++p) {
        std::vector<double> row = {static_cast<double>(curves.front()[p].t), entropy[p]};
        for (const auto& curve : curves) row.push_back(curve[p].bits);
        data.rows.push_back(std::move(row));
    }
    return data;
}

void write_or_print_plotdata(const PlotData& data, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << plotdata_string(data);
    else
        emit_plotdata(data, path);
}

std::vector<std::int64_t> spread_counts(std::uint64_t q, std::uint64_t n) {
    std::vector<std::int64_t> counts(q, 0);
    for (std::uint64_t i = 0; i < q; ++i)
        counts[i] = static_cast<std::int64_t>(n / q + (i < n % q ? 1 : 0));
    return counts;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t from, std::uint64_t to,
                                          std::uint64_t points) {
    std::vector<std::uint64_t> grid;
    if (points < 2 || from >= to) return {from};
    const double ratio = std::pow(static_cast<double>(to) / from,
                                  1.0 / static_cast<double>(points - 1));
    double x = static_cast<double>(from);
    std::uint64_t last = 0;
    for (std::uint64_t i = 0; i < points; ++i, x *= ratio) {
        auto v = static_cast<std::uint64_t>(std::llround(x));
        v = std::min(std::max(v, from), to);
        if (v != last) grid.push_back(v);
        last = v;
    }
    return grid;
}

int run_corpus_command(const std::string& dir_flag, const std::string& manifest_path,
                       const std::string& law_list, const std::string& format, bool fetch,
                       const std::string& base_url, std::int64_t tolerance) {
    std::string dir = dir_flag;
    if (dir.empty()) {
        if (const char* env = std::getenv("SUCCESSION_CORPUS_DIR")) dir = env;
    }
    if (dir.empty()) {
        std::cerr << "corpus: no directory given (use --dir or SUCCESSION_CORPUS_DIR)\n";
        return 1;
    }
    const auto manifest = load_manifest(manifest_path);
    if (fetch) {
        if (base_url.empty()) {
            std::cerr << "corpus: --fetch needs --base-url\n";
            return 1;
        }
        const auto report = fetch_corpus(base_url, dir, manifest);
        std::cerr << "fetched " << report.fetched << " file(s), " << report.failed
                  << " failure(s)\n";
        for (const auto& err : report.errors) std::cerr << "  " << err << '\n';
        if (report.failed > 0) return 1;
    }
    const auto result = run_corpus(manifest, dir, parse_laws(law_list), tolerance);
    std::cout << (format == "json" ? corpus_json(result) : corpus_tsv(result));
    for (const auto& skipped : result.skipped) std::cerr << "skipped " << skipped << '\n';
    for (const auto& mismatch : result.mismatches) std::cerr << "mismatch " << mismatch << '\n';
    return result.all_expectations_met ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laws of succession: multinomial estimation and adaptive coding toolkit"};
    app.require_subcommand(1);

    std::string law_list = kDefaultLaws;
    std::string format = "tsv";
    std::uint64_t alphabet = 256;
    std::string curve_path;
    std::uint64_t stride = 1;

    // eval: code one file under each law.
    auto* eval = app.add_subcommand("eval", "codelength report for a file");
    std::string eval_file;
    eval->add_option("--file", eval_file, "input file")->required();
    eval->add_option("--laws,--law", law_list, "comma-separated laws");
    eval->add_option("--k", alphabet, "alphabet size");
    eval->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    eval->add_option("--curve", curve_path, "write cumulative-bits plot data ('-' = stdout)");
    eval->add_option("--stride", stride, "curve sample stride");

    // sunrise: synthesize the all-'1' history.
    auto* sunrise = app.add_subcommand("sunrise", "the sunrise prediction experiment");
    std::uint64_t days = 0;
    sunrise->add_option("--days", days, "days of recorded history")->required();
    sunrise->add_option("--laws,--law", law_list, "comma-separated laws");
    sunrise->add_option("--k", alphabet, "alphabet size");
    sunrise->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    sunrise->add_option("--curve", curve_path, "write cumulative-bits plot data");
    sunrise->add_option("--stride", stride, "curve sample stride");

    // corpus: verify, optionally fetch, evaluate, compare.
    auto* corpus = app.add_subcommand("corpus", "run the benchmark corpus");
    std::string corpus_dir, manifest_path = "data/calgary.tsv", base_url;
    bool fetch = false;
    std::int64_t tolerance = 2;
    corpus->add_option("--dir", corpus_dir, "corpus directory (or SUCCESSION_CORPUS_DIR)");
    corpus->add_option("--manifest", manifest_path, "manifest TSV");
    corpus->add_option("--laws,--law", law_list, "comma-separated laws");
    corpus->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    corpus->add_flag("--fetch", fetch, "download missing files first");
    corpus->add_option("--base-url", base_url, "fetch base URL");
    corpus->add_option("--tolerance", tolerance, "score tolerance in bytes");

    // analyze: ratio / escape / possible-set curves.
    auto* analyze = app.add_subcommand("analyze", "ratio, escape, and possible-set curves");
    std::string ratio_pair, escape_law, possible_law;
    std::uint64_t an_k = 256, an_q = 66, an_b = 2;
    std::uint64_t n_from = 1000, n_to = 1000000, points = 16;
    analyze->add_option("--ratio", ratio_pair, "two laws A:B for string log-ratio vs n");
    analyze->add_option("--escape", escape_law, "law for escape mass vs n");
    analyze->add_option("--possible-set", possible_law, "law for sub-alphabet total vs n");
    analyze->add_option("--k", an_k, "alphabet size");
    analyze->add_option("--q", an_q, "attested symbols (ratio/escape)");
    analyze->add_option("--b", an_b, "sub-alphabet size (possible-set)");
    analyze->add_option("--n-from", n_from);
    analyze->add_option("--n-to", n_to);
    analyze->add_option("--points", points, "geometric grid size");
    analyze->add_option("--out", curve_path, "output path ('-' = stdout)");

    // oracle: exhaustive self-checks.
    auto* oracle_cmd = app.add_subcommand("oracle", "run the exhaustive oracle suites");
    std::uint64_t max_k = 6, max_n = 10, tot_k = 4, tot_n = 8, random_vectors = 1000;
    oracle_cmd->add_option("--max-k", max_k);
    oracle_cmd->add_option("--max-n", max_n);
    oracle_cmd->add_option("--totality-k", tot_k);
    oracle_cmd->add_option("--totality-n", tot_n);
    oracle_cmd->add_option("--random", random_vectors, "random vectors for normalization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        if (eval->parsed()) {
            const auto laws = parse_laws(law_list);
            const auto stream = read_stream(eval_file);
            if (!curve_path.empty()) {
                write_or_print_plotdata(curve_plotdata(stream, laws, alphabet, stride),
                                        curve_path);
                return 0;
            }
            std::vector<CodelengthReport> reports;
            for (const auto& law : laws)
                reports.push_back(evaluate_stream(stream, law, alphabet));
            print_reports(reports, format);
            return 0;
        }
        if (sunrise->parsed()) {
            const auto laws = parse_laws(law_list);
            const auto stream = synthesize_sunrise(days);
            if (!curve_path.empty()) {
                write_or_print_plotdata(curve_plotdata(stream, laws, alphabet, stride),
                                        curve_path);
                return 0;
            }
            std::vector<CodelengthReport> reports;
            for (const auto& law : laws)
                reports.push_back(evaluate_stream(stream, law, alphabet));
            print_reports(reports, format);
            return 0;
        }
        if (corpus->parsed())
            return run_corpus_command(corpus_dir, manifest_path, law_list, format, fetch,
                                      base_url, tolerance);
        if (analyze->parsed()) {
            PlotData data;
            const auto grid = geometric_grid(n_from, n_to, points);
            if (!ratio_pair.empty()) {
                const auto colon = ratio_pair.find(':');
                // A:B, where A and B may themselves carry :param — split on
                // the first colon that separates two complete law names.
                SuccessionLaw a = SuccessionLaw::laplace(), b = SuccessionLaw::laplace();
                bool split_ok = false;
                for (std::size_t pos = colon; pos != std::string::npos;
                     pos = ratio_pair.find(':', pos + 1)) {
                    try {
                        a = SuccessionLaw::parse(ratio_pair.substr(0, pos));
                        b = SuccessionLaw::parse(ratio_pair.substr(pos + 1));
                        split_ok = true;
                        break;
                    } catch (const std::invalid_argument&) {
                    }
                }
                if (!split_ok) throw std::invalid_argument("--ratio wants A:B law names");
                data.header = {"string log-ratio " + a.name() + " over " + b.name() +
                                   ", k=" + std::to_string(an_k) + " q=" + std::to_string(an_q),
                               "columns: n log2_n ratio_bits"};
                data.kinds = {ColumnKind::integer, ColumnKind::bits, ColumnKind::bits};
                for (auto n : grid) {
                    if (n < an_q) continue;
                    const auto fv =
                        FrequencyVector::from_counts(an_k, spread_counts(an_q, n));
                    data.rows.push_back({static_cast<double>(n),
                                         std::log2(static_cast<double>(n)),
                                         log_ratio_bits(fv, a, b)});
                }
            } else if (!escape_law.empty()) {
                const auto law = SuccessionLaw::parse(escape_law);
                data.header = {"escape mass under " + law.name() + ", k=" + std::to_string(an_k) +
                                   " q=" + std::to_string(an_q),
                               "columns: n escape_probability escape_bits"};
                data.kinds = {ColumnKind::integer, ColumnKind::probability, ColumnKind::bits};
                for (auto n : grid) {
                    if (n < an_q) continue;
                    const auto fv =
                        FrequencyVector::from_counts(an_k, spread_counts(an_q, n));
                    const double escape = escape_mass(fv, law);
                    data.rows.push_back(
                        {static_cast<double>(n), escape, -std::log2(escape)});
                }
            } else if (!possible_law.empty()) {
                const auto law = SuccessionLaw::parse(possible_law);
                data.header = {"possible-set total under " + law.name() + ", k=" +
                                   std::to_string(an_k) + " b=" + std::to_string(an_b),
                               "columns: n log2_total"};
                data.kinds = {ColumnKind::integer, ColumnKind::bits};
                for (auto n : grid) {
                    const SubsetScenario scenario{an_k, an_b, n, law};
                    data.rows.push_back({static_cast<double>(n),
                                         possible_set_logprob(scenario).log2_value});
                }
            } else {
                throw std::invalid_argument(
                    "analyze wants one of --ratio, --escape, --possible-set");
            }
            write_or_print_plotdata(data, curve_path);
            return 0;
        }
        if (oracle_cmd->parsed()) {
            bool all_ok = true;
            const auto suites =
                oracle::run_all(max_k, max_n, tot_k, tot_n, random_vectors);
            for (const auto& suite : suites) {
                std::cout << suite.name << ": " << (suite.passed() ? "PASS" : "FAIL") << " ("
                          << suite.cases << " cases";
                if (suite.failures > 0) std::cout << ", " << suite.failures << " failed";
                std::cout << ")\n";
                for (const auto& sample : suite.samples) std::cout << "  " << sample << '\n';
                all_ok = all_ok && suite.passed();
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
