#include "succession/corpus.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace succession {

namespace {

const std::vector<std::string> kDefaultScoreOrder = {"natural", "subsets", "laplace", "jp",
                                                     "a",       "b",       "c",       "d"};

bool is_hex64(const std::string& s) {
    return s.size() == 64 &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c); });
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

template <typename Int>
Int parse_int(const std::string& text, const char* what, int line_no) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error("manifest line " + std::to_string(line_no) + ": bad " + what +
                                 " '" + text + "'");
    return value;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes(std::istreambuf_iterator<char>(in), {});
    return bytes;
}

}  // namespace

CorpusManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest " + path.string());

    CorpusManifest manifest;
    std::vector<std::string> score_order = kDefaultScoreOrder;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            // "#scores: law law ..." names the score columns.
            static const std::string tag = "#scores:";
            if (line.rfind(tag, 0) == 0) {
                score_order.clear();
                std::istringstream names(line.substr(tag.size()));
                std::string name;
                while (names >> name) score_order.push_back(name);
            }
            continue;
        }
        const auto fields = split_tabs(line);
        if (fields.size() < 3)
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": need at least name, size, sha256");
        ManifestEntry entry;
        entry.name = fields[0];
        if (entry.name.empty())
            throw std::runtime_error("manifest line " + std::to_string(line_no) + ": empty name");
        entry.size_bytes = parse_int<std::uint64_t>(fields[1], "size", line_no);
        if (entry.size_bytes == 0)
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": size must be positive");
        if (fields[2] != "-") {
            const std::string digest = lowercase(fields[2]);
            if (!is_hex64(digest))
                throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                         ": sha256 must be 64 hex characters or '-'");
            entry.sha256_hex = digest;
        }
        if (fields.size() >= 4 && !fields[3].empty())
            entry.expected_attested = parse_int<std::uint64_t>(fields[3], "q", line_no);
        if (fields.size() > 4) {
            if (fields.size() - 4 > score_order.size())
                throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                         ": more score columns than named laws");
            for (std::size_t i = 4; i < fields.size(); ++i)
                entry.expected_scores[score_order[i - 4]] =
                    parse_int<std::int64_t>(fields[i], "score", line_no);
        }
        for (const auto& existing : manifest.entries)
            if (existing.name == entry.name)
                throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                         ": duplicate name '" + entry.name + "'");
        manifest.entries.push_back(std::move(entry));
    }
    return manifest;
}

std::string sha256_hex_of_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("sha256 init failed");
    }
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

VerifyResult verify_file(const ManifestEntry& entry, const std::filesystem::path& directory) {
    const auto path = directory / entry.name;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) return {FileStatus::missing, "no such file"};
    const auto size = std::filesystem::file_size(path, ec);
    if (ec) return {FileStatus::unreadable, ec.message()};
    if (size != entry.size_bytes)
        return {FileStatus::size_mismatch,
                "have " + std::to_string(size) + " bytes, expected " +
                    std::to_string(entry.size_bytes)};
    if (!entry.sha256_hex) return {FileStatus::ok, "digest unknown; size only"};
    try {
        const std::string actual = sha256_hex_of_file(path);
        if (actual != *entry.sha256_hex)
            return {FileStatus::digest_mismatch, "sha256 " + actual};
    } catch (const std::exception& e) {
        return {FileStatus::unreadable, e.what()};
    }
    return {FileStatus::ok, ""};
}

CorpusRunResult run_corpus(const CorpusManifest& manifest,
                           const std::filesystem::path& directory,
                           const std::vector<SuccessionLaw>& laws,
                           std::int64_t score_tolerance_bytes) {
    CorpusRunResult result;
    result.laws = laws;
    result.total_scores.assign(laws.size(), 0);

    std::vector<const ManifestEntry*> order;
    for (const auto& entry : manifest.entries) order.push_back(&entry);
    std::sort(order.begin(), order.end(),
              [](const ManifestEntry* a, const ManifestEntry* b) { return a->name < b->name; });

    for (const ManifestEntry* entry : order) {
        const auto verdict = verify_file(*entry, directory);
        if (verdict.status != FileStatus::ok) {
            result.skipped.push_back(entry->name + ": " + verdict.detail);
            result.all_expectations_met = false;
            continue;
        }
        std::vector<std::uint8_t> bytes;
        try {
            bytes = read_file_bytes(directory / entry->name);
        } catch (const std::exception& e) {
            result.skipped.push_back(entry->name + ": " + e.what());
            result.all_expectations_met = false;
            continue;
        }

        CorpusRow row;
        row.name = entry->name;
        row.size_bytes = bytes.size();
        for (std::size_t li = 0; li < laws.size(); ++li) {
            auto report = evaluate_stream(bytes, laws[li], 256);
            row.attested = report.attested;
            row.entropy_bits = report.entropy_bits;
            row.entropy_bytes_ceil = report.entropy_bytes_ceil;
            result.total_scores[li] += report.score_bytes;

            const auto want = entry->expected_scores.find(laws[li].name());
            if (want != entry->expected_scores.end() &&
                std::llabs(report.score_bytes - want->second) > score_tolerance_bytes) {
                result.mismatches.push_back(
                    entry->name + " " + laws[li].name() + ": score " +
                    std::to_string(report.score_bytes) + ", expected " +
                    std::to_string(want->second) + " +/- " +
                    std::to_string(score_tolerance_bytes));
                result.all_expectations_met = false;
            }
            row.reports.push_back(std::move(report));
        }
        if (entry->expected_attested && row.attested != *entry->expected_attested) {
            result.mismatches.push_back(entry->name + ": q " + std::to_string(row.attested) +
                                        ", expected " +
                                        std::to_string(*entry->expected_attested));
            result.all_expectations_met = false;
        }
        result.total_size += row.size_bytes;
        result.total_entropy_bytes += row.entropy_bytes_ceil;
        result.rows.push_back(std::move(row));
    }
    return result;
}

FetchReport fetch_corpus(const std::string& base_url, const std::filesystem::path& directory,
                         const CorpusManifest& manifest) {
    FetchReport report;

    // Split "scheme://host[:port]/base/path" into client root and path prefix.
    const auto scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos)
        throw std::invalid_argument("base URL must start with http:// or https://");
    const auto path_start = base_url.find('/', scheme_end + 3);
    const std::string root =
        path_start == std::string::npos ? base_url : base_url.substr(0, path_start);
    std::string prefix = path_start == std::string::npos ? "" : base_url.substr(path_start);
    if (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

    std::filesystem::create_directories(directory);
    httplib::Client client(root);
    client.set_follow_location(true);

    for (const auto& entry : manifest.entries) {
        if (verify_file(entry, directory).status == FileStatus::ok) continue;
        const std::string url_path = prefix + "/" + entry.name;
        auto res = client.Get(url_path);
        if (!res || res->status != 200) {
            report.failed += 1;
            report.errors.push_back(entry.name + ": GET " + url_path + " failed" +
                                    (res ? " (status " + std::to_string(res->status) + ")"
                                         : " (no response)"));
            continue;
        }
        const auto path = directory / entry.name;
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) {
                report.failed += 1;
                report.errors.push_back(entry.name + ": cannot write " + path.string());
                continue;
            }
            out.write(res->body.data(), static_cast<std::streamsize>(res->body.size()));
        }
        const auto verdict = verify_file(entry, directory);
        if (verdict.status != FileStatus::ok) {
            report.failed += 1;
            report.errors.push_back(entry.name + ": verification after fetch failed (" +
                                    verdict.detail + ")");
            continue;
        }
        report.fetched += 1;
    }
    return report;
}

}  // namespace succession
