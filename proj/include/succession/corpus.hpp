#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "succession/codec.hpp"
#include "succession/law.hpp"

namespace succession {

// One benchmark file: its name, size, SHA-256 digest, and optional golden
// expectations (distinct-byte count and per-law whole-byte scores).
// A digest of "-" in the manifest marks it unknown; such files are checked
// by size only.
struct ManifestEntry {
    std::string name;
    std::uint64_t size_bytes = 0;
    std::optional<std::string> sha256_hex;
    std::optional<std::uint64_t> expected_attested;
    std::map<std::string, std::int64_t> expected_scores;  // law name -> bytes
};

struct CorpusManifest {
    std::vector<ManifestEntry> entries;
};

// Manifest file format: UTF-8 TSV with columns
//   name  size  sha256  [q]  [score ...]
// Score columns are law names taken from the header comment line
// "#scores: <law> <law> ..."; without one they default to the benchmark
// order natural subsets laplace jp a b c d. Lines starting with '#' are
// comments. Malformed lines are reported with their line number.
CorpusManifest load_manifest(const std::filesystem::path& path);

enum class FileStatus { ok, missing, size_mismatch, digest_mismatch, unreadable };

struct VerifyResult {
    FileStatus status;
    std::string detail;
};

/// Checks existence, size, and digest (when known) of one corpus file.
VerifyResult verify_file(const ManifestEntry& entry, const std::filesystem::path& directory);

struct CorpusRow {
    std::string name;
    std::uint64_t size_bytes = 0;
    std::uint64_t attested = 0;
    double entropy_bits = 0.0;
    std::uint64_t entropy_bytes_ceil = 0;
    std::vector<CodelengthReport> reports;  // one per law, in law order
};

struct CorpusRunResult {
    std::vector<SuccessionLaw> laws;
    std::vector<CorpusRow> rows;                   // by name order
    std::vector<std::int64_t> total_scores;        // per law
    std::uint64_t total_size = 0;
    std::uint64_t total_entropy_bytes = 0;
    std::vector<std::string> skipped;              // unverifiable files + reason
    std::vector<std::string> mismatches;           // expectation failures
    bool all_expectations_met = true;
};

// Evaluates every verified file under every law (k = 256) and compares
// against the manifest's expectations: q must match exactly, scores within
// +/- score_tolerance_bytes. Unverifiable files are skipped and reported.
CorpusRunResult run_corpus(const CorpusManifest& manifest,
                           const std::filesystem::path& directory,
                           const std::vector<SuccessionLaw>& laws,
                           std::int64_t score_tolerance_bytes = 2);

struct FetchReport {
    int fetched = 0;
    int failed = 0;
    std::vector<std::string> errors;
};

// Downloads missing or mismatching files from base_url/<name> over
// HTTP(S), then re-verifies. Idempotent: verified files are not touched.
FetchReport fetch_corpus(const std::string& base_url, const std::filesystem::path& directory,
                         const CorpusManifest& manifest);

std::string sha256_hex_of_file(const std::filesystem::path& path);

}  // namespace succession
