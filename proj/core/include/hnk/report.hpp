#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hnk {

inline constexpr const char* kToolVersion = "0.1.0";

/// One verified/refuted/unknown/skipped record in the verification run.
/// `status` is "refuted-open-question" for exact disagreements that land in
/// a regime the order theory leaves unresolved (disconnected whole graphs);
/// those only fail the run in strict mode.
struct ClaimEntry {
    std::string id;
    std::string statement;
    int n = 0;
    int k = 0;
    std::string component = "whole";
    std::string status;  ///< verified | refuted | refuted-open-question | unknown | skipped
    std::string details;
    double seconds = 0.0;
};

struct VerificationOptions {
    int max_n = 6;
    std::uint64_t seed = 0x48'4e'4bULL;  // default sampling seed, overridable via --seed
    bool strict = false;
    std::size_t size_cap = 256;      ///< vertex cap for brute-force searches
    std::size_t element_cap = 1u << 20;
};

struct VerificationReport {
    std::string version = kToolVersion;
    VerificationOptions options;
    std::vector<ClaimEntry> entries;

    int count(const std::string& status) const;
    /// Exit-code semantics: refutations fail; open-question refutations
    /// fail only in strict mode.
    bool passed() const;
    std::string to_json_string() const;
    std::string to_text() const;
};

/// Runs every structural, symmetry, order, diameter, transitivity, and
/// counting check across the (n,k) grid up to max_n, within the size caps.
/// Entries come back sorted by (n, k, claim id).
VerificationReport run_verification(const VerificationOptions& options);

}  // namespace hnk
