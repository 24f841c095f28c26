#pragma once

// Verification reports: one record per checked claim, serialized as JSON with
// sorted keys so reports diff cleanly. The payload is deterministic up to the
// wall_time_ms fields; consumers comparing reports should strip those.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ffgs::report {

inline constexpr const char* kToolVersion = "ffgs 0.1.0";

inline constexpr const char* kVerified = "verified";
inline constexpr const char* kRefuted = "refuted";
inline constexpr const char* kSkipped = "skipped";

struct ClaimRecord {
    std::string claim_id;
    std::map<std::string, std::string> parameters;
    std::string status; // verified | refuted | skipped
    std::string witness;
    double wall_time_ms = 0.0;
};

struct Report {
    std::string tool_version = kToolVersion;
    std::string input_digest;
    std::vector<ClaimRecord> claims;

    void add(ClaimRecord r) { claims.push_back(std::move(r)); }
    size_t count(const std::string& status) const;
    bool any_refuted() const { return count(kRefuted) > 0; }
};

// FNV-1a 64-bit digest of the canonical input description, as 16 hex chars.
std::string digest_hex(const std::string& s);

// Stable order: by claim_id, then by the serialized parameter map.
void sort_claims(Report& r);

// JSON with sorted object keys and a trailing newline; claims pre-sorted.
std::string to_json(Report r);

// Structural validation against docs/report.schema.json (same rules,
// checked directly). Returns false and fills `why` on the first violation.
bool validate_json(const std::string& text, std::string* why = nullptr);

} // namespace ffgs::report
