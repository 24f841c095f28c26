#include "ffgs/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace ffgs::report {

using nlohmann::json;

size_t Report::count(const std::string& status) const {
    size_t n = 0;
    for (const auto& c : claims)
        if (c.status == status) ++n;
    return n;
}

std::string digest_hex(const std::string& s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

namespace {
std::string param_key(const ClaimRecord& c) {
    std::string k;
    for (const auto& [a, b] : c.parameters) k += a + "=" + b + ";";
    return k;
}
} // namespace

void sort_claims(Report& r) {
    std::stable_sort(r.claims.begin(), r.claims.end(),
                     [](const ClaimRecord& a, const ClaimRecord& b) {
                         if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
                         return param_key(a) < param_key(b);
                     });
}

std::string to_json(Report r) {
    sort_claims(r);
    json j;
    j["tool_version"] = r.tool_version;
    j["input_digest"] = r.input_digest;
    json claims = json::array();
    for (const auto& c : r.claims) {
        json jc;
        jc["claim_id"] = c.claim_id;
        jc["parameters"] = json::object();
        for (const auto& [k, v] : c.parameters) jc["parameters"][k] = v;
        jc["status"] = c.status;
        jc["witness"] = c.witness;
        jc["wall_time_ms"] = c.wall_time_ms;
        claims.push_back(std::move(jc));
    }
    j["claims"] = std::move(claims);
    return j.dump(2) + "\n";
}

bool validate_json(const std::string& text, std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) return bad("not valid JSON");
    if (!j.is_object()) return bad("top level is not an object");
    const char* top_required[] = {"tool_version", "input_digest", "claims"};
    for (const char* k : top_required)
        if (!j.contains(k)) return bad(std::string("missing key '") + k + "'");
    if (j.size() != 3) return bad("unexpected extra top-level keys");
    if (!j["tool_version"].is_string()) return bad("tool_version is not a string");
    if (!j["input_digest"].is_string()) return bad("input_digest is not a string");
    std::string digest = j["input_digest"].get<std::string>();
    if (digest.size() != 16 || digest.find_first_not_of("0123456789abcdef") !=
                                   std::string::npos)
        return bad("input_digest is not 16 lowercase hex characters");
    if (!j["claims"].is_array()) return bad("claims is not an array");
    for (const auto& c : j["claims"]) {
        if (!c.is_object()) return bad("claim is not an object");
        const char* required[] = {"claim_id", "parameters", "status", "witness",
                                  "wall_time_ms"};
        for (const char* k : required)
            if (!c.contains(k))
                return bad(std::string("claim missing key '") + k + "'");
        if (c.size() != 5) return bad("claim has unexpected extra keys");
        if (!c["claim_id"].is_string()) return bad("claim_id is not a string");
        if (!c["parameters"].is_object()) return bad("parameters is not an object");
        for (const auto& [k, v] : c["parameters"].items()) {
            (void)k;
            if (!v.is_string()) return bad("parameter values must be strings");
        }
        std::string status = c["status"].get<std::string>();
        if (status != kVerified && status != kRefuted && status != kSkipped)
            return bad("status '" + status + "' not in {verified, refuted, skipped}");
        if (!c["witness"].is_string()) return bad("witness is not a string");
        if (!c["wall_time_ms"].is_number()) return bad("wall_time_ms is not a number");
    }
    return true;
}

} // namespace ffgs::report
