#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "lwd/relations.hpp"
#include "lwd/tally.hpp"

namespace lwd {

/// Result of one CLI computation. All counts serialize as decimal strings;
/// they routinely exceed 64 bits and must never pass through floating point.
struct LwdReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string mode;  // brute | shortcut | cosets | relate-* | check-table | verify
    std::optional<WeightTally> weights;    // A
    std::optional<WeightTally> local;      // L
    std::optional<WeightTally> only_odd;   // N
    std::vector<RelationCheck> checks;
    std::uint64_t duration_ms = 0;

    bool operator==(const LwdReport& other) const;
};

bool operator==(const RelationCheck& a, const RelationCheck& b);

nlohmann::json tally_to_json(const WeightTally& t);
WeightTally tally_from_json(const nlohmann::json& j, std::size_t length);

nlohmann::json report_to_json(const LwdReport& r);
LwdReport report_from_json(const nlohmann::json& j);

/// "1234567" -> "1,234,567"; table output mirrors the usual published layout.
std::string with_thousands(const Count& c);

}  // namespace lwd
