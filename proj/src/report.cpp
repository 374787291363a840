#include "lwd/report.hpp"

namespace lwd {

bool operator==(const RelationCheck& a, const RelationCheck& b) {
    return a.name == b.name && a.pass == b.pass && a.detail == b.detail;
}

bool LwdReport::operator==(const LwdReport& other) const {
    return n == other.n && k == other.k && mode == other.mode &&
           weights == other.weights && local == other.local &&
           only_odd == other.only_odd && checks == other.checks &&
           duration_ms == other.duration_ms;
}

nlohmann::json tally_to_json(const WeightTally& t) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, c] : t.entries()) j[std::to_string(w)] = c.str();
    return j;
}

WeightTally tally_from_json(const nlohmann::json& j, std::size_t length) {
    if (!j.is_object()) throw ParseError("tally must be a JSON object");
    WeightTally t(length);
    for (const auto& [key, value] : j.items()) {
        unsigned w;
        try {
            w = static_cast<unsigned>(std::stoul(key));
        } catch (const std::exception&) {
            throw ParseError("tally weight is not a number: " + key);
        }
        if (!value.is_string())
            throw ParseError("tally counts must be decimal strings");
        Count c;
        try {
            c = Count(value.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("tally count is not a decimal integer: " +
                             value.get<std::string>());
        }
        if (c < 0) throw ParseError("tally counts must be nonnegative");
        if (w > length)
            throw ParseError("tally weight " + key + " exceeds code length " +
                             std::to_string(length));
        t.set(w, std::move(c));
    }
    return t;
}

nlohmann::json report_to_json(const LwdReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["mode"] = r.mode;
    if (r.weights) j["A"] = tally_to_json(*r.weights);
    if (r.local) j["L"] = tally_to_json(*r.local);
    if (r.only_odd) j["N"] = tally_to_json(*r.only_odd);
    if (!r.checks.empty()) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = checks;
    }
    j["duration_ms"] = r.duration_ms;
    return j;
}

LwdReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("report must be a JSON object");
    LwdReport r;
    try {
        r.n = j.at("n").get<std::size_t>();
        r.k = j.at("k").get<std::size_t>();
        r.mode = j.value("mode", std::string());
        if (j.contains("A")) r.weights = tally_from_json(j.at("A"), r.n);
        if (j.contains("L")) r.local = tally_from_json(j.at("L"), r.n);
        if (j.contains("N")) r.only_odd = tally_from_json(j.at("N"), r.n);
        if (j.contains("checks")) {
            for (const auto& c : j.at("checks")) {
                r.checks.push_back({c.at("name").get<std::string>(),
                                    c.at("pass").get<bool>(),
                                    c.value("detail", std::string())});
            }
        }
        r.duration_ms = j.value("duration_ms", std::uint64_t{0});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report JSON: ") + e.what());
    }
    return r;
}

std::string with_thousands(const Count& c) {
    std::string digits = c.str();
    std::string out;
    out.reserve(digits.size() + digits.size() / 3);
    std::size_t lead = digits.size() % 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && (i + 3 - lead) % 3 == 0) out.push_back(',');
        out.push_back(digits[i]);
    }
    return out;
}

}  // namespace lwd
