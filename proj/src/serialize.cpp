#include "tauforge/serialize.hpp"

#include <cstdio>

#include "tauforge/error.hpp"
#include "tauforge/poly_io.hpp"

namespace tauforge {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("partition must be a JSON integer array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput("partition must be a JSON integer array");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

json to_json(const ShiftVector& c) {
    json out = json::array();
    for (const auto& e : c.entries) out.push_back(e.to_fraction_string());
    return out;
}

ShiftVector shift_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("shift vector must be a JSON array of rationals");
    ShiftVector c;
    for (const auto& x : j) c.entries.push_back(rational_from_json(x));
    return c;
}

namespace {

std::string charge_text(const ChargeVector& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out;
}

} // namespace

json to_json(const TauCollection& T) {
    json entries = json::array();
    for (const auto& [ch, p] : T.entries) entries.push_back({{"charge", ch}, {"poly", to_json(p)}});
    return {{"components", T.components}, {"total", T.total}, {"entries", std::move(entries)}};
}

TauCollection collection_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries")) throw InvalidInput("collection JSON needs \"entries\"");
    TauCollection T;
    T.components = j.value("components", 1);
    T.total = j.value("total", 0);
    for (const auto& e : j["entries"]) {
        if (!e.contains("charge") || !e.contains("poly")) throw InvalidInput("collection entry needs charge and poly");
        T.put(e["charge"].get<ChargeVector>(), poly_from_json(e["poly"]));
    }
    return T;
}

std::string to_text(const TauCollection& T) {
    std::string out;
    for (const auto& [ch, p] : T.entries) out += charge_text(ch) + ": " + to_text(p) + "\n";
    if (T.entries.empty()) out = "0\n";
    return out;
}

json to_json(const HSpec& h) {
    json M = json::array(), b = json::array(), c = json::array();
    for (const auto& t : h.terms) {
        M.push_back(t.degree);
        b.push_back(t.lead.to_fraction_string());
        c.push_back(to_json(t.shift));
    }
    return {{"M", M}, {"b", b}, {"c", c}};
}

HSpec hspec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("M") || !j["M"].is_array())
        throw InvalidInput("generating function JSON needs an \"M\" array");
    HSpec h;
    const auto& M = j["M"];
    for (std::size_t a = 0; a < M.size(); ++a) {
        HTerm t;
        if (!M[a].is_number_integer()) throw InvalidInput("degrees M must be integers");
        t.degree = M[a].get<int>();
        if (j.contains("b")) {
            if (!j["b"].is_array() || j["b"].size() != M.size()) throw InvalidInput("\"b\" must match \"M\" in length");
            t.lead = rational_from_json(j["b"][a]);
        }
        if (j.contains("c")) {
            if (!j["c"].is_array() || j["c"].size() != M.size()) throw InvalidInput("\"c\" must match \"M\" in length");
            t.shift = shift_from_json(j["c"][a]);
        }
        h.terms.push_back(std::move(t));
    }
    h.validate();
    return h;
}

json to_json(const KdVProfile& p) {
    json specs = json::array();
    for (const auto& h : p.specs) specs.push_back(to_json(h));
    return {{"n_parts", p.n_parts}, {"specs", specs}};
}

KdVProfile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n_parts") || !j.contains("specs") || !j["specs"].is_array())
        throw InvalidInput("profile JSON needs \"n_parts\" and \"specs\"");
    KdVProfile p;
    p.n_parts = j["n_parts"].get<std::vector<int>>();
    for (const auto& s : j["specs"]) p.specs.push_back(hspec_from_json(s));
    p.validate();
    return p;
}

json to_json(const VerificationReport& r, bool with_timing) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json out = {{"identity", r.identity}, {"params", params}, {"pass", r.pass}, {"obstruction", to_text(r.obstruction)}};
    if (!r.parts.empty()) {
        json parts = json::array();
        for (const auto& p : r.parts) parts.push_back(to_json(p, with_timing));
        out["parts"] = std::move(parts);
    }
    if (with_timing) out["time_ms"] = r.time_ms;
    return out;
}

namespace {

void report_lines(const VerificationReport& r, bool timing, int depth, std::string& out) {
    std::string line(static_cast<std::size_t>(2 * depth), ' ');
    line += r.pass ? "PASS " : "FAIL ";
    line += r.identity;
    for (const auto& [k, v] : r.params) line += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    if (timing) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " (%.1f ms)", r.time_ms);
        line += buf;
    }
    out += line + "\n";
    // Passing sub-checks of a passing aggregate are summarized by the headline.
    for (const auto& p : r.parts)
        if (!p.pass || depth == 0) report_lines(p, timing, depth + 1, out);
    if (!r.pass && r.parts.empty())
        out += std::string(static_cast<std::size_t>(2 * depth + 2), ' ') + "obstruction: " + to_text(r.obstruction) + "\n";
}

} // namespace

std::string to_text(const VerificationReport& r, bool with_timing) {
    std::string out;
    report_lines(r, with_timing, 0, out);
    return out;
}

} // namespace tauforge
