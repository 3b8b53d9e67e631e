#ifndef GRADA_REPORT_HPP
#define GRADA_REPORT_HPP

#include <string>

#include "grada/scenario.hpp"

namespace grada {

inline std::string check_label(const std::string& name)
{
    auto base = name;
    if (auto dot = base.rfind('.'); dot != std::string::npos)
        base = base.substr(dot + 1);
    if (base == "strong")
        return "full product covering S_C·S_C' = S_{CC'}";
    if (base == "symmetric")
        return "three-factor recovery S_C·S_{C^{-1}}·S_C = S_C";
    if (base == "epsilon-strong")
        return "unital coset-pair rings with identities ε_C";
    if (base == "nearly")
        return "per-element one-sided units in S_C·S_{C^{-1}}";
    if (base == "essentially")
        return "join-closed set of local units E_C";
    if (base == "virtually")
        return "pairwise-orthogonal idempotent cover D_C";
    if (base == "epsilon-finite")
        return "finite join-closure of the epsilon family";
    if (base == "main1")
        return "upper-bound characterization of the coset identities";
    if (base == "epsilon-crossed")
        return "epsilon-invertible element in every coset";
    if (base == "axioms")
        return "unital partial action conditions";
    if (base == "consistency")
        return "inclusion-chain consistency";
    return base;
}

/// Deterministic human-readable rendering: one block per check in scenario
/// order, then the expectation summary.
inline std::string render_text(const Scenario& sc, const RunResult& rr)
{
    std::string out;
    out += "grada report\n";
    out += "ring: " + sc.ring_label + "\n";
    if (sc.quot) {
        if (sc.quot->elements.empty())
            out += "quotient: Z/" + std::to_string(sc.quot->modulus) + "Z\n";
        else {
            out += "quotient: subgroup {";
            for (std::size_t i = 0; i < sc.quot->elements.size(); ++i)
                out += (i ? "," : "") + std::to_string(sc.quot->elements[i]);
            out += "}\n";
        }
    }
    out += "bound: " + std::to_string(sc.bound) + "\n\n";
    for (const auto& r : rr.results) {
        out += r.name + " (" + r.grading + "): " + r.status_label() + "\n";
        out += "  criterion: " + check_label(r.name) + "\n";
        if (!r.error.empty()) {
            out += "  reason: " + r.error + "\n";
        } else if (r.verdict) {
            out += "  bound: " + std::to_string(r.verdict->bound) + "\n";
            if (!r.verdict->witness.empty())
                out += "  witness: " + r.verdict->witness + "\n";
            if (!r.verdict->certificate.empty())
                out += "  certificate: " + r.verdict->certificate + "\n";
            for (const auto& [k, v] : r.verdict->details)
                out += "    " + k + ": " + v + "\n";
        }
        out += "\n";
    }
    if (sc.expectations.empty()) {
        out += "expectations: none declared\n";
    } else if (rr.mismatches.empty()) {
        out += "expectations: all " + std::to_string(sc.expectations.size()) + " matched\n";
    } else {
        out += "expectations: " + std::to_string(rr.mismatches.size()) + " mismatch(es)\n";
        for (const auto& [check, what] : rr.mismatches)
            out += "  " + check + ": " + what + "\n";
    }
    return out;
}

/// Structured rendering with the stable field names {check, status, bound,
/// witness?, certificate?} per result.
inline json render_structured(const Scenario& sc, const RunResult& rr)
{
    json doc;
    doc["ring"] = sc.ring_label;
    doc["bound"] = sc.bound;
    if (sc.quot) {
        if (sc.quot->elements.empty())
            doc["quotient"] = {{"modulus", sc.quot->modulus}};
        else
            doc["quotient"] = {{"elements", sc.quot->elements}};
    }
    doc["results"] = json::array();
    for (const auto& r : rr.results) {
        json entry;
        entry["check"] = r.name;
        entry["grading"] = r.grading;
        entry["status"] = r.status_label();
        if (!r.error.empty()) {
            entry["error"] = r.error;
        } else if (r.verdict) {
            entry["bound"] = r.verdict->bound;
            if (!r.verdict->witness.empty())
                entry["witness"] = r.verdict->witness;
            if (!r.verdict->certificate.empty())
                entry["certificate"] = r.verdict->certificate;
            if (!r.verdict->details.empty()) {
                json details;
                for (const auto& [k, v] : r.verdict->details)
                    details[k] = v;
                entry["details"] = details;
            }
        }
        doc["results"].push_back(std::move(entry));
    }
    json mismatches = json::array();
    for (const auto& [check, what] : rr.mismatches)
        mismatches.push_back({{"check", check}, {"got", what}});
    doc["mismatches"] = std::move(mismatches);
    return doc;
}

/// Inverse of render_structured for the fields a consumer relies on; used to
/// verify the round-trip property.
inline std::vector<CheckResult> parse_structured(const json& doc)
{
    std::vector<CheckResult> out;
    for (const auto& entry : doc.at("results")) {
        CheckResult r;
        r.name = entry.at("check").get<std::string>();
        r.grading = entry.at("grading").get<std::string>();
        if (entry.contains("error")) {
            r.error = entry.at("error").get<std::string>();
        } else {
            Verdict v;
            auto status = entry.at("status").get<std::string>();
            v.status = status == "Holds" ? Status::Holds
                : status == "Fails"      ? Status::Fails
                                         : Status::UpToBound;
            v.bound = entry.at("bound").get<std::int64_t>();
            if (entry.contains("witness"))
                v.witness = entry.at("witness").get<std::string>();
            if (entry.contains("certificate"))
                v.certificate = entry.at("certificate").get<std::string>();
            if (entry.contains("details"))
                for (const auto& [k, val] : entry.at("details").items())
                    v.details[k] = val.get<std::string>();
            r.verdict = std::move(v);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace grada

#endif
