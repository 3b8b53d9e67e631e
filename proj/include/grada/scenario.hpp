#ifndef GRADA_SCENARIO_HPP
#define GRADA_SCENARIO_HPP

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grada/analysis.hpp"
#include "grada/skew.hpp"

namespace grada {

using nlohmann::json;

// A scenario is one structured document describing a graded ring, an optional
// quotient, the checks to run, and optional expected statuses that turn the
// file into a self-checking fixture.
struct Scenario {
    std::variant<std::monostate, LpaRing, SkewRing> ring;
    std::optional<NormalSubgroup> quot;
    std::vector<std::string> checks;
    std::int64_t bound = 8;
    std::string output = "text";
    std::map<std::string, std::string> expectations;
    std::string ring_label;
};

struct CheckResult {
    std::string name;
    std::string grading;                // "parent" or "induced"
    std::optional<Verdict> verdict;
    std::string error;                  // e.g. "NotApplicable: ..."

    std::string status_label() const
    {
        if (verdict)
            return status_name(verdict->status);
        auto colon = error.find(':');
        return colon == std::string::npos ? error : error.substr(0, colon);
    }
};

struct RunResult {
    std::vector<CheckResult> results;
    std::vector<std::pair<std::string, std::string>> mismatches;   // check -> "got vs expected"
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline FinExSeq parse_seq(const json& j)
{
    if (!j.is_object() || !j.contains("default"))
        fail(Errc::ParseError, "sequence needs a 'default' field");
    std::map<std::int64_t, Rational> exceptions;
    if (j.contains("exceptions"))
        for (const auto& [pos, val] : j.at("exceptions").items())
            exceptions.emplace(std::stoll(pos), parse_rational(val.get<std::string>()));
    return seq_make(parse_rational(j.at("default").get<std::string>()), std::move(exceptions));
}

inline GroupPtr parse_group(const json& j)
{
    auto kind = j.at("kind").get<std::string>();
    if (kind == "integers")
        return Group::integers();
    if (kind == "finite") {
        std::vector<std::vector<std::int64_t>> table;
        for (const auto& row : j.at("cayley"))
            table.push_back(row.get<std::vector<std::int64_t>>());
        return Group::finite(table);
    }
    fail(Errc::ParseError, "unknown group kind '" + kind + "'");
}

inline LpaRing parse_quiver_ring(const json& j, std::size_t truncation)
{
    QuiverPtr q;
    if (j.contains("quiver_builtin"))
        q = quiver_builtin(j.at("quiver_builtin").get<std::string>());
    else {
        const auto& spec = j.at("quiver");
        std::vector<std::string> vertices = spec.at("vertices").get<std::vector<std::string>>();
        std::vector<std::tuple<std::string, std::string, std::string>> edges;
        if (spec.contains("edges"))
            for (const auto& e : spec.at("edges"))
                edges.emplace_back(e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                                   e.at("rng").get<std::string>());
        q = Quiver::finite(std::move(vertices), edges);
    }
    const json* degrees = nullptr;
    if (j.contains("degrees"))
        degrees = &j.at("degrees");
    else if (j.contains("quiver") && j.at("quiver").contains("degrees"))
        degrees = &j.at("quiver").at("degrees");
    StandardGrading grading;
    if (degrees) {
        std::map<std::string, std::int64_t> deg;
        for (const auto& [id, v] : degrees->items())
            deg.emplace(id, v.get<std::int64_t>());
        grading = StandardGrading::custom(q, Group::integers(), deg);
    } else {
        grading = StandardGrading::canonical_z(q);
    }
    return LpaRing(q, std::move(grading), truncation);
}

inline SkewRing parse_action_ring(const json& j)
{
    if (j.contains("action_builtin"))
        return SkewRing(action_builtin(j.at("action_builtin").get<std::string>()));
    const auto& spec = j.at("action");
    auto kind = spec.at("kind").get<std::string>();
    std::int64_t period = spec.value("period", 0);
    if (kind == "kronecker") {
        return SkewRing(action_ex61());
    }
    if (kind == "shift") {
        auto group = spec.contains("group") ? parse_group(spec.at("group")) : Group::integers();
        if (!group->is_integers())
            fail(Errc::ParseError, "shift actions are over the integers");
        FinExSeq ideal = parse_seq(spec.at("ideal"));
        if (!ideal.is_idempotent())
            fail(Errc::ParseError, "ideal identity must be idempotent");
        PartialAction::UnitFn unit = [ideal](const GroupElement& g) {
            return ideal * ideal.shifted(g.value);
        };
        PartialAction::ActFn act = [](const GroupElement& g, const FinExSeq& x) {
            return x.shifted(g.value);
        };
        return SkewRing(std::make_shared<const PartialAction>(
            group, unit, act, PartialAction::Certificate::GlobalRestriction,
            period == 0 ? 1 : period, "custom-shift"));
    }
    if (kind == "cyclic") {
        auto modulus = spec.at("modulus").get<std::int64_t>();
        if (modulus <= 0)
            fail(Errc::ParseError, "cyclic actions need a positive modulus");
        FinExSeq ideal = parse_seq(spec.at("ideal"));
        auto group = Group::cyclic(modulus);
        auto cyclic_shift = [modulus](const FinExSeq& x, std::int64_t by) {
            std::map<std::int64_t, Rational> ex;
            for (const auto& [pos, v] : x.exceptions())
                ex.emplace(((pos - 1 + by) % modulus + modulus) % modulus + 1, v);
            return seq_make(0, std::move(ex));
        };
        PartialAction::UnitFn unit = [ideal, cyclic_shift](const GroupElement& g) {
            return ideal * cyclic_shift(ideal, g.value);
        };
        PartialAction::ActFn act = [cyclic_shift](const GroupElement& g, const FinExSeq& x) {
            return cyclic_shift(x, g.value);
        };
        return SkewRing(std::make_shared<const PartialAction>(group, unit, act,
                                                              PartialAction::Certificate::None, 0,
                                                              "custom-cyclic"));
    }
    fail(Errc::ParseError, "unknown action kind '" + kind + "'");
}

inline const std::vector<std::string>& known_checks()
{
    static const std::vector<std::string> names = {
        "strong",        "symmetric", "epsilon-strong",  "nearly",
        "essentially",   "virtually", "epsilon-finite",  "main1",
        "epsilon-crossed", "axioms",  "classify",
    };
    return names;
}

} // namespace detail

inline Scenario parse_scenario(const json& j)
{
    if (!j.is_object())
        fail(Errc::ParseError, "scenario must be a JSON object");
    Scenario sc;
    sc.bound = j.value("bound", std::int64_t{8});
    if (sc.bound < 0)
        fail(Errc::ParseError, "bound must be nonnegative");
    std::size_t truncation = static_cast<std::size_t>(j.value("truncation", std::int64_t{8}));

    if (!j.contains("ring"))
        fail(Errc::ParseError, "scenario needs a 'ring'");
    const auto& ring = j.at("ring");
    auto from_builtin = [&](const std::string& name) {
        sc.ring_label = "builtin:" + name;
        if (name == "fig2" || name == "loop" || name == "discrete_inf") {
            auto q = quiver_builtin(name);
            sc.ring = LpaRing(q, StandardGrading::canonical_z(q), truncation);
        } else {
            sc.ring = SkewRing(action_builtin(name));
        }
    };
    if (ring.is_string()) {
        auto name = ring.get<std::string>();
        if (name.rfind("builtin:", 0) != 0)
            fail(Errc::ParseError, "string ring must have the form 'builtin:<name>'");
        from_builtin(name.substr(8));
    } else if (ring.contains("builtin")) {
        from_builtin(ring.at("builtin").get<std::string>());
    } else if (ring.contains("quiver") || ring.contains("quiver_builtin")) {
        sc.ring = detail::parse_quiver_ring(ring, truncation);
        sc.ring_label = ring.contains("quiver_builtin")
            ? "quiver:" + ring.at("quiver_builtin").get<std::string>()
            : "quiver:custom";
    } else if (ring.contains("action") || ring.contains("action_builtin")) {
        sc.ring = detail::parse_action_ring(ring);
        sc.ring_label = ring.contains("action_builtin")
            ? "action:" + ring.at("action_builtin").get<std::string>()
            : "action:custom";
    } else {
        fail(Errc::ParseError, "unrecognized ring description");
    }

    if (j.contains("quotient") && !j.at("quotient").is_null()) {
        const auto& q = j.at("quotient");
        if (q.contains("modulus"))
            sc.quot = NormalSubgroup::of_integers(q.at("modulus").get<std::int64_t>());
        else if (q.contains("elements"))
            sc.quot = NormalSubgroup::of_finite(q.at("elements").get<std::vector<std::int64_t>>());
        else
            fail(Errc::ParseError, "quotient needs 'modulus' or 'elements'");
    }

    if (!j.contains("checks") || !j.at("checks").is_array() || j.at("checks").empty())
        fail(Errc::ParseError, "scenario needs a nonempty 'checks' array");
    for (const auto& c : j.at("checks")) {
        auto name = c.get<std::string>();
        const auto& known = detail::known_checks();
        if (std::find(known.begin(), known.end(), name) == known.end())
            fail(Errc::UnknownCheck, "'" + name + "'");
        sc.checks.push_back(name);
    }

    sc.output = j.value("output", std::string("text"));
    if (sc.output != "text" && sc.output != "structured")
        fail(Errc::ParseError, "output must be 'text' or 'structured'");

    if (j.contains("expect"))
        for (const auto& [check, status] : j.at("expect").items())
            sc.expectations.emplace(check, status.get<std::string>());
    return sc;
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

namespace detail {

template <class Engine>
void run_engine_checks(const Engine& engine, const Scenario& sc, std::vector<CheckResult>& out)
{
    const bool induced = sc.quot && !sc.quot->is_trivial(*engine.group());
    std::optional<GradingView<Engine>> view;   // shared across checks for its caches
    auto the_view = [&]() -> GradingView<Engine>& {
        if (!view)
            view.emplace(engine, quotient(engine.group(),
                                          induced ? *sc.quot
                                                  : (engine.group()->is_integers()
                                                         ? NormalSubgroup::of_integers(0)
                                                         : NormalSubgroup::of_finite(
                                                               {engine.group()->identity_index()}))),
                         sc.bound);
        return *view;
    };
    const std::string grading_tag = induced ? "induced" : "parent";

    for (const auto& name : sc.checks) {
        if (name == "classify") {
            auto oc = classify(engine, sc.quot, sc.bound);
            for (const auto& [k, v] : oc.parent.checks)
                out.push_back(CheckResult{"classify.parent." + k, "parent", v, ""});
            std::vector<std::string> defects = oc.parent.defects;
            if (oc.induced) {
                for (const auto& [k, v] : oc.induced->checks)
                    out.push_back(CheckResult{"classify.induced." + k, "induced", v, ""});
                defects.insert(defects.end(), oc.induced->defects.begin(),
                               oc.induced->defects.end());
            }
            CheckResult consistency;
            consistency.name = "classify.consistency";
            consistency.grading = grading_tag;
            if (defects.empty())
                consistency.verdict = Verdict::holds(sc.bound, "inclusion chain consistent");
            else {
                std::string all;
                for (const auto& d : defects)
                    all += (all.empty() ? "" : "; ") + d;
                consistency.verdict = Verdict::fails(sc.bound, all);
            }
            out.push_back(std::move(consistency));
            continue;
        }
        CheckResult r;
        r.name = name;
        r.grading = grading_tag;
        try {
            if (name == "strong")
                r.verdict = check_strong(the_view());
            else if (name == "symmetric")
                r.verdict = check_symmetric(the_view());
            else if (name == "epsilon-strong")
                r.verdict = check_epsilon_strong(the_view()).first;
            else if (name == "nearly")
                r.verdict = check_nearly(the_view());
            else if (name == "essentially")
                r.verdict = check_essentially(the_view());
            else if (name == "virtually")
                r.verdict = check_virtually(the_view());
            else if (name == "epsilon-finite")
                r.verdict = check_epsilon_finite(the_view());
            else if (name == "main1") {
                auto [verdict, reports] = theorem_main1_condition(the_view());
                auto [eps, eps_reports] = check_epsilon_strong(the_view());
                bool agree = verdict.status == eps.status && reports.size() == eps_reports.size();
                for (std::size_t i = 0; agree && i < reports.size(); ++i)
                    agree = reports[i].status == eps_reports[i].status;
                verdict.details["agrees with epsilon-strong"] = agree ? "yes" : "NO (tool defect)";
                r.verdict = std::move(verdict);
            } else if (name == "epsilon-crossed") {
                r.verdict = epsilon_crossed_witness(the_view()).first;
            } else if (name == "axioms") {
                if constexpr (requires(const Engine& e) { e.action(); })
                    r.verdict = axiom_check(*engine.action(), sc.bound);
                else
                    fail(Errc::NotApplicable, "axiom check applies to partial actions only");
            }
        } catch (const Error& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
}

} // namespace detail

inline RunResult run_scenario(const Scenario& sc)
{
    RunResult rr;
    std::visit(
        [&](const auto& engine) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(engine)>, std::monostate>)
                detail::run_engine_checks(engine, sc, rr.results);
            else
                fail(Errc::ParseError, "scenario has no ring");
        },
        sc.ring);
    for (const auto& [check, expected] : sc.expectations) {
        bool found = false;
        for (const auto& r : rr.results)
            if (r.name == check) {
                found = true;
                if (r.status_label() != expected)
                    rr.mismatches.emplace_back(check, r.status_label() + " (expected " + expected + ")");
            }
        if (!found)
            rr.mismatches.emplace_back(check, "no such result (expected " + expected + ")");
    }
    return rr;
}

} // namespace grada

#endif
