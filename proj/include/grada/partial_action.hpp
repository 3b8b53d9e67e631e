#ifndef GRADA_PARTIAL_ACTION_HPP
#define GRADA_PARTIAL_ACTION_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "grada/finexseq.hpp"
#include "grada/group.hpp"
#include "grada/verdict.hpp"

namespace grada {

// A unital partial action of G on the sequence ring: unital ideals D_g given
// by their identity idempotents 1_g, and isomorphisms α_g : D_{g^{-1}} -> D_g.
// The structural certificate, when present, describes the whole ℤ-indexed
// family in closed form and is itself verified on every window before any
// check relies on it:
//
//   KroneckerOrthogonal — away from e the domains are one-dimensional,
//     pairwise orthogonal and shift-periodic (1_{g+p} = shift(1_g, p) for
//     g, g+p ≠ e). Supports exact negative verdicts.
//   GlobalRestriction — the action is a global bilateral shift restricted to
//     the unital ideal with identity 1_e, so 1_g = 1_e · shift(1_e, g).
//     Supports exact domination verdicts.
class PartialAction {
public:
    enum class Certificate { None, KroneckerOrthogonal, GlobalRestriction };

    using UnitFn = std::function<FinExSeq(const GroupElement&)>;
    using ActFn = std::function<FinExSeq(const GroupElement&, const FinExSeq&)>;

    PartialAction(GroupPtr group, UnitFn unit, ActFn act, Certificate cert,
                  std::int64_t period, std::string name)
        : group_(std::move(group)), unit_(std::move(unit)), act_(std::move(act)),
          cert_(cert), period_(period), name_(std::move(name))
    {
    }

    const GroupPtr& group() const { return group_; }
    Certificate certificate() const { return cert_; }
    std::int64_t period() const { return period_; }
    const std::string& name() const { return name_; }

    /// 1_g, the identity of the unital ideal D_g.
    FinExSeq domain_unit(const GroupElement& g) const { return unit_(g); }

    /// α_g(x) for x ∈ D_{g^{-1}}.
    FinExSeq act(const GroupElement& g, const FinExSeq& x) const { return act_(g, x); }

    /// 1_e — the multiplicative identity of the carrier ring in play.
    FinExSeq carrier_identity() const { return unit_(identity_of(group_)); }

    /// Copy with α replaced at a single group element; used to study broken
    /// actions without touching the original.
    std::shared_ptr<const PartialAction> with_action_override(
        std::int64_t g_value, std::function<FinExSeq(const FinExSeq&)> replacement) const
    {
        auto base_act = act_;
        ActFn wrapped = [g_value, replacement, base_act](const GroupElement& g, const FinExSeq& x) {
            if (g.value == g_value)
                return replacement(x);
            return base_act(g, x);
        };
        return std::make_shared<const PartialAction>(group_, unit_, wrapped, cert_, period_,
                                                     name_ + "(altered)");
    }

private:
    GroupPtr group_;
    UnitFn unit_;
    ActFn act_;
    Certificate cert_;
    std::int64_t period_;
    std::string name_;
};

using PartialActionPtr = std::shared_ptr<const PartialAction>;

// ---------------------------------------------------------------------------
// Built-in actions
// ---------------------------------------------------------------------------

/// ℤ on the sequence ring: D_0 = R, D_i = e_i·R, α_i(q·e_{-i}) = q·e_i.
inline PartialActionPtr action_ex61()
{
    auto z = Group::integers();
    PartialAction::UnitFn unit = [](const GroupElement& g) {
        return g.value == 0 ? FinExSeq::constant(1) : FinExSeq::kronecker(g.value);
    };
    PartialAction::ActFn act = [](const GroupElement& g, const FinExSeq& x) {
        if (g.value == 0)
            return x;
        return x.at(-g.value) * FinExSeq::kronecker(g.value);
    };
    return std::make_shared<const PartialAction>(z, unit, act,
                                                 PartialAction::Certificate::KroneckerOrthogonal, 1,
                                                 "ex61");
}

/// ℤ shifting bilaterally, restricted to the ideal A = {f | f(0) = 0}:
/// D_n = {f | f(0) = f(n) = 0}, α_n = shift by n.
inline PartialActionPtr action_ex62()
{
    auto z = Group::integers();
    const FinExSeq ideal_unit = seq_make(1, {{0, 0}});
    PartialAction::UnitFn unit = [ideal_unit](const GroupElement& g) {
        return ideal_unit * ideal_unit.shifted(g.value);
    };
    PartialAction::ActFn act = [](const GroupElement& g, const FinExSeq& x) {
        return x.shifted(g.value);
    };
    return std::make_shared<const PartialAction>(z, unit, act,
                                                 PartialAction::Certificate::GlobalRestriction, 1,
                                                 "ex62");
}

/// The cyclic group of order 4 shifting ℚ^4 (positions 1..4, default 0),
/// restricted to A = e_1·R + e_2·R: D_0 = A, D_1 = e_2·ℚ, D_2 = 0, D_3 = e_1·ℚ.
inline PartialActionPtr action_sec7()
{
    auto c4 = Group::cyclic(4);
    const FinExSeq ideal_unit = FinExSeq::kronecker(1) + FinExSeq::kronecker(2);
    auto cyclic_shift = [](const FinExSeq& x, std::int64_t by) {
        std::map<std::int64_t, Rational> ex;
        for (const auto& [pos, v] : x.exceptions()) {
            auto moved = ((pos - 1 + by) % 4 + 4) % 4 + 1;
            ex.emplace(moved, v);
        }
        return seq_make(0, std::move(ex));
    };
    PartialAction::UnitFn unit = [ideal_unit, cyclic_shift](const GroupElement& g) {
        return ideal_unit * cyclic_shift(ideal_unit, g.value);
    };
    PartialAction::ActFn act = [cyclic_shift](const GroupElement& g, const FinExSeq& x) {
        return cyclic_shift(x, g.value);
    };
    return std::make_shared<const PartialAction>(c4, unit, act, PartialAction::Certificate::None, 0,
                                                 "sec7");
}

inline PartialActionPtr action_builtin(const std::string& name)
{
    if (name == "ex61")
        return action_ex61();
    if (name == "ex62")
        return action_ex62();
    if (name == "sec7")
        return action_sec7();
    fail(Errc::UnknownBuiltin, "partial action builtin '" + name + "'");
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

namespace detail {

/// Spanning vectors of D_g within the position window: 1_g plus the Kronecker
/// slices it keeps alive.
inline std::vector<FinExSeq> domain_window_basis(const PartialAction& pa, const GroupElement& g,
                                                 std::int64_t bound)
{
    std::vector<FinExSeq> out;
    auto unit = pa.domain_unit(g);
    if (unit.is_zero())
        return out;
    out.push_back(unit);
    for (std::int64_t p = -bound; p <= bound; ++p) {
        auto sliced = FinExSeq::kronecker(p) * unit;
        if (!sliced.is_zero() && std::find(out.begin(), out.end(), sliced) == out.end())
            out.push_back(std::move(sliced));
    }
    return out;
}

inline bool verify_certificate(const PartialAction& pa, std::int64_t bound, std::string& why_not)
{
    const auto& g = pa.group();
    if (!g->is_integers())
        return false;
    const auto p = pa.period();
    switch (pa.certificate()) {
    case PartialAction::Certificate::None:
        return false;
    case PartialAction::Certificate::KroneckerOrthogonal: {
        for (std::int64_t a = -bound; a <= bound; ++a) {
            if (a == 0)
                continue;
            auto ua = pa.domain_unit(element_of(g, a));
            if (ua.is_zero()) {
                why_not = "domain unit vanishes at " + std::to_string(a);
                return false;
            }
            if (a + p != 0 && a + p <= bound
                && pa.domain_unit(element_of(g, a + p)) != ua.shifted(p)) {
                why_not = "shift law breaks at " + std::to_string(a);
                return false;
            }
            for (std::int64_t b = -bound; b <= bound; ++b)
                if (b != 0 && b != a
                    && !(ua * pa.domain_unit(element_of(g, b))).is_zero()) {
                    why_not = "domains " + std::to_string(a) + " and " + std::to_string(b)
                        + " are not orthogonal";
                    return false;
                }
        }
        return true;
    }
    case PartialAction::Certificate::GlobalRestriction: {
        auto ideal = pa.carrier_identity();
        for (std::int64_t a = -bound; a <= bound; ++a) {
            auto ga = element_of(g, a);
            if (pa.domain_unit(ga) != ideal * ideal.shifted(a)) {
                why_not = "restriction law breaks at " + std::to_string(a);
                return false;
            }
            for (const auto& x : domain_window_basis(pa, inverse(ga), bound))
                if (pa.act(ga, x) != x.shifted(a)) {
                    why_not = "action is not the global shift at " + std::to_string(a);
                    return false;
                }
        }
        return true;
    }
    }
    return false;
}

} // namespace detail

/// Verifies the unital-partial-action conditions on the enumeration window:
/// (1) D_e is the whole carrier and α_e = id, (2) α_g(D_{g^{-1}} D_h) =
/// D_g D_{gh} tested on the generator 1_{g^{-1}}·1_h, (3) the composition law
/// on x = 1_{h^{-1}}·1_{(gh)^{-1}}. Exact for finite groups and for window-
/// verified certificates; UpToBound otherwise.
inline Verdict axiom_check(const PartialAction& pa, std::int64_t bound)
{
    const auto& g = pa.group();
    auto window = enumerate_window(g, bound);
    const auto e = identity_of(g);
    const auto one = pa.carrier_identity();

    auto fails = [&](const std::string& what, const GroupElement& a, const GroupElement& b) {
        auto v = Verdict::fails(bound, what + " at (g,h) = (" + std::to_string(a.value) + ","
                                           + std::to_string(b.value) + ")");
        v.details["g"] = std::to_string(a.value);
        v.details["h"] = std::to_string(b.value);
        return v;
    };

    // (1) plus basic shape: units idempotent, α_e the identity map, α_g
    // carrying 1_{g^{-1}} to 1_g.
    for (const auto& a : window) {
        auto unit = pa.domain_unit(a);
        if (unit * unit != unit)
            return fails("domain unit is not idempotent", a, a);
        if (unit * one != unit)
            return fails("domain unit escapes the carrier ideal", a, a);
    }
    for (const auto& x : detail::domain_window_basis(pa, e, bound))
        if (pa.act(e, x) != x)
            return fails("neutral element does not act as the identity", e, e);

    // (2) and (3) over the window.
    for (const auto& a : window)
        for (const auto& b : window) {
            auto gen = pa.domain_unit(inverse(a)) * pa.domain_unit(b);
            if (pa.act(a, gen) != pa.domain_unit(a) * pa.domain_unit(mul(a, b)))
                return fails("ideal condition breaks", a, b);
            auto x = pa.domain_unit(inverse(b)) * pa.domain_unit(inverse(mul(a, b)));
            if (pa.act(a, pa.act(b, x)) != pa.act(mul(a, b), x))
                return fails("composition condition breaks", a, b);
        }

    if (!g->is_integers())
        return Verdict::holds(bound, "finite group: all pairs checked exhaustively");
    std::string why_not;
    if (detail::verify_certificate(pa, bound, why_not)) {
        auto v = Verdict::holds(bound, "window checks plus verified structural certificate (period "
                                           + std::to_string(pa.period()) + ")");
        v.details["certificate"] = pa.certificate() == PartialAction::Certificate::KroneckerOrthogonal
            ? "kronecker-orthogonal"
            : "global-restriction";
        return v;
    }
    return Verdict::up_to_bound(bound, "all pairs within the window check out" +
                                           (why_not.empty() ? std::string()
                                                            : "; certificate not usable: " + why_not));
}

} // namespace grada

#endif
