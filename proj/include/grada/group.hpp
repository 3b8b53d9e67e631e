#ifndef GRADA_GROUP_HPP
#define GRADA_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grada/error.hpp"

namespace grada {

// The grading groups: the additive integers, or a finite group given by a
// Cayley table. Everything is immutable after construction.
class Group {
public:
    enum class Kind { Integers, Finite };

    static std::shared_ptr<const Group> integers()
    {
        return std::shared_ptr<const Group>(new Group(Kind::Integers, {}, 0));
    }

    /// Validates that the table is a group: Latin square, two-sided identity,
    /// two-sided inverses, associativity. Throws MalformedTable otherwise.
    static std::shared_ptr<const Group> finite(const std::vector<std::vector<std::int64_t>>& cayley)
    {
        const std::size_t n = cayley.size();
        if (n == 0)
            fail(Errc::MalformedTable, "empty Cayley table");
        for (const auto& row : cayley) {
            if (row.size() != n)
                fail(Errc::MalformedTable, "table is not square");
            for (auto v : row)
                if (v < 0 || static_cast<std::size_t>(v) >= n)
                    fail(Errc::MalformedTable, "entry out of range");
        }
        // Latin square: every row and column is a permutation.
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<bool> row_seen(n, false), col_seen(n, false);
            for (std::size_t j = 0; j < n; ++j) {
                if (row_seen[static_cast<std::size_t>(cayley[i][j])])
                    fail(Errc::MalformedTable, "repeated entry in row " + std::to_string(i));
                row_seen[static_cast<std::size_t>(cayley[i][j])] = true;
                if (col_seen[static_cast<std::size_t>(cayley[j][i])])
                    fail(Errc::MalformedTable, "repeated entry in column " + std::to_string(i));
                col_seen[static_cast<std::size_t>(cayley[j][i])] = true;
            }
        }
        std::int64_t identity = -1;
        for (std::size_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j)
                ok = cayley[e][j] == static_cast<std::int64_t>(j)
                    && cayley[j][e] == static_cast<std::int64_t>(j);
            if (ok) {
                identity = static_cast<std::int64_t>(e);
                break;
            }
        }
        if (identity < 0)
            fail(Errc::MalformedTable, "no two-sided identity");
        for (std::size_t a = 0; a < n; ++a) {
            bool has_inverse = false;
            for (std::size_t b = 0; b < n && !has_inverse; ++b)
                has_inverse = cayley[a][b] == identity && cayley[b][a] == identity;
            if (!has_inverse)
                fail(Errc::MalformedTable, "element " + std::to_string(a) + " has no inverse");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    auto ab_c = cayley[static_cast<std::size_t>(cayley[a][b])][c];
                    auto a_bc = cayley[a][static_cast<std::size_t>(cayley[b][c])];
                    if (ab_c != a_bc)
                        fail(Errc::MalformedTable, "table is not associative");
                }
        return std::shared_ptr<const Group>(new Group(Kind::Finite, cayley, identity));
    }

    /// Cyclic group of order n (addition mod n).
    static std::shared_ptr<const Group> cyclic(std::int64_t n)
    {
        std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(n),
                                                     std::vector<std::int64_t>(static_cast<std::size_t>(n)));
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
        return finite(table);
    }

    Kind kind() const { return kind_; }
    bool is_integers() const { return kind_ == Kind::Integers; }
    std::int64_t order() const { return static_cast<std::int64_t>(cayley_.size()); }
    std::int64_t identity_index() const { return identity_; }
    const std::vector<std::vector<std::int64_t>>& cayley() const { return cayley_; }

    std::int64_t op(std::int64_t a, std::int64_t b) const
    {
        if (kind_ == Kind::Integers)
            return a + b;
        return cayley_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    std::int64_t inverse(std::int64_t a) const
    {
        if (kind_ == Kind::Integers)
            return -a;
        for (std::int64_t b = 0; b < order(); ++b)
            if (op(a, b) == identity_)
                return b;
        fail(Errc::MalformedTable, "inverse lookup failed");
    }

    bool same_group(const Group& other) const
    {
        if (kind_ != other.kind_)
            return false;
        return kind_ == Kind::Integers || cayley_ == other.cayley_;
    }

private:
    Group(Kind kind, std::vector<std::vector<std::int64_t>> cayley, std::int64_t identity)
        : kind_(kind), cayley_(std::move(cayley)), identity_(identity)
    {
    }

    Kind kind_;
    std::vector<std::vector<std::int64_t>> cayley_;
    std::int64_t identity_;
};

using GroupPtr = std::shared_ptr<const Group>;

// An element of ℤ (value) or of a finite group (index into the table).
struct GroupElement {
    GroupPtr group;
    std::int64_t value = 0;

    bool is_identity() const
    {
        return group->is_integers() ? value == 0 : value == group->identity_index();
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b)
    {
        return a.group->same_group(*b.group) && a.value == b.value;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.value < b.value; }
};

inline GroupElement element_of(const GroupPtr& g, std::int64_t v)
{
    if (!g->is_integers() && (v < 0 || v >= g->order()))
        fail(Errc::MalformedTable, "element index out of range");
    return GroupElement{g, v};
}

inline GroupElement identity_of(const GroupPtr& g)
{
    return GroupElement{g, g->is_integers() ? 0 : g->identity_index()};
}

inline GroupElement mul(const GroupElement& a, const GroupElement& b)
{
    return GroupElement{a.group, a.group->op(a.value, b.value)};
}

inline GroupElement inverse(const GroupElement& a)
{
    return GroupElement{a.group, a.group->inverse(a.value)};
}

/// Bounded evidence window: -bound..bound for ℤ, all elements for a finite
/// group (the bound is ignored there).
inline std::vector<GroupElement> enumerate_window(const GroupPtr& g, std::int64_t bound)
{
    std::vector<GroupElement> out;
    if (g->is_integers()) {
        for (std::int64_t v = -bound; v <= bound; ++v)
            out.push_back(GroupElement{g, v});
    } else {
        for (std::int64_t v = 0; v < g->order(); ++v)
            out.push_back(GroupElement{g, v});
    }
    return out;
}

/// Same window reordered center-out: 0, 1, -1, 2, -2, ... (identity first for
/// finite groups). This is the deterministic order used for join chains and
/// degree-pair scans.
inline std::vector<GroupElement> window_center_out(const GroupPtr& g, std::int64_t bound)
{
    std::vector<GroupElement> out;
    if (g->is_integers()) {
        out.push_back(GroupElement{g, 0});
        for (std::int64_t v = 1; v <= bound; ++v) {
            out.push_back(GroupElement{g, v});
            out.push_back(GroupElement{g, -v});
        }
    } else {
        out.push_back(identity_of(g));
        for (std::int64_t v = 0; v < g->order(); ++v)
            if (v != g->identity_index())
                out.push_back(GroupElement{g, v});
    }
    return out;
}

// A normal subgroup: mℤ for the integers (m = 0 is the trivial subgroup), or
// an explicit element set for a finite group.
struct NormalSubgroup {
    std::int64_t modulus = 0;              // integers case
    std::vector<std::int64_t> elements;    // finite case, sorted

    static NormalSubgroup of_integers(std::int64_t m)
    {
        if (m < 0)
            fail(Errc::NotSubgroup, "negative modulus");
        NormalSubgroup n;
        n.modulus = m;
        return n;
    }

    static NormalSubgroup of_finite(std::vector<std::int64_t> elems)
    {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        NormalSubgroup n;
        n.elements = std::move(elems);
        return n;
    }

    bool is_trivial(const Group& g) const
    {
        if (g.is_integers())
            return modulus == 0;
        return elements.size() == 1;
    }
};

/// Subgroup + normality validation against a concrete group. All subgroups of
/// ℤ have the form mℤ, so only the finite case has anything to check.
inline void validate_normal_subgroup(const GroupPtr& g, const NormalSubgroup& n)
{
    if (g->is_integers())
        return;
    const auto& elems = n.elements;
    if (elems.empty())
        fail(Errc::NotSubgroup, "empty subgroup");
    auto contains = [&](std::int64_t v) {
        return std::binary_search(elems.begin(), elems.end(), v);
    };
    for (auto v : elems)
        if (v < 0 || v >= g->order())
            fail(Errc::NotSubgroup, "subgroup element out of range");
    if (!contains(g->identity_index()))
        fail(Errc::NotSubgroup, "subgroup misses the identity");
    for (auto a : elems) {
        if (!contains(g->inverse(a)))
            fail(Errc::NotSubgroup, "subgroup not closed under inverse");
        for (auto b : elems)
            if (!contains(g->op(a, b)))
                fail(Errc::NotSubgroup, "subgroup not closed under the operation");
    }
    // Exhaustive conjugation check.
    for (std::int64_t x = 0; x < g->order(); ++x)
        for (auto a : elems) {
            auto conj = g->op(g->op(x, a), g->inverse(x));
            if (!contains(conj))
                fail(Errc::NotNormal,
                     "conjugate of " + std::to_string(a) + " by " + std::to_string(x) + " escapes");
        }
}

class QuotientGroup;
using QuotientPtr = std::shared_ptr<const QuotientGroup>;

// A coset of N in G. Equality is decided purely by the canonical key:
// the residue for ℤ/mℤ (the value itself when N is trivial), the minimal
// member index for a finite group.
struct Coset {
    QuotientPtr quotient;
    GroupElement representative;
    std::int64_t key = 0;

    friend bool operator==(const Coset& a, const Coset& b) { return a.key == b.key; }
    friend bool operator!=(const Coset& a, const Coset& b) { return a.key != b.key; }
    friend bool operator<(const Coset& a, const Coset& b) { return a.key < b.key; }
};

class QuotientGroup : public std::enable_shared_from_this<QuotientGroup> {
public:
    static QuotientPtr make(GroupPtr parent, NormalSubgroup n)
    {
        validate_normal_subgroup(parent, n);
        auto q = std::shared_ptr<QuotientGroup>(new QuotientGroup());
        q->parent_ = std::move(parent);
        q->sub_ = std::move(n);
        q->build();
        return q;
    }

    const GroupPtr& parent() const { return parent_; }
    const NormalSubgroup& subgroup() const { return sub_; }

    /// The quotient itself as a Group value (ℤ when N is trivial over ℤ).
    const GroupPtr& as_group() const { return quotient_; }

    bool trivial() const { return sub_.is_trivial(*parent_); }

    std::int64_t key_of(const GroupElement& g) const
    {
        if (parent_->is_integers()) {
            if (sub_.modulus == 0)
                return g.value;
            auto r = g.value % sub_.modulus;
            return r < 0 ? r + sub_.modulus : r;
        }
        return key_of_index_[static_cast<std::size_t>(g.value)];
    }

    Coset coset_of(const GroupElement& g) const
    {
        return Coset{shared_from_this(), g, key_of(g)};
    }

    Coset mul(const Coset& a, const Coset& b) const
    {
        return coset_of(grada::mul(a.representative, b.representative));
    }

    Coset inverse(const Coset& c) const { return coset_of(grada::inverse(c.representative)); }

    Coset identity_coset() const { return coset_of(identity_of(parent_)); }

    /// Number of cosets; 0 means infinitely many (trivial N over ℤ).
    std::int64_t coset_count() const
    {
        if (parent_->is_integers())
            return sub_.modulus;
        return static_cast<std::int64_t>(distinct_keys_.size());
    }

    /// Cosets met by the parent window, in center-out order of first
    /// appearance. For a finite quotient this is all of G/N once the window
    /// is nonempty.
    std::vector<Coset> coset_window(std::int64_t bound) const
    {
        std::vector<Coset> out;
        std::vector<std::int64_t> seen;
        for (const auto& g : window_center_out(parent_, bound)) {
            auto key = key_of(g);
            if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                seen.push_back(key);
                out.push_back(coset_of(g));
            }
        }
        return out;
    }

private:
    QuotientGroup() = default;

    void build()
    {
        if (parent_->is_integers()) {
            quotient_ = sub_.modulus == 0 ? Group::integers() : Group::cyclic(sub_.modulus);
            return;
        }
        const auto n = parent_->order();
        key_of_index_.assign(static_cast<std::size_t>(n), -1);
        for (std::int64_t g = 0; g < n; ++g) {
            std::int64_t min_member = n;
            for (auto h : sub_.elements)
                min_member = std::min(min_member, parent_->op(g, h));
            key_of_index_[static_cast<std::size_t>(g)] = min_member;
        }
        for (auto k : key_of_index_)
            if (std::find(distinct_keys_.begin(), distinct_keys_.end(), k) == distinct_keys_.end())
                distinct_keys_.push_back(k);
        std::sort(distinct_keys_.begin(), distinct_keys_.end());
        // Quotient Cayley table over coset keys (indices = position in the
        // sorted key list); well-defined because normality was validated.
        const auto m = static_cast<std::int64_t>(distinct_keys_.size());
        std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(m),
                                                     std::vector<std::int64_t>(static_cast<std::size_t>(m)));
        auto pos = [&](std::int64_t key) {
            return static_cast<std::size_t>(
                std::lower_bound(distinct_keys_.begin(), distinct_keys_.end(), key) - distinct_keys_.begin());
        };
        for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) {
                auto prod = parent_->op(distinct_keys_[i], distinct_keys_[j]);
                table[i][j] = static_cast<std::int64_t>(pos(key_of_index_[static_cast<std::size_t>(prod)]));
            }
        quotient_ = Group::finite(table);
    }

    GroupPtr parent_;
    NormalSubgroup sub_;
    GroupPtr quotient_;
    std::vector<std::int64_t> key_of_index_;   // finite case: element index -> coset key
    std::vector<std::int64_t> distinct_keys_;
};

inline QuotientPtr quotient(GroupPtr g, NormalSubgroup n)
{
    return QuotientGroup::make(std::move(g), std::move(n));
}

inline std::string to_string(const GroupElement& g) { return std::to_string(g.value); }

inline std::string to_string(const Coset& c) { return "[" + std::to_string(c.key) + "]"; }

} // namespace grada

#endif
