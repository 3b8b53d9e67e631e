#ifndef GRADA_IDEMPOTENTS_HPP
#define GRADA_IDEMPOTENTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "grada/error.hpp"

namespace grada {

// Idempotent order and join machinery, generic over any carrier with ring
// addition, subtraction, multiplication, exact equality, and a
// default-constructed zero. The partial order is a ≤ b iff a = ab = ba;
// joins are only formed for commuting pairs, where a ∨ b = a + b - ab.

template <class T>
bool is_idempotent(const T& a)
{
    return a * a == a;
}

template <class T>
bool commute(const T& a, const T& b)
{
    return a * b == b * a;
}

template <class T>
void require_idempotent(const T& a)
{
    if (!is_idempotent(a))
        fail(Errc::NotIdempotent, "argument is not idempotent");
}

template <class T>
bool idem_leq(const T& a, const T& b)
{
    require_idempotent(a);
    require_idempotent(b);
    return a == a * b && a == b * a;
}

template <class T>
T idem_meet(const T& a, const T& b)
{
    require_idempotent(a);
    require_idempotent(b);
    if (!commute(a, b))
        fail(Errc::NonCommuting, "meet requires commuting idempotents");
    return a * b;
}

template <class T>
T idem_join(const T& a, const T& b)
{
    require_idempotent(a);
    require_idempotent(b);
    if (!commute(a, b))
        fail(Errc::NonCommuting, "join requires commuting idempotents");
    return a + b - a * b;
}

template <class T>
bool are_orthogonal(const T& a, const T& b)
{
    return a * b == T{} && b * a == T{};
}

/// Duplicate-free list of idempotents. Validates both invariants.
template <class T>
std::vector<T> make_idem_set(std::vector<T> elements)
{
    std::vector<T> out;
    for (auto& e : elements) {
        require_idempotent(e);
        bool seen = false;
        for (const auto& o : out)
            seen = seen || o == e;
        if (!seen)
            out.push_back(std::move(e));
    }
    return out;
}

/// Smallest ∨-closed superset, computed to fixpoint. Finite because the
/// joins of a finite commuting family form a finite lattice.
template <class T>
std::vector<T> join_closure(const std::vector<T>& generators)
{
    std::vector<T> closure = make_idem_set(generators);
    auto member = [&](const T& x) {
        for (const auto& e : closure)
            if (e == x)
                return true;
        return false;
    };
    for (std::size_t i = 0; i < closure.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            T joined = idem_join(closure[i], closure[j]);
            if (!member(joined))
                closure.push_back(std::move(joined));
        }
    return closure;
}

template <class T>
struct GreatestElement {
    std::optional<T> value;
    std::vector<bool> dominates;   // per input element, the idem_leq certificate
};

/// The join of the whole (commuting) set together with the per-element
/// domination checks. Empty set has no greatest element.
template <class T>
GreatestElement<T> greatest_element(const std::vector<T>& set)
{
    GreatestElement<T> result;
    if (set.empty())
        return result;
    T top = set.front();
    require_idempotent(top);
    for (std::size_t i = 1; i < set.size(); ++i)
        top = idem_join(top, set[i]);
    bool all = true;
    for (const auto& e : set) {
        bool le = idem_leq(e, top);
        result.dominates.push_back(le);
        all = all && le;
    }
    if (all)
        result.value = std::move(top);
    return result;
}

/// Elements of the set with no strictly larger element in the set.
template <class T>
std::vector<T> maximal_elements(const std::vector<T>& set)
{
    std::vector<T> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < set.size() && !dominated; ++j)
            dominated = i != j && set[i] != set[j] && idem_leq(set[i], set[j]);
        if (!dominated)
            out.push_back(set[i]);
    }
    return out;
}

// Common-unit construction: given pairs (u_i, x_i) with u_i x_i = x_i, build
// one element fixing every x_i by the induction
//   e = e' + u_n - e' u_n,  with e' a common unit of x_i - u_n x_i (i < n).
// The result is a ring combination of the units and need not be idempotent.
template <class T>
T tominaga_left_unit(const std::vector<std::pair<T, T>>& pairs)
{
    if (pairs.empty())
        fail(Errc::BadWitness, "no witness pairs");
    for (const auto& [unit, x] : pairs)
        if (!(unit * x == x))
            fail(Errc::BadWitness, "unit does not fix its element");
    if (pairs.size() == 1)
        return pairs.front().first;
    const T& last_unit = pairs.back().first;
    std::vector<std::pair<T, T>> reduced;
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
        reduced.emplace_back(pairs[i].first, pairs[i].second - last_unit * pairs[i].second);
    T common = tominaga_left_unit(reduced);
    return common + last_unit - common * last_unit;
}

/// Mirrored variant for pairs with x_i u_i = x_i.
template <class T>
T tominaga_right_unit(const std::vector<std::pair<T, T>>& pairs)
{
    if (pairs.empty())
        fail(Errc::BadWitness, "no witness pairs");
    for (const auto& [unit, x] : pairs)
        if (!(x * unit == x))
            fail(Errc::BadWitness, "unit does not fix its element");
    if (pairs.size() == 1)
        return pairs.front().first;
    const T& last_unit = pairs.back().first;
    std::vector<std::pair<T, T>> reduced;
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
        reduced.emplace_back(pairs[i].first, pairs[i].second - pairs[i].second * last_unit);
    T common = tominaga_right_unit(reduced);
    return common + last_unit - last_unit * common;
}

} // namespace grada

#endif
