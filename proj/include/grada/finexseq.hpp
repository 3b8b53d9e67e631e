#ifndef GRADA_FINEXSEQ_HPP
#define GRADA_FINEXSEQ_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "grada/rational.hpp"

namespace grada {

// A bi-infinite rational sequence holding a default value everywhere except
// at finitely many positions. This fragment of the full sequence ring is
// closed under componentwise addition and multiplication and under bilateral
// shifts, and it contains every sequence the partial-action examples use.
//
// Canonical form: no stored exception equals the default, so equality is
// plain memberwise comparison.
class FinExSeq {
public:
    FinExSeq() = default;

    FinExSeq(Rational default_value, std::map<std::int64_t, Rational> exceptions)
        : default_(std::move(default_value)), exceptions_(std::move(exceptions))
    {
        canonicalize();
    }

    static FinExSeq constant(Rational v) { return FinExSeq(std::move(v), {}); }

    static FinExSeq zero() { return FinExSeq(); }

    /// Kronecker sequence e_i: 1 at position i, 0 elsewhere.
    static FinExSeq kronecker(std::int64_t i) { return FinExSeq(0, {{i, 1}}); }

    const Rational& default_value() const { return default_; }
    const std::map<std::int64_t, Rational>& exceptions() const { return exceptions_; }

    const Rational& at(std::int64_t pos) const
    {
        auto it = exceptions_.find(pos);
        return it == exceptions_.end() ? default_ : it->second;
    }

    bool is_zero() const { return default_ == 0 && exceptions_.empty(); }

    /// Idempotent iff every component value is 0 or 1.
    bool is_idempotent() const
    {
        if (!is_idempotent_value(default_))
            return false;
        for (const auto& [pos, v] : exceptions_)
            if (!is_idempotent_value(v))
                return false;
        return true;
    }

    friend FinExSeq operator+(const FinExSeq& a, const FinExSeq& b)
    {
        return pointwise(a, b, [](const Rational& x, const Rational& y) { return x + y; });
    }

    friend FinExSeq operator-(const FinExSeq& a, const FinExSeq& b)
    {
        return pointwise(a, b, [](const Rational& x, const Rational& y) { return x - y; });
    }

    friend FinExSeq operator*(const FinExSeq& a, const FinExSeq& b)
    {
        return pointwise(a, b, [](const Rational& x, const Rational& y) { return x * y; });
    }

    friend FinExSeq operator*(const Rational& c, const FinExSeq& a)
    {
        std::map<std::int64_t, Rational> ex;
        for (const auto& [pos, v] : a.exceptions_)
            ex.emplace(pos, c * v);
        return FinExSeq(c * a.default_, std::move(ex));
    }

    /// Bilateral shift: position j of the result holds the value the input
    /// held at position j - n, so shift(e_0, 3) = e_3 and shifts compose
    /// additively.
    FinExSeq shifted(std::int64_t n) const
    {
        std::map<std::int64_t, Rational> ex;
        for (const auto& [pos, v] : exceptions_)
            ex.emplace(pos + n, v);
        return FinExSeq(default_, std::move(ex));
    }

    friend bool operator==(const FinExSeq& a, const FinExSeq& b)
    {
        return a.default_ == b.default_ && a.exceptions_ == b.exceptions_;
    }
    friend bool operator!=(const FinExSeq& a, const FinExSeq& b) { return !(a == b); }

    friend bool operator<(const FinExSeq& a, const FinExSeq& b)
    {
        if (a.default_ != b.default_)
            return a.default_ < b.default_;
        return a.exceptions_ < b.exceptions_;
    }

private:
    template <class F>
    static FinExSeq pointwise(const FinExSeq& a, const FinExSeq& b, F&& f)
    {
        std::set<std::int64_t> positions;
        for (const auto& [pos, v] : a.exceptions_)
            positions.insert(pos);
        for (const auto& [pos, v] : b.exceptions_)
            positions.insert(pos);
        std::map<std::int64_t, Rational> ex;
        for (auto pos : positions)
            ex.emplace(pos, f(a.at(pos), b.at(pos)));
        return FinExSeq(f(a.default_, b.default_), std::move(ex));
    }

    void canonicalize()
    {
        for (auto it = exceptions_.begin(); it != exceptions_.end();)
            it = it->second == default_ ? exceptions_.erase(it) : std::next(it);
    }

    Rational default_ = 0;
    std::map<std::int64_t, Rational> exceptions_;
};

inline FinExSeq seq_make(Rational default_value, std::map<std::int64_t, Rational> exceptions)
{
    return FinExSeq(std::move(default_value), std::move(exceptions));
}

inline FinExSeq seq_shift(const FinExSeq& a, std::int64_t n) { return a.shifted(n); }

inline std::string to_string(const FinExSeq& a)
{
    std::string out = "{default " + to_string(a.default_value());
    if (!a.exceptions().empty()) {
        out += ";";
        for (const auto& [pos, v] : a.exceptions())
            out += " " + std::to_string(pos) + ":" + to_string(v);
    }
    return out + "}";
}

} // namespace grada

#endif
