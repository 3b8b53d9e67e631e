#ifndef GRADA_SPAN_HPP
#define GRADA_SPAN_HPP

#include <map>
#include <vector>

#include "grada/rational.hpp"

namespace grada {

// Exact rational span with sparse coordinates. Rows are kept in reduced row
// echelon form: pivot coefficient 1, pivot coordinate eliminated from every
// other row. Reduction touches only the pivots a vector actually meets, so
// membership tests stay proportional to the vector's support.
template <class Coord>
class RowSpan {
public:
    using Row = std::map<Coord, Rational>;

    /// Reduce, then insert if independent. Returns true when the rank grew.
    bool add(Row row)
    {
        reduce_in_place(row);
        if (row.empty())
            return false;
        const Coord pivot = row.begin()->first;
        Rational lead = row.begin()->second;
        for (auto& [c, v] : row)
            v /= lead;
        for (auto& existing : rows_) {
            auto it = existing.find(pivot);
            if (it == existing.end())
                continue;
            Rational factor = it->second;
            subtract_scaled(existing, row, factor);
        }
        pivot_index_.emplace(pivot, rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    Row reduce(Row v) const
    {
        reduce_in_place(v);
        return v;
    }

    bool contains(Row v) const
    {
        reduce_in_place(v);
        return v.empty();
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

private:
    void reduce_in_place(Row& v) const
    {
        // Rows are fully reduced, so subtracting a pivot row only introduces
        // non-pivot coordinates; one ascending sweep suffices.
        auto it = v.begin();
        while (it != v.end()) {
            auto pivot_it = pivot_index_.find(it->first);
            if (pivot_it == pivot_index_.end()) {
                ++it;
                continue;
            }
            Rational factor = it->second;
            const Coord current = it->first;
            subtract_scaled(v, rows_[pivot_it->second], factor);
            it = v.upper_bound(current);
        }
    }

    static void subtract_scaled(Row& target, const Row& source, const Rational& factor)
    {
        for (const auto& [c, v] : source) {
            auto it = target.find(c);
            if (it == target.end()) {
                Rational nv = -factor * v;
                if (nv != 0)
                    target.emplace(c, std::move(nv));
            } else {
                it->second -= factor * v;
                if (it->second == 0)
                    target.erase(it);
            }
        }
    }

    std::vector<Row> rows_;
    std::map<Coord, std::size_t> pivot_index_;
};

} // namespace grada

#endif
