// Brute-force reference for finite acyclic quivers, independent of the
// classifier machinery: it enumerates the complete normal-monomial basis with
// its own path walker, collects the full product space S_C·S_{C^{-1}} as
// dense rational rows, and decides unitality by solving the exact linear
// identity-element system with a local Gauss-Jordan elimination. Only the
// LpaElement arithmetic is shared with the code under test; spans, epsilon
// families, join chains and verdicts are not.
#ifndef GRADA_TESTS_ORACLE_HPP
#define GRADA_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grada/leavitt.hpp"

namespace oracle {

using grada::LpaElement;
using grada::Monomial;
using grada::Path;
using grada::Quiver;
using grada::QuiverPtr;
using grada::Rational;
using grada::StandardGrading;

inline void walk_paths(const Quiver& q, const Path& p, std::vector<Path>& out)
{
    out.push_back(p);
    for (auto e : q.out_edges(p.range(q))) {
        Path ext = p;
        ext.edges.push_back(e);
        walk_paths(q, ext, out);
    }
}

/// Every normal monomial of the (finite-dimensional) algebra of a finite
/// acyclic quiver.
inline std::vector<Monomial> full_basis(const QuiverPtr& q)
{
    std::vector<Path> paths;
    for (std::uint32_t v = 0; v < q->vertex_count(); ++v)
        walk_paths(*q, grada::vertex_path(v), paths);
    std::vector<Monomial> out;
    for (const auto& a : paths)
        for (const auto& b : paths) {
            if (a.range(*q) != b.range(*q))
                continue;
            Monomial m{a, b};
            if (grada::monomial_normal(*q, m))
                out.push_back(std::move(m));
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t coset_key(std::int64_t degree, std::int64_t modulus)
{
    if (modulus == 0)
        return degree;
    auto r = degree % modulus;
    return r < 0 ? r + modulus : r;
}

inline std::int64_t degree_value(const Monomial& m, const StandardGrading& grading)
{
    std::int64_t d = 0;
    for (auto e : m.real.edges)
        d += grading.edge_degree[e].value;
    for (auto e : m.ghost.edges)
        d -= grading.edge_degree[e].value;
    return d;
}

using DenseRow = std::vector<Rational>;

/// Gauss-Jordan elimination; rows end up with leading 1 and cleared columns.
struct DenseSolver {
    std::vector<DenseRow> rows;
    std::vector<std::size_t> lead;   // pivot column per row

    bool add(DenseRow r)
    {
        reduce(r);
        auto col = first_nonzero(r);
        if (!col)
            return false;
        Rational inv = r[*col];
        for (auto& v : r)
            v /= inv;
        for (auto& existing : rows) {
            if (existing[*col] == 0)
                continue;
            Rational f = existing[*col];
            for (std::size_t i = 0; i < existing.size(); ++i)
                existing[i] -= f * r[i];
        }
        lead.push_back(*col);
        rows.push_back(std::move(r));
        return true;
    }

    void reduce(DenseRow& r) const
    {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Rational f = r[lead[k]];
            if (f == 0)
                continue;
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= f * rows[k][i];
        }
    }

    static std::optional<std::size_t> first_nonzero(const DenseRow& r)
    {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0)
                return i;
        return std::nullopt;
    }
};

struct CosetAlgebra {
    std::vector<LpaElement> products;        // spanning set of S_C S_{C^{-1}}
    std::vector<LpaElement> product_basis;   // linearly independent subset
};

inline DenseRow dense_coords(const LpaElement& x, const std::vector<Monomial>& basis)
{
    DenseRow row(basis.size(), Rational(0));
    for (const auto& [m, c] : x.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        row[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return row;
}

/// True iff the ring spanned by the product set has a two-sided identity:
/// solve for x in the product space with x·p = p = p·x for every spanning p.
inline bool has_identity(const CosetAlgebra& alg, const std::vector<Monomial>& basis)
{
    const auto& gens = alg.product_basis;
    if (gens.empty())
        return true;   // the zero ring is unital
    const std::size_t r = gens.size();
    // Unknowns: coefficients of x over the product basis. Equations: for
    // every spanning product p, coordinates of x·p - p and p·x - p vanish.
    std::vector<DenseRow> equations;   // each row: r coefficients | rhs
    for (const auto& p : alg.products) {
        std::vector<DenseRow> left_cols, right_cols;
        for (const auto& g : gens) {
            left_cols.push_back(dense_coords(g * p, basis));
            right_cols.push_back(dense_coords(p * g, basis));
        }
        DenseRow target = dense_coords(p, basis);
        for (std::size_t coord = 0; coord < basis.size(); ++coord) {
            DenseRow eq_left(r + 1, Rational(0)), eq_right(r + 1, Rational(0));
            bool nonzero_l = false, nonzero_r = false;
            for (std::size_t k = 0; k < r; ++k) {
                eq_left[k] = left_cols[k][coord];
                eq_right[k] = right_cols[k][coord];
                nonzero_l = nonzero_l || eq_left[k] != 0;
                nonzero_r = nonzero_r || eq_right[k] != 0;
            }
            eq_left[r] = target[coord];
            eq_right[r] = target[coord];
            if (nonzero_l || eq_left[r] != 0)
                equations.push_back(std::move(eq_left));
            if (nonzero_r || eq_right[r] != 0)
                equations.push_back(std::move(eq_right));
        }
    }
    // Solvability of the inhomogeneous system: eliminating must never yield a
    // row with zero coefficients and nonzero right-hand side.
    DenseSolver solver;
    for (auto& eq : equations) {
        solver.reduce(eq);
        auto col = DenseSolver::first_nonzero(eq);
        if (!col)
            continue;
        if (*col == r)
            return false;   // 0 = nonzero: inconsistent
        Rational inv = eq[*col];
        for (auto& v : eq)
            v /= inv;
        for (auto& existing : solver.rows) {
            if (existing[*col] == 0)
                continue;
            Rational f = existing[*col];
            for (std::size_t i = 0; i < existing.size(); ++i)
                existing[i] -= f * eq[i];
        }
        solver.lead.push_back(*col);
        solver.rows.push_back(std::move(eq));
    }
    return true;
}

/// Per-coset unitality of S_C·S_{C^{-1}} for the induced Z/mZ-grading
/// (modulus 0 = the parent Z-grading), decided by brute force.
inline std::map<std::int64_t, bool> epsilon_strong_by_force(const QuiverPtr& q,
                                                            const StandardGrading& grading,
                                                            std::int64_t modulus)
{
    auto basis = full_basis(q);
    std::map<std::int64_t, std::vector<Monomial>> by_coset;
    for (const auto& m : basis)
        by_coset[coset_key(degree_value(m, grading), modulus)].push_back(m);

    std::map<std::int64_t, bool> result;
    std::vector<std::int64_t> keys;
    if (modulus == 0)
        for (const auto& [k, v] : by_coset)
            keys.push_back(k);
    else
        for (std::int64_t k = 0; k < modulus; ++k)
            keys.push_back(k);

    for (auto key : keys) {
        auto inv_key = coset_key(-key, modulus);
        CosetAlgebra alg;
        DenseSolver independent;
        auto left = by_coset.count(key) ? by_coset[key] : std::vector<Monomial>{};
        auto right = by_coset.count(inv_key) ? by_coset[inv_key] : std::vector<Monomial>{};
        for (const auto& a : left)
            for (const auto& b : right) {
                auto prod = LpaElement::from_monomial(q, a) * LpaElement::from_monomial(q, b);
                if (prod.is_zero())
                    continue;
                if (independent.add(dense_coords(prod, basis)))
                    alg.product_basis.push_back(prod);
                alg.products.push_back(std::move(prod));
            }
        result[key] = has_identity(alg, basis);
    }
    return result;
}

} // namespace oracle

#endif
