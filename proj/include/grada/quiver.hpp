#ifndef GRADA_QUIVER_HPP
#define GRADA_QUIVER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grada/error.hpp"

namespace grada {

// Directed graph E = (E0, E1, s, r). Finite quivers carry explicit vertex
// names; the discrete infinite quiver (no edges, vertices v1, v2, ...) is
// represented lazily by vertex index and enumerated under a caller-chosen
// truncation.
class Quiver {
public:
    enum class Kind { Finite, DiscreteInfinite };

    struct Edge {
        std::string id;
        std::uint32_t src;
        std::uint32_t rng;
    };

    static std::shared_ptr<const Quiver> finite(
        std::vector<std::string> vertices,
        const std::vector<std::tuple<std::string, std::string, std::string>>& edges)
    {
        auto q = std::shared_ptr<Quiver>(new Quiver());
        q->kind_ = Kind::Finite;
        q->vertices_ = std::move(vertices);
        for (std::size_t i = 0; i < q->vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < q->vertices_.size(); ++j)
                if (q->vertices_[i] == q->vertices_[j])
                    fail(Errc::ParseError, "duplicate vertex id '" + q->vertices_[i] + "'");
        for (const auto& [id, src, rng] : edges) {
            auto s = q->vertex_index(src);
            auto r = q->vertex_index(rng);
            if (!s || !r)
                fail(Errc::ParseError, "edge '" + id + "' references a missing vertex");
            for (const auto& e : q->edges_)
                if (e.id == id)
                    fail(Errc::ParseError, "duplicate edge id '" + id + "'");
            q->edges_.push_back(Edge{id, *s, *r});
        }
        q->index_edges();
        return q;
    }

    static std::shared_ptr<const Quiver> discrete_infinite()
    {
        auto q = std::shared_ptr<Quiver>(new Quiver());
        q->kind_ = Kind::DiscreteInfinite;
        return q;
    }

    Kind kind() const { return kind_; }
    bool is_discrete_infinite() const { return kind_ == Kind::DiscreteInfinite; }

    std::size_t vertex_count() const { return vertices_.size(); }   // finite only
    const std::vector<Edge>& edges() const { return edges_; }

    std::string vertex_name(std::uint32_t v) const
    {
        if (kind_ == Kind::DiscreteInfinite)
            return "v" + std::to_string(v + 1);
        return vertices_[v];
    }

    std::optional<std::uint32_t> vertex_index(const std::string& name) const
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name)
                return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }

    std::optional<std::uint32_t> edge_index(const std::string& id) const
    {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].id == id)
                return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }

    /// Outgoing edges in insertion order; empty for the discrete quiver.
    const std::vector<std::uint32_t>& out_edges(std::uint32_t v) const
    {
        static const std::vector<std::uint32_t> none;
        if (kind_ == Kind::DiscreteInfinite || v >= out_.size())
            return none;
        return out_[v];
    }

    /// Regular: s^{-1}(v) nonempty (and finite, which is automatic here).
    bool regular(std::uint32_t v) const { return !out_edges(v).empty(); }

    /// The first outgoing edge in insertion order; the oriented rewriting of
    /// the vertex relation is anchored at this edge.
    std::uint32_t distinguished_edge(std::uint32_t v) const { return out_edges(v).front(); }

    bool acyclic() const { return acyclic_; }

    /// Longest real path length; only meaningful for finite acyclic quivers.
    std::size_t longest_path() const { return longest_path_; }

    bool same(const Quiver& other) const
    {
        if (kind_ != other.kind_)
            return false;
        if (kind_ == Kind::DiscreteInfinite)
            return true;
        if (vertices_ != other.vertices_ || edges_.size() != other.edges_.size())
            return false;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].id != other.edges_[i].id || edges_[i].src != other.edges_[i].src
                || edges_[i].rng != other.edges_[i].rng)
                return false;
        return true;
    }

private:
    Quiver() = default;

    void index_edges()
    {
        out_.assign(vertices_.size(), {});
        for (std::size_t i = 0; i < edges_.size(); ++i)
            out_[edges_[i].src].push_back(static_cast<std::uint32_t>(i));
        compute_acyclicity();
    }

    void compute_acyclicity()
    {
        const std::size_t n = vertices_.size();
        std::vector<int> state(n, 0);   // 0 unseen, 1 on stack, 2 done
        std::vector<std::int64_t> longest(n, -1);
        acyclic_ = true;
        auto dfs = [&](auto&& self, std::uint32_t v) -> std::int64_t {
            if (state[v] == 1) {
                acyclic_ = false;
                return 0;
            }
            if (state[v] == 2)
                return longest[v];
            state[v] = 1;
            std::int64_t best = 0;
            for (auto e : out_[v]) {
                if (!acyclic_)
                    break;
                best = std::max(best, 1 + self(self, edges_[e].rng));
            }
            state[v] = 2;
            longest[v] = best;
            return best;
        };
        std::int64_t overall = 0;
        for (std::uint32_t v = 0; v < n && acyclic_; ++v)
            overall = std::max(overall, dfs(dfs, v));
        longest_path_ = acyclic_ ? static_cast<std::size_t>(overall) : 0;
    }

    Kind kind_ = Kind::Finite;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> out_;
    bool acyclic_ = true;
    std::size_t longest_path_ = 0;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// The two-vertex quiver with a single edge f: v1 -> v2.
inline QuiverPtr quiver_fig2()
{
    return Quiver::finite({"v1", "v2"}, {{"f", "v1", "v2"}});
}

/// One vertex, one loop.
inline QuiverPtr quiver_loop()
{
    return Quiver::finite({"v"}, {{"x", "v", "v"}});
}

inline QuiverPtr quiver_builtin(const std::string& name)
{
    if (name == "fig2")
        return quiver_fig2();
    if (name == "loop")
        return quiver_loop();
    if (name == "discrete_inf")
        return Quiver::discrete_infinite();
    fail(Errc::UnknownBuiltin, "quiver builtin '" + name + "'");
}

} // namespace grada

#endif
