#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace resolvekit {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

/// Undirected edge stored as its sorted endpoint pair.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) :
        u(a < b ? a : b),
        v(a < b ? b : a)
    {
    }

    auto touches(VertexId x) const noexcept -> bool { return x == u || x == v; }
    auto operator<=>(const Edge&) const = default;
};

enum class VertexClass : char { p = 'p', q = 'q', r = 'r', s = 's' };

/// Class plus 1-based cyclic index, e.g. s_3.
struct VertexLabel {
    VertexClass cls = VertexClass::p;
    int index = 1;

    auto operator<=>(const VertexLabel&) const = default;
};

auto to_string(const VertexLabel& label) -> std::string;
auto parse_label(std::string_view text) -> std::optional<VertexLabel>;

/// Immutable simple undirected graph. Edges are kept sorted, adjacency lists
/// are sorted, and optional class labels map vertices to p/q/r/s names.
class Graph {
public:
    Graph() = default;

    auto vertex_count() const noexcept -> std::size_t { return _adjacency.size(); }
    auto edge_count() const noexcept -> std::size_t { return _edges.size(); }
    auto edges() const noexcept -> std::span<const Edge> { return _edges; }
    auto neighbours(VertexId v) const -> std::span<const VertexId> { return _adjacency.at(v); }
    auto degree(VertexId v) const -> std::size_t { return _adjacency.at(v).size(); }
    auto has_edge(VertexId a, VertexId b) const -> bool;

    /// Position of an edge in the sorted edge list, or nullopt if absent.
    auto edge_index(const Edge& e) const -> std::optional<std::size_t>;

    auto has_labels() const noexcept -> bool { return ! _labels.empty(); }
    auto label_of(VertexId v) const -> VertexLabel;
    auto id_of(const VertexLabel& label) const -> VertexId;
    auto class_members(VertexClass cls) const -> std::vector<VertexId>;

    /// Attaches labels; one entry per vertex. Labels must be distinct.
    auto with_labels(std::vector<VertexLabel> labels) const -> Graph;

    friend auto build_graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) -> Graph;

private:
    std::vector<std::vector<VertexId>> _adjacency;
    std::vector<Edge> _edges;
    std::vector<VertexLabel> _labels;
    std::map<VertexLabel, VertexId> _ids_by_label;
};

/// Validates and canonicalises an edge list. Throws SelfLoop, DuplicateEdge or
/// VertexOutOfRange.
auto build_graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) -> Graph;

auto is_connected(const Graph& g) -> bool;

/// All-pairs hop counts, one breadth-first sweep per source.
class DistanceMatrix {
public:
    /// Throws Disconnected naming one unreachable pair.
    explicit DistanceMatrix(const Graph& g);

    auto size() const noexcept -> std::size_t { return _size; }
    auto operator()(VertexId a, VertexId b) const -> Distance { return _dist[a * _size + b]; }
    auto row(VertexId a) const -> std::span<const Distance> { return { _dist.data() + a * _size, _size }; }
    auto diameter() const noexcept -> Distance { return _diameter; }

private:
    std::size_t _size = 0;
    Distance _diameter = 0;
    std::vector<Distance> _dist;
};

inline auto all_pairs_distances(const Graph& g) -> DistanceMatrix { return DistanceMatrix{ g }; }

/// d(x, uv) = min(d(x, u), d(x, v)).
inline auto vertex_edge_distance(const DistanceMatrix& d, VertexId x, const Edge& e) -> Distance
{
    auto a = d(x, e.u), b = d(x, e.v);
    return a < b ? a : b;
}

/// A vertex or an edge of the graph.
using GraphElement = std::variant<VertexId, Edge>;

auto element_to_string(const Graph& g, const GraphElement& e) -> std::string;

/// Distance from landmark x to an arbitrary element.
inline auto element_distance(const DistanceMatrix& d, VertexId x, const GraphElement& el) -> Distance
{
    if (auto v = std::get_if<VertexId>(&el))
        return d(x, *v);
    return vertex_edge_distance(d, x, std::get<Edge>(el));
}

} // namespace resolvekit
