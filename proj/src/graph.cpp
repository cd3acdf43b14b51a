#include "resolvekit/graph.hpp"
#include "resolvekit/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <set>

namespace resolvekit {

namespace {
    constexpr Distance unreached = std::numeric_limits<Distance>::max();

    auto bfs_from(const Graph& g, VertexId source, std::span<Distance> out) -> void
    {
        std::fill(out.begin(), out.end(), unreached);
        std::deque<VertexId> queue{ source };
        out[source] = 0;
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : g.neighbours(v))
                if (out[w] == unreached) {
                    out[w] = out[v] + 1;
                    queue.push_back(w);
                }
        }
    }
}

auto to_string(const VertexLabel& label) -> std::string
{
    return std::string(1, static_cast<char>(label.cls)) + std::to_string(label.index);
}

auto parse_label(std::string_view text) -> std::optional<VertexLabel>
{
    if (text.size() < 2)
        return std::nullopt;
    VertexLabel result;
    switch (text.front()) {
    case 'p': result.cls = VertexClass::p; break;
    case 'q': result.cls = VertexClass::q; break;
    case 'r': result.cls = VertexClass::r; break;
    case 's': result.cls = VertexClass::s; break;
    default: return std::nullopt;
    }
    text.remove_prefix(1);
    if (text.front() == '_')
        text.remove_prefix(1);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), result.index);
    if (ec != std::errc{} || end != text.data() + text.size() || result.index < 1)
        return std::nullopt;
    return result;
}

auto build_graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) -> Graph
{
    if (vertex_count == 0)
        throw Error(ErrorKind::VertexOutOfRange, "graph must have at least one vertex");

    Graph g;
    g._adjacency.resize(vertex_count);
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count)
            throw Error(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b)
                    + ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
        if (a == b)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
        if (! seen.emplace(a, b).second)
            throw Error(ErrorKind::DuplicateEdge, "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    g._edges.assign(seen.begin(), seen.end());
    for (auto& e : g._edges) {
        g._adjacency[e.u].push_back(e.v);
        g._adjacency[e.v].push_back(e.u);
    }
    for (auto& adj : g._adjacency)
        std::sort(adj.begin(), adj.end());
    return g;
}

auto Graph::has_edge(VertexId a, VertexId b) const -> bool
{
    if (a >= vertex_count() || b >= vertex_count())
        return false;
    return std::binary_search(_adjacency[a].begin(), _adjacency[a].end(), b);
}

auto Graph::edge_index(const Edge& e) const -> std::optional<std::size_t>
{
    auto it = std::lower_bound(_edges.begin(), _edges.end(), e);
    if (it == _edges.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - _edges.begin());
}

auto Graph::label_of(VertexId v) const -> VertexLabel
{
    if (! has_labels())
        throw Error(ErrorKind::UnlabeledGraph, "graph carries no vertex labels");
    if (v >= _labels.size())
        throw Error(ErrorKind::UnknownLabel, "no vertex with id " + std::to_string(v));
    return _labels[v];
}

auto Graph::id_of(const VertexLabel& label) const -> VertexId
{
    if (! has_labels())
        throw Error(ErrorKind::UnlabeledGraph, "graph carries no vertex labels");
    auto it = _ids_by_label.find(label);
    if (it == _ids_by_label.end())
        throw Error(ErrorKind::UnknownLabel, "no vertex labelled " + to_string(label));
    return it->second;
}

auto Graph::class_members(VertexClass cls) const -> std::vector<VertexId>
{
    std::vector<std::pair<int, VertexId>> found;
    for (auto& [label, id] : _ids_by_label)
        if (label.cls == cls)
            found.emplace_back(label.index, id);
    std::sort(found.begin(), found.end());
    std::vector<VertexId> result;
    for (auto& [_, id] : found)
        result.push_back(id);
    return result;
}

auto Graph::with_labels(std::vector<VertexLabel> labels) const -> Graph
{
    if (labels.size() != vertex_count())
        throw Error(ErrorKind::UnknownLabel, "label count " + std::to_string(labels.size())
                + " does not match vertex count " + std::to_string(vertex_count()));
    Graph result = *this;
    result._ids_by_label.clear();
    for (VertexId v = 0; v < labels.size(); ++v)
        if (! result._ids_by_label.emplace(labels[v], v).second)
            throw Error(ErrorKind::UnknownLabel, "label " + to_string(labels[v]) + " used twice");
    result._labels = std::move(labels);
    return result;
}

auto is_connected(const Graph& g) -> bool
{
    std::vector<Distance> dist(g.vertex_count());
    bfs_from(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [] (Distance d) { return d == unreached; });
}

DistanceMatrix::DistanceMatrix(const Graph& g) :
    _size(g.vertex_count()),
    _dist(_size * _size)
{
    for (VertexId s = 0; s < _size; ++s) {
        std::span<Distance> row{ _dist.data() + s * _size, _size };
        bfs_from(g, s, row);
        for (VertexId t = 0; t < _size; ++t) {
            if (row[t] == unreached)
                throw Error(ErrorKind::Disconnected, "graph is disconnected: no path between vertices "
                        + std::to_string(s) + " and " + std::to_string(t));
            _diameter = std::max(_diameter, row[t]);
        }
    }
}

auto element_to_string(const Graph& g, const GraphElement& el) -> std::string
{
    auto name = [&] (VertexId v) { return g.has_labels() ? to_string(g.label_of(v)) : std::to_string(v); };
    if (auto v = std::get_if<VertexId>(&el))
        return name(*v);
    auto& e = std::get<Edge>(el);
    return g.has_labels() ? name(e.u) + name(e.v) : name(e.u) + "-" + name(e.v);
}

} // namespace resolvekit
