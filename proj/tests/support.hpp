#pragma once

// Independent reference implementation used by the tests. It only reads the
// vertex count and edge list of a Graph; distances, element lists and the
// separation check are all recomputed here the slow way.

#include "resolvekit/graph.hpp"
#include "resolvekit/resolvability.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace support {

using resolvekit::Graph;
using resolvekit::ResolutionMode;
using resolvekit::VertexId;

inline auto floyd_warshall(const Graph& g) -> std::vector<std::vector<int>>
{
    const int inf = 1 << 20;
    auto n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i)
        d[i][i] = 0;
    for (auto& e : g.edges())
        d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// A vertex is {v, v}; an edge is {u, v} with u < v.
using Item = std::pair<VertexId, VertexId>;

inline auto items(const Graph& g, ResolutionMode mode) -> std::vector<Item>
{
    std::vector<Item> out;
    if (mode != ResolutionMode::edge)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out.emplace_back(v, v);
    if (mode != ResolutionMode::vertex) {
        std::vector<Item> edges;
        for (auto& e : g.edges())
            edges.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(edges.begin(), edges.end());
        out.insert(out.end(), edges.begin(), edges.end());
    }
    return out;
}

inline auto resolves(const std::vector<std::vector<int>>& d, const std::vector<Item>& elements,
        const std::vector<VertexId>& landmarks) -> bool
{
    auto dist = [&](VertexId x, const Item& it) { return std::min(d[x][it.first], d[x][it.second]); };
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            bool separated = false;
            for (auto x : landmarks)
                if (dist(x, elements[i]) != dist(x, elements[j])) {
                    separated = true;
                    break;
                }
            if (! separated)
                return false;
        }
    return true;
}

struct BruteResult {
    std::size_t dimension = 0;
    std::vector<VertexId> basis;
    std::vector<std::vector<VertexId>> all_bases;
};

// Smallest resolving set, first in lexicographic order, plus every other one
// of the same size.
inline auto brute_force_dimension(const Graph& g, ResolutionMode mode) -> BruteResult
{
    auto d = floyd_warshall(g);
    auto elements = items(g, mode);
    auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId k = 1; k <= n; ++k) {
        BruteResult result;
        std::vector<VertexId> pick(k);
        for (VertexId i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            if (resolves(d, elements, pick)) {
                if (result.all_bases.empty())
                    result.basis = pick;
                result.all_bases.push_back(pick);
            }
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && pick[i] == n - k + static_cast<VertexId>(i))
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (auto j = static_cast<VertexId>(i) + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        if (! result.all_bases.empty()) {
            result.dimension = k;
            return result;
        }
    }
    return {};
}

// Random spanning tree plus extra edges with probability density.
inline auto random_connected_graph(std::mt19937& rng, std::size_t min_n, std::size_t max_n, double density = 0.3)
        -> Graph
{
    auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
    std::set<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v) {
        auto parent = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
        edges.emplace(parent, v);
    }
    std::bernoulli_distribution extra(density);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (extra(rng))
                edges.emplace(a, b);
    std::vector<std::pair<VertexId, VertexId>> list(edges.begin(), edges.end());
    return resolvekit::build_graph(n, list);
}

} // namespace support
