#include "resolvekit/families.hpp"
#include "resolvekit/error.hpp"

#include <vector>

namespace resolvekit {

namespace {
    using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

    auto require(bool ok, std::string_view family, int n, int minimum) -> void
    {
        if (! ok)
            throw Error(ErrorKind::InvalidN, std::string(family) + " needs n >= " + std::to_string(minimum)
                    + ", got " + std::to_string(n));
    }

    struct Layout {
        int n;
        auto id(VertexClass cls, int index) const -> VertexId
        {
            int block = 0;
            switch (cls) {
            case VertexClass::p: block = 0; break;
            case VertexClass::q: block = 1; break;
            case VertexClass::r: block = 2; break;
            case VertexClass::s: block = 3; break;
            }
            return static_cast<VertexId>(block * n + wrap_index(index, n) - 1);
        }
        auto p(int i) const { return id(VertexClass::p, i); }
        auto q(int i) const { return id(VertexClass::q, i); }
        auto r(int i) const { return id(VertexClass::r, i); }
        auto s(int i) const { return id(VertexClass::s, i); }
    };

    auto block_labels(int n, std::initializer_list<VertexClass> classes) -> std::vector<VertexLabel>
    {
        std::vector<VertexLabel> labels;
        for (auto cls : classes)
            for (int i = 1; i <= n; ++i)
                labels.push_back({ cls, i });
        return labels;
    }

    auto prism_edges(const Layout& at) -> EdgeList
    {
        EdgeList edges;
        for (int i = 1; i <= at.n; ++i) {
            edges.emplace_back(at.p(i), at.q(i));
            edges.emplace_back(at.p(i), at.p(i + 1));
            edges.emplace_back(at.q(i), at.q(i + 1));
        }
        return edges;
    }
}

auto to_string(Family f) -> std::string_view
{
    switch (f) {
    case Family::prism: return "prism";
    case Family::prism_allied: return "prism_allied";
    case Family::web: return "web";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    }
    return "unknown";
}

auto parse_family(std::string_view text) -> Family
{
    for (auto f : { Family::prism, Family::prism_allied, Family::web, Family::cycle, Family::path, Family::star })
        if (text == to_string(f))
            return f;
    if (text == "prism-allied")
        return Family::prism_allied;
    throw Error(ErrorKind::Usage, "unknown family '" + std::string(text) + "'");
}

auto prism_allied(int n) -> Graph
{
    require(n >= 3, "prism_allied", n, 3);
    Layout at{ n };
    auto edges = prism_edges(at);
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(at.r(i), at.q(i));
        edges.emplace_back(at.r(i), at.q(i + 1));
        edges.emplace_back(at.r(i), at.s(i));
    }
    return build_graph(4 * n, edges).with_labels(
            block_labels(n, { VertexClass::p, VertexClass::q, VertexClass::r, VertexClass::s }));
}

auto web(int n) -> Graph
{
    require(n >= 3, "web", n, 3);
    Layout at{ n };
    auto edges = prism_edges(at);
    for (int i = 1; i <= n; ++i)
        edges.emplace_back(at.r(i), at.q(i));
    return build_graph(3 * n, edges).with_labels(block_labels(n, { VertexClass::p, VertexClass::q, VertexClass::r }));
}

auto prism(int n) -> Graph
{
    require(n >= 3, "prism", n, 3);
    Layout at{ n };
    return build_graph(2 * n, prism_edges(at)).with_labels(block_labels(n, { VertexClass::p, VertexClass::q }));
}

auto cycle(int n) -> Graph
{
    require(n >= 3, "cycle", n, 3);
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

auto path(int k) -> Graph
{
    require(k >= 1, "path", k, 1);
    EdgeList edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.emplace_back(i, i + 1);
    return build_graph(k, edges);
}

auto star(int k) -> Graph
{
    require(k >= 1, "star", k, 1);
    EdgeList edges;
    for (int i = 1; i <= k; ++i)
        edges.emplace_back(0, i);
    return build_graph(k + 1, edges);
}

auto make_family(Family f, int n) -> Graph
{
    switch (f) {
    case Family::prism: return prism(n);
    case Family::prism_allied: return prism_allied(n);
    case Family::web: return web(n);
    case Family::cycle: return cycle(n);
    case Family::path: return path(n);
    case Family::star: return star(n);
    }
    throw Error(ErrorKind::Usage, "unknown family");
}

auto pendant_class(Family f) -> VertexClass
{
    switch (f) {
    case Family::prism_allied: return VertexClass::s;
    case Family::web: return VertexClass::r;
    default: throw Error(ErrorKind::Usage, std::string(to_string(f)) + " has no pendant class");
    }
}

} // namespace resolvekit
