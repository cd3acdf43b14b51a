#include "doctest.h"

#include "resolvekit/error.hpp"
#include "resolvekit/families.hpp"
#include "resolvekit/resolvability.hpp"
#include "support.hpp"

using namespace resolvekit;

namespace {
using Ids = std::vector<VertexId>;

auto labelled(const Graph& g, std::initializer_list<VertexLabel> labels) -> LandmarkSet
{
    Ids ids;
    for (auto& l : labels)
        ids.push_back(g.id_of(l));
    return LandmarkSet{ ids };
}

auto pendants_plus_p1(const Graph& g, Family f) -> LandmarkSet
{
    Ids ids{ g.id_of({ VertexClass::p, 1 }) };
    for (auto v : g.class_members(pendant_class(f)))
        ids.push_back(v);
    return LandmarkSet{ ids };
}

auto exact(const Graph& g, ResolutionMode mode, SearchOptions opts = {}) -> DimensionResult
{
    return exact_dimension(g, DistanceMatrix(g), mode, opts);
}

constexpr auto V = VertexClass::p;
constexpr auto Q = VertexClass::q;
constexpr auto R = VertexClass::r;
constexpr auto S = VertexClass::s;
}

TEST_CASE("landmark sets")
{
    CHECK_THROWS_AS(LandmarkSet(Ids{ 1, 2, 1 }), Error);
    LandmarkSet l{ Ids{ 4, 1 } };
    CHECK(l.sorted().ids() == Ids{ 1, 4 });
    CHECK(l.with(0).ids() == Ids{ 4, 1, 0 });
    CHECK(l.without(4).ids() == Ids{ 1 });
    CHECK(l.contains(4));
    CHECK_THROWS_AS(LandmarkSet{ Ids{ 9 } }.validate(path(3)), Error);
}

TEST_CASE("mixed codes")
{
    auto g = prism_allied(6);
    DistanceMatrix d(g);
    auto m = labelled(g, { { V, 1 }, { S, 1 }, { S, 2 }, { S, 4 }, { S, 5 } });
    auto s1 = g.id_of({ S, 1 });
    CHECK(mixed_code(d, s1, m) == MixedCode{ 3, 0, 4, 6, 5 });
    CHECK(mixed_code(d, g.id_of({ V, 1 }), m).front() == 0);

    auto w = web(7);
    DistanceMatrix dw(w);
    for (int i = 1; i <= 7; ++i) {
        auto q = w.id_of({ Q, i });
        auto r = w.id_of({ R, i });
        auto without = labelled(w, { { V, 1 }, { R, i == 1 ? 2 : 1 } });
        CHECK(mixed_code(dw, Edge{ q, r }, without) == mixed_code(dw, q, without));
    }
}

TEST_CASE("element universe order")
{
    auto g = cycle(4);
    auto u = element_universe(g, ResolutionMode::mixed);
    REQUIRE(u.size() == 8);
    CHECK(std::get<VertexId>(u[3]) == 3);
    CHECK(std::get<Edge>(u[4]) == Edge{ 0, 1 });
    CHECK(std::get<Edge>(u[5]) == Edge{ 0, 3 });
    CHECK(element_universe(g, ResolutionMode::edge).size() == 4);
}

TEST_CASE("generator checks")
{
    auto w = web(4);
    DistanceMatrix d(w);
    CHECK(is_generator(w, d, pendants_plus_p1(w, Family::web), ResolutionMode::mixed));

    LandmarkSet leaves{ w.class_members(R) };
    auto check = is_generator(w, d, leaves, ResolutionMode::mixed);
    REQUIRE_FALSE(check);
    REQUIRE(check.witness);
    auto [a, b] = *check.witness;
    CHECK(element_to_string(w, a) == "q1");
    CHECK(element_to_string(w, b) == "p1q1");
    CHECK(mixed_code(d, a, leaves) == mixed_code(d, b, leaves));

    Ids all;
    for (VertexId v = 0; v < w.vertex_count(); ++v)
        all.push_back(v);
    CHECK(is_generator(w, d, LandmarkSet{ all }, ResolutionMode::vertex));
    CHECK_THROWS_AS(is_generator(w, d, LandmarkSet{}, ResolutionMode::mixed), Error);
}

TEST_CASE("independence")
{
    auto g = prism_allied(8);
    CHECK(is_independent_set(g, pendants_plus_p1(g, Family::prism_allied)));
    CHECK_FALSE(is_independent_set(g, labelled(g, { { V, 1 }, { Q, 1 } })));
    CHECK(is_independent_set(g, LandmarkSet{ Ids{ 5 } }));
}

TEST_CASE("forced pendant landmarks")
{
    for (int n : { 4, 6, 9 }) {
        auto pa = prism_allied(n);
        auto forced = forced_pendant_landmarks(pa, DistanceMatrix(pa));
        CHECK(forced.leaves.ids() == pa.class_members(S));
        CHECK(forced.evidence.size() == static_cast<std::size_t>(n));
        auto w = web(n);
        CHECK(forced_pendant_landmarks(w, DistanceMatrix(w)).leaves.ids() == w.class_members(R));
    }
    auto c = cycle(7);
    CHECK(forced_pendant_landmarks(c, DistanceMatrix(c)).leaves.empty());
    auto s = star(4);
    auto forced = forced_pendant_landmarks(s, DistanceMatrix(s));
    CHECK(forced.leaves.ids() == Ids{ 1, 2, 3, 4 });
    CHECK(forced.evidence[2].support == 0);
}

TEST_CASE("lower bound certificates")
{
    auto pa = prism_allied(6);
    DistanceMatrix d(pa);
    auto cert = lower_bound_certificate(pa, d);
    CHECK(cert.bound == 7);
    REQUIRE(cert.failure_witness);
    auto [a, b] = *cert.failure_witness;
    CHECK(mixed_code(d, a, cert.forced.leaves) == mixed_code(d, b, cert.forced.leaves));

    auto w = web(8);
    CHECK(lower_bound_certificate(w, DistanceMatrix(w)).bound == 9);

    auto p = path(5);
    auto pc = lower_bound_certificate(p, DistanceMatrix(p));
    CHECK(pc.forced.leaves.ids() == Ids{ 0, 4 });
    CHECK(pc.bound == 2);
    CHECK_FALSE(pc.failure_witness);

    auto c = cycle(6);
    CHECK(lower_bound_certificate(c, DistanceMatrix(c)).bound == 1);
}

TEST_CASE("exact dimensions of web and prism_allied")
{
    CHECK(exact(web(5), ResolutionMode::vertex).dimension == 2);
    CHECK(exact(web(6), ResolutionMode::vertex).dimension == 3);
    CHECK(exact(prism_allied(6), ResolutionMode::vertex).dimension == 3);
    CHECK(exact(prism_allied(5), ResolutionMode::edge).dimension == 4);
    CHECK(exact(prism_allied(4), ResolutionMode::edge).dimension == 4);
    auto mixed = exact(prism_allied(4), ResolutionMode::mixed);
    CHECK(mixed.dimension == 5);
    CHECK(mixed.pruned);
}

TEST_CASE("exact dimension bases match the brute force oracle")
{
    // Frozen from tests/oracle/brute_force.py
    CHECK(exact(cycle(6), ResolutionMode::mixed).basis.ids() == Ids{ 0, 1, 3 });
    CHECK(exact(path(4), ResolutionMode::mixed).basis.ids() == Ids{ 0, 3 });
    CHECK(exact(star(3), ResolutionMode::mixed).basis.ids() == Ids{ 1, 2, 3 });
    CHECK(exact(prism_allied(4), ResolutionMode::vertex).basis.ids() == Ids{ 0, 1, 2 });
    CHECK(exact(prism_allied(4), ResolutionMode::edge).basis.ids() == Ids{ 0, 1, 8, 10 });
    CHECK(exact(prism_allied(4), ResolutionMode::mixed).basis.ids() == Ids{ 0, 12, 13, 14, 15 });
    CHECK(exact(web(4), ResolutionMode::mixed).basis.ids() == Ids{ 0, 8, 9, 10, 11 });
    CHECK(exact(web(5), ResolutionMode::vertex).basis.ids() == Ids{ 0, 2 });
    CHECK(exact(web(5), ResolutionMode::edge).basis.ids() == Ids{ 0, 1, 3 });

    std::pair<VertexId, VertexId> k4[] = { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } };
    auto k = build_graph(4, k4);
    CHECK(exact(k, ResolutionMode::vertex).dimension == 3);
}

TEST_CASE("pruning does not change the basis")
{
    SearchOptions off;
    off.use_forced_pruning = false;
    for (auto g : { star(4), path(6), prism_allied(4), web(4) }) {
        auto on = exact(g, ResolutionMode::mixed);
        auto plain = exact(g, ResolutionMode::mixed, off);
        CHECK(on.basis == plain.basis);
        CHECK_FALSE(plain.pruned);
        CHECK(on.stats.subsets <= plain.stats.subsets);
    }
}

TEST_CASE("enumerating every minimal basis")
{
    SearchOptions opts;
    opts.enumerate_all = true;
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = support::random_connected_graph(rng, 2, 8);
        for (auto mode : { ResolutionMode::vertex, ResolutionMode::edge, ResolutionMode::mixed }) {
            auto got = exact(g, mode, opts);
            auto want = support::brute_force_dimension(g, mode);
            std::vector<Ids> bases;
            for (auto& b : got.all_bases)
                bases.push_back(b.ids());
            CHECK(bases == want.all_bases);
        }
    }
}

TEST_CASE("budget")
{
    SearchOptions tight;
    tight.budget = 10;
    auto g = web(8);
    try {
        exact(g, ResolutionMode::vertex, tight);
        FAIL("expected the budget to run out");
    }
    catch (const BudgetExceeded& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
        CHECK(e.lower_bound >= 1);
        CHECK(e.upper_bound >= 3);
        CHECK(e.subsets <= 10);
    }
}

TEST_CASE("greedy upper bound")
{
    auto p = path(4);
    DistanceMatrix d(p);
    auto g = greedy_upper_bound(p, d, ResolutionMode::mixed);
    CHECK(g.size() >= 2);
    CHECK(is_generator(p, d, g, ResolutionMode::mixed));

    std::pair<VertexId, VertexId> k4[] = { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } };
    auto k = build_graph(4, k4);
    CHECK(greedy_upper_bound(k, DistanceMatrix(k), ResolutionMode::vertex).size() == 3);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto r = support::random_connected_graph(rng, 2, 10);
        DistanceMatrix dr(r);
        for (auto mode : { ResolutionMode::vertex, ResolutionMode::edge, ResolutionMode::mixed }) {
            auto set = greedy_upper_bound(r, dr, mode);
            CHECK(is_generator(r, dr, set, mode));
            CHECK(set.size() >= exact_dimension(r, dr, mode).dimension);
            CHECK(set == set.sorted());
        }
    }
}

TEST_CASE("family theorem verification")
{
    auto pa = verify_family_theorem(Family::prism_allied, 10);
    CHECK(pa.proven);
    CHECK(pa.basis.size() == 11);
    auto w = verify_family_theorem(Family::web, 41);
    CHECK(w.proven);
    CHECK(w.basis.size() == 42);
    CHECK(verify_family_theorem(Family::web, 4).basis.size() == 5);
    CHECK(w.basis_is_independent);
    CHECK(w.certificate.bound == 42);

    CHECK_THROWS_AS(verify_family_theorem(Family::web, 3), Error);
    CHECK_THROWS_AS(verify_family_theorem(Family::cycle, 6), Error);
}

TEST_CASE("superset of a generator is a generator")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = support::random_connected_graph(rng, 2, 10);
        DistanceMatrix d(g);
        auto mode = static_cast<ResolutionMode>(trial % 3);
        auto basis = greedy_upper_bound(g, d, mode);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (! basis.contains(v))
                CHECK(is_generator(g, d, basis.with(v), mode));
    }
}

TEST_CASE("a basis without one forced leaf fails")
{
    for (auto f : { Family::web, Family::prism_allied })
        for (int n = 4; n <= 8; ++n) {
            auto g = make_family(f, n);
            DistanceMatrix d(g);
            auto basis = pendants_plus_p1(g, f);
            for (auto leaf : g.class_members(pendant_class(f)))
                CHECK_FALSE(is_generator(g, d, basis.without(leaf), ResolutionMode::mixed));
        }
}
