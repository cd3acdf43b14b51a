// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "resolvekit/driver.hpp"
#include "resolvekit/families.hpp"
#include "resolvekit/io.hpp"
#include "resolvekit/resolvability.hpp"
#include "resolvekit/tables.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace resolvekit;

namespace {

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure message; later checks still run.
struct Verdict {
    bool ok = true;
    std::string detail;

    auto expect(bool condition, const std::string& what) -> void
    {
        if (! condition && ok) {
            ok = false;
            detail = what;
        }
        else if (! condition)
            detail += "; " + what;
    }
};

auto name_of(Family f, int n) -> std::string { return std::string(to_string(f)) + "(" + std::to_string(n) + ")"; }

auto exact(const Graph& g, ResolutionMode mode, bool prune = true) -> DimensionResult
{
    SearchOptions opts;
    opts.use_forced_pruning = prune;
    return exact_dimension(g, DistanceMatrix(g), mode, opts);
}

auto criterion_1() -> Verdict
{
    Verdict v;
    double slowest = 0;
    auto check = [&](Family f, int n) {
        auto start = Clock::now();
        auto r = exact(make_family(f, n), ResolutionMode::mixed);
        auto t = seconds_since(start);
        slowest = std::max(slowest, t);
        v.expect(r.dimension == static_cast<std::size_t>(n + 1) && r.pruned,
                name_of(f, n) + " gave " + std::to_string(r.dimension));
        v.expect(t < 60.0, name_of(f, n) + " took " + std::to_string(t) + " s");
    };
    for (int n = 4; n <= 8; ++n)
        check(Family::web, n);
    for (int n = 4; n <= 7; ++n)
        check(Family::prism_allied, n);
    if (v.ok)
        v.detail = "web(4..8), prism_allied(4..7) = n+1; slowest " + std::to_string(slowest) + " s";
    return v;
}

auto criterion_2() -> Verdict
{
    Verdict v;
    std::string timing;
    for (auto f : { Family::web, Family::prism_allied }) {
        auto start = Clock::now();
        for (int n = 4; n <= 60; ++n) {
            try {
                auto r = verify_family_theorem(f, n);
                v.expect(r.proven && r.basis.size() == static_cast<std::size_t>(n + 1), name_of(f, n) + " not proven");
            }
            catch (const Error& e) {
                v.expect(false, name_of(f, n) + ": " + e.what());
            }
        }
        auto t = seconds_since(start);
        v.expect(t < 10.0, std::string(to_string(f)) + " took " + std::to_string(t) + " s");
        timing += std::string(timing.empty() ? "" : ", ") + std::string(to_string(f)) + " " + std::to_string(t) + " s";
    }
    if (v.ok)
        v.detail = "n = 4..60 proven for both families (" + timing + ")";
    return v;
}

auto expect_dimension(Verdict& v, Family f, int n, ResolutionMode mode, std::size_t want) -> void
{
    auto got = exact(make_family(f, n), mode).dimension;
    v.expect(got == want, name_of(f, n) + " " + std::string(to_string(mode)) + " = " + std::to_string(got)
                    + ", expected " + std::to_string(want));
}

auto criterion_3() -> Verdict
{
    Verdict v;
    for (int n : { 3, 5, 7, 9 })
        expect_dimension(v, Family::web, n, ResolutionMode::vertex, 2);
    for (int n : { 4, 6, 8 })
        expect_dimension(v, Family::web, n, ResolutionMode::vertex, 3);
    for (int n = 6; n <= 9; ++n)
        expect_dimension(v, Family::prism_allied, n, ResolutionMode::vertex, 3);
    if (v.ok)
        v.detail = "web odd -> 2, web even -> 3, prism_allied(6..9) -> 3";
    return v;
}

auto criterion_4() -> Verdict
{
    Verdict v;
    for (int n = 3; n <= 8; ++n)
        expect_dimension(v, Family::web, n, ResolutionMode::edge, 3);
    for (int n : { 3, 4 })
        expect_dimension(v, Family::prism_allied, n, ResolutionMode::edge, 4);
    for (int n = 5; n <= 8; ++n)
        expect_dimension(v, Family::prism_allied, n, ResolutionMode::edge, static_cast<std::size_t>((n + 1) / 2 + 1));
    if (v.ok)
        v.detail = "web(3..8) -> 3, prism_allied(3,4) -> 4, prism_allied(5..8) -> ceil(n/2)+1";
    return v;
}

auto criterion_5() -> Verdict
{
    Verdict v;
    std::mt19937 rng(20240601);
    int with_leaves = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto g = support::random_connected_graph(rng, 2, 10, trial % 2 ? 0.15 : 0.4);
        if (! forced_pendant_landmarks(g, DistanceMatrix(g)).leaves.empty())
            ++with_leaves;
        for (auto mode : { ResolutionMode::vertex, ResolutionMode::edge, ResolutionMode::mixed }) {
            auto pruned = exact(g, mode, true);
            auto plain = exact(g, mode, false);
            auto brute = support::brute_force_dimension(g, mode);
            v.expect(pruned.dimension == brute.dimension && plain.dimension == brute.dimension
                            && pruned.basis.ids() == brute.basis && plain.basis.ids() == brute.basis,
                    "graph " + std::to_string(trial) + " " + std::string(to_string(mode)) + ": pruned "
                            + std::to_string(pruned.dimension) + ", unpruned " + std::to_string(plain.dimension)
                            + ", brute force " + std::to_string(brute.dimension));
        }
    }
    if (v.ok)
        v.detail = "200 graphs x 3 modes, dimension and basis agree (" + std::to_string(with_leaves) + " with leaves)";
    return v;
}

auto criterion_6() -> Verdict
{
    Verdict v;
    std::size_t mismatches = 0;
    for (auto f : { Family::web, Family::prism_allied })
        for (int n = 6; n <= 11; ++n) {
            auto first = to_json(validate_tables(f, n)).dump();
            auto report = validate_tables(f, n);
            v.expect(to_json(report).dump() == first, name_of(f, n) + " report differs between runs");
            v.expect(report.census.unexpected.empty() && report.census.missing.empty(),
                    name_of(f, n) + " census differs from the predicted pattern");
            v.expect(report.census.unseparated.empty(), name_of(f, n) + " has an unseparated colliding pair");
            v.expect(report.census.full_basis_collisions.empty(), name_of(f, n) + " full basis leaves a collision");
            mismatches += report.mismatches.size();
        }
    if (v.ok)
        v.detail = "census and separation hold for n = 6..11; " + std::to_string(mismatches)
                + " closed-form mismatches reported";
    return v;
}

auto criterion_7() -> Verdict
{
    Verdict v;
    std::mt19937 rng(7);

    // Supersets of generators stay generators.
    for (int trial = 0; trial < 500; ++trial) {
        auto g = support::random_connected_graph(rng, 2, 10);
        DistanceMatrix d(g);
        auto mode = static_cast<ResolutionMode>(trial % 3);
        auto basis = greedy_upper_bound(g, d, mode);
        auto extra = std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(g.vertex_count() - 1))(rng);
        if (! basis.contains(extra))
            v.expect(is_generator(g, d, basis.with(extra), mode).resolves, "monotonicity case " + std::to_string(trial));
    }

    // mixed >= max(vertex, edge)
    for (auto f : { Family::web, Family::prism_allied, Family::prism, Family::cycle, Family::path, Family::star })
        for (int n = 3; n <= 8; ++n) {
            auto g = make_family(f, n);
            auto vd = exact(g, ResolutionMode::vertex).dimension;
            auto ed = exact(g, ResolutionMode::edge).dimension;
            auto md = exact(g, ResolutionMode::mixed).dimension;
            v.expect(md >= std::max(vd, ed), name_of(f, n) + " mixed below vertex or edge");
        }

    // |d(x,u) - d(x,v)| <= 1 across every edge
    std::vector<Graph> graphs;
    for (auto f : { Family::web, Family::prism_allied, Family::prism, Family::cycle, Family::path, Family::star })
        for (int n = 3; n <= 10; ++n)
            graphs.push_back(make_family(f, n));
    for (int i = 0; i < 50; ++i)
        graphs.push_back(support::random_connected_graph(rng, 1, 10));
    for (auto& g : graphs) {
        DistanceMatrix d(g);
        for (VertexId x = 0; x < g.vertex_count(); ++x)
            for (auto& e : g.edges())
                v.expect(std::max(d(x, e.u), d(x, e.v)) - std::min(d(x, e.u), d(x, e.v)) <= 1, "edge distance gap");
    }

    // A landmark's own code entry is zero.
    for (auto f : { Family::web, Family::prism_allied })
        for (int n = 6; n <= 11; ++n) {
            auto g = make_family(f, n);
            DistanceMatrix d(g);
            auto ref = reference_set(f, n);
            for (std::size_t i = 0; i < ref.landmarks.size(); ++i)
                v.expect(mixed_code(d, ref.landmarks.ids()[i], ref.landmarks)[i] == 0, name_of(f, n) + " self code");
        }

    // Dropping a forced leaf breaks every mixed generator that had it.
    for (auto f : { Family::web, Family::prism_allied })
        for (int n = 4; n <= 10; ++n) {
            auto g = make_family(f, n);
            DistanceMatrix d(g);
            auto basis = verify_family_theorem(f, n).basis;
            for (auto leaf : g.class_members(pendant_class(f)))
                v.expect(! is_generator(g, d, basis.without(leaf), ResolutionMode::mixed),
                        name_of(f, n) + " still resolves without a leaf");
        }
    for (int trial = 0; trial < 100; ++trial) {
        auto g = support::random_connected_graph(rng, 2, 10, 0.1);
        DistanceMatrix d(g);
        auto forced = forced_pendant_landmarks(g, d).leaves;
        auto basis = exact(g, ResolutionMode::mixed, false).basis;
        for (auto leaf : forced.ids())
            v.expect(basis.contains(leaf), "unpruned basis misses a leaf in case " + std::to_string(trial));
    }
    if (v.ok)
        v.detail = "monotonicity (500), mixed >= max, edge distance gap, self-code zeros, forced leaves";
    return v;
}

auto criterion_8() -> Verdict
{
    Verdict v;
    struct Expected {
        Family family;
        int n;
        std::size_t vertex, edge, mixed;
        bool strict;
    };
    const Expected cases[] = {
        { Family::web, 5, 2, 3, 6, true },
        { Family::web, 7, 2, 3, 8, true },
        { Family::prism_allied, 6, 3, 4, 7, true },
        { Family::prism_allied, 7, 3, 5, 8, true },
        { Family::web, 6, 3, 3, 7, false },
    };
    std::string flagged;
    for (auto& c : cases) {
        auto r = chain_check(c.family, c.n);
        auto triple = std::to_string(r.vertex) + "," + std::to_string(r.edge) + "," + std::to_string(r.mixed);
        v.expect(r.vertex == c.vertex && r.edge == c.edge && r.mixed == c.mixed && r.strict == c.strict,
                name_of(c.family, c.n) + " gave " + triple + (r.strict ? " strict" : " not strict"));
        if (! r.strict)
            flagged += name_of(c.family, c.n) + " = " + triple;
    }
    if (v.ok)
        v.detail = "four strict chains; flagged not strict: " + flagged;
    return v;
}

}

int main()
{
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        { "exact mixed dimension n+1 with pruning", criterion_1 },
        { "family theorem verified for n = 4..60", criterion_2 },
        { "vertex dimension", criterion_3 },
        { "edge dimension", criterion_4 },
        { "pruned, unpruned and brute force agree", criterion_5 },
        { "table validation and collision census", criterion_6 },
        { "property suites", criterion_7 },
        { "dimension chains", criterion_8 },
    };
    int failed = 0;
    int number = 0;
    for (auto& [title, run] : criteria) {
        ++number;
        auto start = Clock::now();
        Verdict v;
        try {
            v = run();
        }
        catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d: %s - %s: %s (%.2f s)\n", number, v.ok ? "PASS" : "FAIL", title, v.detail.c_str(),
                seconds_since(start));
        std::fflush(stdout);
        failed += v.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
