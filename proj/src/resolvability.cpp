#include "resolvekit/resolvability.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace resolvekit {

namespace {
    /// distance from every vertex to every element of a universe, row per vertex
    class ElementDistances {
    public:
        ElementDistances(const DistanceMatrix& d, const std::vector<GraphElement>& universe) :
            _elements(universe.size()),
            _data(d.size() * universe.size())
        {
            for (VertexId x = 0; x < d.size(); ++x)
                for (std::size_t e = 0; e < universe.size(); ++e)
                    _data[x * _elements + e] = element_distance(d, x, universe[e]);
        }

        auto elements() const noexcept -> std::size_t { return _elements; }
        auto row(VertexId x) const -> std::span<const Distance> { return { _data.data() + x * _elements, _elements }; }

    private:
        std::size_t _elements;
        std::vector<Distance> _data;
    };

    /// Splits every class of a partition by distance to one more landmark.
    /// Class ids are dense and assigned in order of first appearance.
    class Refiner {
    public:
        Refiner(std::size_t elements, Distance diameter) :
            _width(static_cast<std::size_t>(diameter) + 1),
            _table(std::max<std::size_t>(elements, 1) * _width, -1)
        {
        }

        auto refine(std::span<const std::uint32_t> in, std::span<const Distance> dist, std::span<std::uint32_t> out)
                -> std::uint32_t
        {
            std::uint32_t count = 0;
            _touched.clear();
            for (std::size_t e = 0; e < in.size(); ++e) {
                auto key = in[e] * _width + dist[e];
                if (_table[key] < 0) {
                    _table[key] = static_cast<std::int32_t>(count++);
                    _touched.push_back(key);
                }
                out[e] = static_cast<std::uint32_t>(_table[key]);
            }
            for (auto key : _touched)
                _table[key] = -1;
            return count;
        }

        auto width() const noexcept -> std::size_t { return _width; }

    private:
        std::size_t _width;
        std::vector<std::int32_t> _table;
        std::vector<std::size_t> _touched;
    };

    auto unseparated_pairs(std::span<const std::uint32_t> classes, std::uint32_t count) -> std::uint64_t
    {
        std::vector<std::uint64_t> sizes(count, 0);
        for (auto c : classes)
            ++sizes[c];
        std::uint64_t pairs = 0;
        for (auto s : sizes)
            pairs += s * (s - 1) / 2;
        return pairs;
    }

    struct BudgetHit {};

    struct Partition {
        std::vector<std::uint32_t> classes;
        std::uint32_t count = 1;
    };

    auto partition_by(Refiner& refiner, const ElementDistances& table, const std::vector<VertexId>& landmarks) -> Partition
    {
        Partition part{ std::vector<std::uint32_t>(table.elements(), 0), table.elements() == 0 ? 0u : 1u };
        std::vector<std::uint32_t> next(table.elements());
        for (auto x : landmarks) {
            part.count = refiner.refine(part.classes, table.row(x), next);
            part.classes.swap(next);
        }
        return part;
    }

    /// Lexicographic walk over k-subsets of candidates, refining the base
    /// partition one landmark at a time.
    class SubsetSearch {
    public:
        SubsetSearch(const ElementDistances& table, Refiner& refiner, std::vector<VertexId> candidates,
                const Partition& base, const SearchOptions& opts, std::uint64_t& subsets) :
            _table(table),
            _refiner(refiner),
            _candidates(std::move(candidates)),
            _base(base),
            _opts(opts),
            _subsets(subsets)
        {
        }

        /// All successful subsets of size k (just the first unless enumerate_all).
        auto run(std::size_t k) -> std::vector<std::vector<VertexId>>
        {
            _k = k;
            _found.clear();
            _chosen.assign(k, 0);
            _levels.assign(k + 1, std::vector<std::uint32_t>(_table.elements()));
            _counts.assign(k + 1, 0);
            _levels[0] = _base.classes;
            _counts[0] = _base.count;
            if (k > _candidates.size())
                return {};
            if (k == 0) {
                count_subset();
                if (resolved(0))
                    _found.emplace_back();
                return _found;
            }
            descend(0, 0);
            return _found;
        }

    private:
        auto resolved(std::size_t depth) const -> bool { return _counts[depth] == _table.elements(); }

        auto count_subset() -> void
        {
            if (_subsets == _opts.budget)
                throw BudgetHit{};
            ++_subsets;
        }

        // Largest number of classes reachable with `remaining` more landmarks,
        // saturating at the element count.
        auto reachable(std::uint64_t classes, std::size_t remaining) const -> std::uint64_t
        {
            auto limit = static_cast<std::uint64_t>(_table.elements());
            for (std::size_t i = 0; i < remaining && classes < limit; ++i)
                classes *= _refiner.width();
            return classes;
        }

        auto descend(std::size_t depth, std::size_t start) -> bool
        {
            auto last = depth + 1 == _k;
            for (std::size_t i = start; i + (_k - depth) <= _candidates.size(); ++i) {
                if (last)
                    count_subset();
                _counts[depth + 1] = _refiner.refine(_levels[depth], _table.row(_candidates[i]), _levels[depth + 1]);
                _chosen[depth] = _candidates[i];
                if (last) {
                    if (resolved(depth + 1)) {
                        _found.push_back(_chosen);
                        if (! _opts.enumerate_all)
                            return true;
                    }
                    continue;
                }
                if (reachable(_counts[depth + 1], _k - depth - 1) < _table.elements())
                    continue;
                if (descend(depth + 1, i + 1) && ! _opts.enumerate_all)
                    return true;
            }
            return false;
        }

        const ElementDistances& _table;
        Refiner& _refiner;
        std::vector<VertexId> _candidates;
        const Partition& _base;
        const SearchOptions& _opts;
        std::uint64_t& _subsets;

        std::size_t _k = 0;
        std::vector<VertexId> _chosen;
        std::vector<std::vector<std::uint32_t>> _levels;
        std::vector<std::uint32_t> _counts;
        std::vector<std::vector<VertexId>> _found;
    };
}

auto to_string(ResolutionMode mode) -> std::string_view
{
    switch (mode) {
    case ResolutionMode::vertex: return "vertex";
    case ResolutionMode::edge: return "edge";
    case ResolutionMode::mixed: return "mixed";
    }
    return "unknown";
}

auto parse_mode(std::string_view text) -> ResolutionMode
{
    for (auto m : { ResolutionMode::vertex, ResolutionMode::edge, ResolutionMode::mixed })
        if (text == to_string(m))
            return m;
    throw Error(ErrorKind::Usage, "unknown mode '" + std::string(text) + "'");
}

LandmarkSet::LandmarkSet(std::vector<VertexId> ids) :
    _ids(std::move(ids))
{
    std::set<VertexId> seen;
    for (auto v : _ids)
        if (! seen.insert(v).second)
            throw Error(ErrorKind::InvalidLandmarkSet, "landmark " + std::to_string(v) + " listed twice");
}

auto LandmarkSet::contains(VertexId v) const -> bool
{
    return std::find(_ids.begin(), _ids.end(), v) != _ids.end();
}

auto LandmarkSet::sorted() const -> LandmarkSet
{
    auto ids = _ids;
    std::sort(ids.begin(), ids.end());
    return LandmarkSet{ std::move(ids) };
}

auto LandmarkSet::with(VertexId v) const -> LandmarkSet
{
    auto ids = _ids;
    ids.push_back(v);
    return LandmarkSet{ std::move(ids) };
}

auto LandmarkSet::without(VertexId v) const -> LandmarkSet
{
    auto ids = _ids;
    std::erase(ids, v);
    return LandmarkSet{ std::move(ids) };
}

auto LandmarkSet::validate(const Graph& g) const -> void
{
    for (auto v : _ids)
        if (v >= g.vertex_count())
            throw Error(ErrorKind::VertexOutOfRange, "landmark " + std::to_string(v) + " is not a vertex of the graph");
}

auto element_universe(const Graph& g, ResolutionMode mode) -> std::vector<GraphElement>
{
    std::vector<GraphElement> result;
    if (mode != ResolutionMode::edge)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            result.emplace_back(v);
    if (mode != ResolutionMode::vertex)
        for (auto& e : g.edges())
            result.emplace_back(e);
    return result;
}

auto mixed_code(const DistanceMatrix& d, const GraphElement& y, const LandmarkSet& landmarks) -> MixedCode
{
    MixedCode code;
    code.reserve(landmarks.size());
    for (auto x : landmarks.ids())
        code.push_back(element_distance(d, x, y));
    return code;
}

auto is_generator(const Graph& g, const DistanceMatrix& d, const LandmarkSet& landmarks, ResolutionMode mode)
        -> GeneratorCheck
{
    if (landmarks.empty())
        throw Error(ErrorKind::EmptyLandmarkSet, "landmark set is empty");
    landmarks.validate(g);

    auto universe = element_universe(g, mode);
    auto k = landmarks.size();
    std::vector<Distance> codes(universe.size() * k);
    for (std::size_t e = 0; e < universe.size(); ++e)
        for (std::size_t i = 0; i < k; ++i)
            codes[e * k + i] = element_distance(d, landmarks.ids()[i], universe[e]);

    auto code_of = [&] (std::size_t e) { return std::span<const Distance>(codes.data() + e * k, k); };
    auto code_less = [&] (std::size_t a, std::size_t b) {
        auto ca = code_of(a), cb = code_of(b);
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    };

    std::vector<std::size_t> order(universe.size());
    std::iota(order.begin(), order.end(), 0);
    // stable: within a block of equal codes, indices stay ascending
    std::stable_sort(order.begin(), order.end(), code_less);

    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        auto a = order[i], b = order[i + 1];
        if (code_less(a, b))
            continue;
        // a is the smallest index of its block only if the previous entry differs
        if (i > 0 && ! code_less(order[i - 1], a))
            continue;
        if (! first || a < first->first)
            first = { a, b };
    }

    GeneratorCheck result;
    result.resolves = ! first.has_value();
    if (first)
        result.witness = ElementPair{ universe[first->first], universe[first->second] };
    return result;
}

auto is_independent_set(const Graph& g, const LandmarkSet& landmarks) -> bool
{
    auto& ids = landmarks.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.has_edge(ids[i], ids[j]))
                return false;
    return true;
}

auto forced_pendant_landmarks(const Graph& g, const DistanceMatrix& d) -> ForcedLandmarks
{
    ForcedLandmarks result;
    std::vector<VertexId> leaves;
    for (VertexId leaf = 0; leaf < g.vertex_count(); ++leaf) {
        if (g.degree(leaf) != 1)
            continue;
        auto support = g.neighbours(leaf).front();
        for (VertexId x = 0; x < g.vertex_count(); ++x)
            if (x != leaf && d(x, leaf) != d(x, support) + 1)
                throw Error(ErrorKind::EvidenceFailure, "leaf " + std::to_string(leaf) + " with support "
                        + std::to_string(support) + " fails d(x, leaf) = d(x, support) + 1 at x = " + std::to_string(x));
        leaves.push_back(leaf);
        result.evidence.push_back({ leaf, support });
    }
    result.leaves = LandmarkSet{ std::move(leaves) };
    return result;
}

auto lower_bound_certificate(const Graph& g, const DistanceMatrix& d) -> LowerBoundCertificate
{
    LowerBoundCertificate cert;
    cert.forced = forced_pendant_landmarks(g, d);
    if (cert.forced.leaves.empty()) {
        cert.bound = 1;
        return cert;
    }
    auto check = is_generator(g, d, cert.forced.leaves, ResolutionMode::mixed);
    cert.bound = cert.forced.leaves.size() + (check.resolves ? 0 : 1);
    cert.failure_witness = check.witness;
    return cert;
}

BudgetExceeded::BudgetExceeded(std::size_t lower, std::size_t upper, std::uint64_t subsets) :
    Error(ErrorKind::BudgetExceeded, "search budget exhausted after " + std::to_string(subsets)
            + " subsets; dimension is between " + std::to_string(lower) + " and " + std::to_string(upper)),
    lower_bound(lower),
    upper_bound(upper),
    subsets(subsets)
{
}

auto exact_dimension(const Graph& g, const DistanceMatrix& d, ResolutionMode mode, const SearchOptions& opts)
        -> DimensionResult
{
    auto started = std::chrono::steady_clock::now();

    DimensionResult result;
    result.mode = mode;

    std::vector<VertexId> forced;
    std::size_t start_k = 1;
    if (mode == ResolutionMode::mixed) {
        try {
            result.certificate = lower_bound_certificate(g, d);
        }
        catch (const Error& e) {
            if (e.kind() != ErrorKind::EvidenceFailure)
                throw;
            // evidence did not hold, so neither the bound nor pruning is trusted
        }
        if (opts.use_forced_pruning && result.certificate) {
            result.pruned = true;
            forced = result.certificate->forced.leaves.ids();
            start_k = result.certificate->bound;
        }
    }

    auto universe = element_universe(g, mode);
    ElementDistances table(d, universe);
    Refiner refiner(universe.size(), d.diameter());
    auto base = partition_by(refiner, table, forced);

    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (std::find(forced.begin(), forced.end(), v) == forced.end())
            candidates.push_back(v);

    std::uint64_t subsets = 0;
    SubsetSearch search(table, refiner, candidates, base, opts, subsets);

    for (auto k = std::max<std::size_t>(start_k, 1); k <= g.vertex_count(); ++k) {
        std::vector<std::vector<VertexId>> found;
        try {
            found = search.run(k - forced.size());
        }
        catch (const BudgetHit&) {
            throw BudgetExceeded(k, greedy_upper_bound(g, d, mode).size(), subsets);
        }
        if (found.empty())
            continue;

        for (auto& extra : found) {
            extra.insert(extra.end(), forced.begin(), forced.end());
            std::sort(extra.begin(), extra.end());
            result.all_bases.emplace_back(std::move(extra));
        }
        result.dimension = k;
        result.basis = result.all_bases.front();
        if (! opts.enumerate_all)
            result.all_bases.clear();
        break;
    }

    result.stats.subsets = subsets;
    result.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return result;
}

auto greedy_upper_bound(const Graph& g, const DistanceMatrix& d, ResolutionMode mode) -> LandmarkSet
{
    auto universe = element_universe(g, mode);
    ElementDistances table(d, universe);
    Refiner refiner(universe.size(), d.diameter());

    Partition part{ std::vector<std::uint32_t>(universe.size(), 0), universe.empty() ? 0u : 1u };
    std::vector<std::uint32_t> trial(universe.size()), best(universe.size());
    std::vector<VertexId> chosen;
    auto remaining = unseparated_pairs(part.classes, part.count);

    while (remaining > 0 || chosen.empty()) {
        std::optional<VertexId> pick;
        std::uint64_t pick_remaining = 0;
        std::uint32_t pick_count = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (std::find(chosen.begin(), chosen.end(), v) != chosen.end())
                continue;
            auto count = refiner.refine(part.classes, table.row(v), trial);
            auto left = unseparated_pairs(trial, count);
            if (! pick || left < pick_remaining) {
                pick = v;
                pick_remaining = left;
                pick_count = count;
                best.swap(trial);
            }
        }
        chosen.push_back(*pick);
        part.classes.swap(best);
        part.count = pick_count;
        remaining = pick_remaining;
    }

    std::sort(chosen.begin(), chosen.end());
    return LandmarkSet{ std::move(chosen) };
}

auto verify_family_theorem(Family family, int n) -> FamilyTheoremReport
{
    if (family != Family::prism_allied && family != Family::web)
        throw Error(ErrorKind::Usage, "theorem verification covers prism_allied and web only");
    if (n < 4)
        throw Error(ErrorKind::InvalidN, "theorem verification needs n >= 4, got " + std::to_string(n));

    auto g = make_family(family, n);
    DistanceMatrix d(g);
    auto violation = [&] (const std::string& what) {
        return Error(ErrorKind::TheoremViolation,
                std::string(to_string(family)) + "(" + std::to_string(n) + "): " + what);
    };

    FamilyTheoremReport report;
    report.family = family;
    report.n = n;
    report.certificate = lower_bound_certificate(g, d);

    auto pendants = g.class_members(pendant_class(family));
    if (report.certificate.forced.leaves.ids() != pendants)
        throw violation("forced leaves are not exactly the pendant class");
    if (report.certificate.bound != static_cast<std::size_t>(n) + 1 || ! report.certificate.failure_witness)
        throw violation("lower bound is " + std::to_string(report.certificate.bound) + ", expected n + 1");

    std::vector<VertexId> basis{ g.id_of({ VertexClass::p, 1 }) };
    basis.insert(basis.end(), pendants.begin(), pendants.end());
    report.basis = LandmarkSet{ std::move(basis) };

    auto check = is_generator(g, d, report.basis, ResolutionMode::mixed);
    report.basis_is_generator = check.resolves;
    if (! check.resolves)
        throw violation("{p1} plus pendants is not a mixed generator: " + element_to_string(g, check.witness->first)
                + " and " + element_to_string(g, check.witness->second) + " share a code");

    report.basis_is_independent = is_independent_set(g, report.basis);
    if (! report.basis_is_independent)
        throw violation("{p1} plus pendants is not independent");

    report.proven = true;
    return report;
}

} // namespace resolvekit
