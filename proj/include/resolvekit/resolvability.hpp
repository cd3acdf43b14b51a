#pragma once

#include "resolvekit/error.hpp"
#include "resolvekit/families.hpp"
#include "resolvekit/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace resolvekit {

/// Which elements a landmark set has to tell apart: V, E, or V u E.
enum class ResolutionMode { vertex, edge, mixed };

auto to_string(ResolutionMode mode) -> std::string_view;
auto parse_mode(std::string_view text) -> ResolutionMode;

/// Ordered list of distinct landmark vertices.
class LandmarkSet {
public:
    LandmarkSet() = default;
    /// Throws InvalidLandmarkSet on duplicates.
    explicit LandmarkSet(std::vector<VertexId> ids);

    auto ids() const noexcept -> const std::vector<VertexId>& { return _ids; }
    auto size() const noexcept -> std::size_t { return _ids.size(); }
    auto empty() const noexcept -> bool { return _ids.empty(); }
    auto contains(VertexId v) const -> bool;
    auto sorted() const -> LandmarkSet;
    auto with(VertexId v) const -> LandmarkSet;
    auto without(VertexId v) const -> LandmarkSet;

    /// Throws VertexOutOfRange if an id is not a vertex of g.
    auto validate(const Graph& g) const -> void;

    auto operator==(const LandmarkSet&) const -> bool = default;

private:
    std::vector<VertexId> _ids;
};

using MixedCode = std::vector<Distance>;
using ElementPair = std::pair<GraphElement, GraphElement>;

/// Elements of the mode's universe in canonical order: vertices by id, then
/// edges in sorted order.
auto element_universe(const Graph& g, ResolutionMode mode) -> std::vector<GraphElement>;

/// Distances from y to each landmark, in landmark order.
auto mixed_code(const DistanceMatrix& d, const GraphElement& y, const LandmarkSet& landmarks) -> MixedCode;

struct GeneratorCheck {
    bool resolves = false;
    /// Lexicographically first pair (by universe position) with equal codes.
    std::optional<ElementPair> witness;

    explicit operator bool() const noexcept { return resolves; }
};

/// Throws EmptyLandmarkSet for an empty set.
auto is_generator(const Graph& g, const DistanceMatrix& d, const LandmarkSet& landmarks, ResolutionMode mode)
        -> GeneratorCheck;

/// No two landmarks adjacent.
auto is_independent_set(const Graph& g, const LandmarkSet& landmarks) -> bool;

/// A degree-one vertex and its unique neighbour. The evidence is that
/// d(x, leaf) = d(x, support) + 1 for every other vertex x, so without the
/// leaf as a landmark the support and the pendant edge share a code.
struct LeafEvidence {
    VertexId leaf = 0;
    VertexId support = 0;
};

struct ForcedLandmarks {
    LandmarkSet leaves;
    std::vector<LeafEvidence> evidence;
};

/// Every leaf, with verified evidence. Throws EvidenceFailure if a distance
/// check fails, which can only mean the distance table is wrong.
auto forced_pendant_landmarks(const Graph& g, const DistanceMatrix& d) -> ForcedLandmarks;

struct LowerBoundCertificate {
    ForcedLandmarks forced;
    /// Two elements that the forced set alone cannot separate.
    std::optional<ElementPair> failure_witness;
    std::size_t bound = 1;
};

/// |forced| when the leaves already mixed-resolve g, |forced| + 1 with a
/// witness when they do not, and 1 for graphs without leaves.
auto lower_bound_certificate(const Graph& g, const DistanceMatrix& d) -> LowerBoundCertificate;

struct SearchOptions {
    static constexpr std::uint64_t default_budget = 50'000'000;

    bool use_forced_pruning = true;
    bool enumerate_all = false;
    std::uint64_t budget = default_budget;
};

struct SearchStats {
    std::uint64_t subsets = 0;
    double millis = 0.0;
};

struct DimensionResult {
    ResolutionMode mode = ResolutionMode::mixed;
    std::size_t dimension = 0;
    LandmarkSet basis;
    std::optional<LowerBoundCertificate> certificate;
    bool pruned = false;
    /// Every minimal basis, in lexicographic order; only with enumerate_all.
    std::vector<LandmarkSet> all_bases;
    SearchStats stats;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t lower, std::size_t upper, std::uint64_t subsets);

    std::size_t lower_bound;
    std::size_t upper_bound;
    std::uint64_t subsets;
};

/// Smallest generator by (cardinality, lexicographic order). In mixed mode
/// with pruning on, only supersets of the verified leaf set are tried.
/// Throws BudgetExceeded when more than opts.budget subsets would be checked.
auto exact_dimension(const Graph& g, const DistanceMatrix& d, ResolutionMode mode, const SearchOptions& opts = {})
        -> DimensionResult;

/// Repeatedly adds the vertex that leaves the fewest unseparated pairs,
/// smallest id on ties. Result is sorted and always a generator.
auto greedy_upper_bound(const Graph& g, const DistanceMatrix& d, ResolutionMode mode) -> LandmarkSet;

struct FamilyTheoremReport {
    Family family = Family::web;
    int n = 0;
    LowerBoundCertificate certificate;
    LandmarkSet basis;
    bool basis_is_generator = false;
    bool basis_is_independent = false;
    bool proven = false;
};

/// Polynomial-time proof that the mixed dimension of prism_allied(n) or
/// web(n) is n + 1: the leaf certificate gives the lower bound, and
/// {p_1} plus all pendants is an independent mixed generator.
/// Throws TheoremViolation if any step fails.
auto verify_family_theorem(Family family, int n) -> FamilyTheoremReport;

} // namespace resolvekit
