#pragma once

#include "resolvekit/families.hpp"
#include "resolvekit/resolvability.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace resolvekit {

/// Vertex classes and the edge classes of prism_allied and web. Edge kinds
/// are named by their endpoints: qr is q_i r_i, rq is r_i q_{i+1}.
enum class ElementKind { p, q, r, s, pp, pq, qq, qr, rq, rs };

auto to_string(ElementKind kind) -> std::string_view;
auto is_vertex_kind(ElementKind kind) -> bool;

struct TableElement {
    ElementKind kind = ElementKind::p;
    int index = 1;

    auto operator<=>(const TableElement&) const = default;
};

/// Class-index name, e.g. "p3", "p8p1", "r3q4".
auto label(const TableElement& e, int n) -> std::string;

/// Class of an element of a labelled prism_allied or web graph.
auto classify(const Graph& g, const GraphElement& el) -> TableElement;
auto element_of(const Graph& g, const TableElement& e) -> GraphElement;

/// The five-landmark set the code tables are written against:
/// {p_1, x_1, x_2, x_{aleph+1}, x_{aleph+2}} with x the pendant class.
struct ReferenceSet {
    Family family = Family::web;
    int n = 0;
    int aleph = 0;
    std::array<VertexLabel, 5> labels;
    LandmarkSet landmarks;
};

/// Throws NBelowTableRange for n < 6.
auto reference_set(Family family, int n) -> ReferenceSet;

using TableCode = std::array<int, 5>;

/// One printed row: an index range and five coordinate formulas in the
/// index L and the half-size A (n = 2A or n = 2A + 1).
struct TableRow {
    ElementKind kind;
    const char* first;
    const char* last;
    std::array<const char*, 5> coordinates;
};

auto table_rows(Family family, bool even) -> std::span<const TableRow>;

/// Evaluates an affine expression such as "2A-L+4".
auto evaluate_formula(std::string_view formula, int index, int aleph) -> int;

/// The matching row evaluated at (index, aleph). A single-index row beats a
/// range that also covers the index. Throws NBelowTableRange or UnknownRow.
auto closed_form_code(Family family, int n, const TableElement& element) -> TableCode;

struct CodeComparison {
    TableElement element;
    GraphElement graph_element;
    std::optional<TableCode> table;
    MixedCode oracle;

    auto matches() const -> bool;
};

/// Closed form against breadth-first codes for every element, in universe
/// order (vertices by id, then edges).
auto compare_codes(Family family, int n) -> std::vector<CodeComparison>;

struct CollisionPair {
    TableElement first;
    TableElement second;

    auto operator<=>(const CollisionPair&) const = default;
};

struct CensusReport {
    Family family = Family::web;
    int n = 0;
    int aleph = 0;
    /// Pairs with equal codes under the reference set, from the oracle.
    std::vector<CollisionPair> observed;
    /// Predicted pairs, closed under transitivity.
    std::vector<CollisionPair> predicted;
    std::vector<CollisionPair> unexpected;
    std::vector<CollisionPair> missing;
    /// Observed pairs not split by adding the pendant of any index that
    /// produced them.
    std::vector<CollisionPair> unseparated;
    /// Pairs left unresolved by {p_1} plus all pendants; should be empty.
    std::vector<CollisionPair> full_basis_collisions;

    auto matches() const -> bool;
};

auto collision_census(Family family, int n) -> CensusReport;

/// Throws CensusMismatch listing the differences.
auto require_census_match(const CensusReport& report) -> void;

struct CodeMismatch {
    TableElement element;
    std::optional<TableCode> table;
    MixedCode oracle;
};

struct ValidationReport {
    Family family = Family::web;
    int n = 0;
    int aleph = 0;
    bool even = true;
    std::size_t elements_checked = 0;
    std::vector<CodeMismatch> mismatches;
    CensusReport census;
};

/// Tables are claims under test here: mismatches are reported, never fixed.
auto validate_tables(Family family, int n) -> ValidationReport;

} // namespace resolvekit
