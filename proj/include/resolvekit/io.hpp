#pragma once

#include "resolvekit/graph.hpp"
#include "resolvekit/resolvability.hpp"
#include "resolvekit/tables.hpp"

#include "json.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace resolvekit {

using json = nlohmann::json;

/// "n m" header, then m lines "u v" with 0-based ids. Lines starting with
/// '#' and blank lines are skipped. Errors carry the offending line number.
auto parse_edge_list(std::istream& in, const std::string& source = "<input>") -> Graph;

/// Also loads "<path>.labels.json" when it exists.
auto parse_graph_file(const std::filesystem::path& path) -> Graph;

auto write_edge_list(std::ostream& out, const Graph& g) -> void;

auto label_sidecar_path(const std::filesystem::path& graph_path) -> std::filesystem::path;

/// {"p":[ids...],"q":[...],...}, ids listed by index.
auto labels_to_json(const Graph& g) -> json;
auto labels_from_json(const Graph& g, const json& j) -> Graph;

auto element_to_json(const GraphElement& el) -> json;
auto element_from_json(const json& j) -> GraphElement;

/// Vertex list for the command line: class labels (p1, s3) on labelled
/// graphs, raw ids otherwise. Comma separated.
auto parse_vertex_list(const Graph& g, const std::string& text) -> LandmarkSet;
auto landmark_labels(const Graph& g, const LandmarkSet& landmarks) -> std::vector<std::string>;

auto to_json(const Graph& g, const LowerBoundCertificate& cert) -> json;
auto to_json(const Graph& g, const DimensionResult& result) -> json;
auto dimension_result_from_json(const json& j) -> DimensionResult;

auto to_json(const Graph& g, const FamilyTheoremReport& report) -> json;
auto to_json(const CensusReport& report) -> json;
auto to_json(const ValidationReport& report) -> json;

/// Every report written by the tool is wrapped in one of these.
struct ReportEnvelope {
    std::string tool = "resolve-kit";
    std::string version = RESOLVEKIT_VERSION;
    std::string command;
    json input;
    json result;
    double duration_ms = 0.0;
    /// Reserved; nothing in the tool is randomised yet.
    json seed = nullptr;

    auto operator==(const ReportEnvelope&) const -> bool = default;
};

auto to_json(const ReportEnvelope& envelope) -> json;
auto envelope_from_json(const json& j) -> ReportEnvelope;

} // namespace resolvekit
