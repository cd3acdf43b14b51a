#include "resolvekit/io.hpp"
#include "resolvekit/error.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace resolvekit {

namespace {
    auto parse_error(const std::string& source, std::size_t line, const std::string& what) -> Error
    {
        return Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + what);
    }

    auto read_numbers(std::string_view text) -> std::optional<std::vector<long long>>
    {
        std::vector<long long> numbers;
        std::size_t pos = 0;
        while (true) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == text.size())
                return numbers;
            long long value = 0;
            auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc{} || (end != text.data() + text.size() && ! std::isspace(static_cast<unsigned char>(*end))))
                return std::nullopt;
            numbers.push_back(value);
            pos = static_cast<std::size_t>(end - text.data());
        }
    }

    auto class_key(VertexClass cls) -> std::string { return std::string(1, static_cast<char>(cls)); }
}

auto parse_edge_list(std::istream& in, const std::string& source) -> Graph
{
    std::optional<std::pair<long long, long long>> header;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<Edge> seen;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto numbers = read_numbers(std::string_view(line).substr(first));
        if (! numbers || numbers->size() != 2)
            throw parse_error(source, line_no, "expected two integers, got '" + line + "'");
        auto [a, b] = std::pair{ (*numbers)[0], (*numbers)[1] };

        if (! header) {
            if (a < 1 || b < 0)
                throw parse_error(source, line_no, "header needs n >= 1 and m >= 0");
            header = { a, b };
            continue;
        }
        auto where = source + ":" + std::to_string(line_no) + ": ";
        if (a < 0 || b < 0 || a >= header->first || b >= header->first)
            throw Error(ErrorKind::VertexOutOfRange, where + "vertex outside 0.." + std::to_string(header->first - 1));
        if (a == b)
            throw Error(ErrorKind::SelfLoop, where + "self-loop at vertex " + std::to_string(a));
        if (! seen.emplace(static_cast<VertexId>(a), static_cast<VertexId>(b)).second)
            throw Error(ErrorKind::DuplicateEdge, where + "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }

    if (! header)
        throw parse_error(source, line_no, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != header->second)
        throw parse_error(source, line_no, "header promises " + std::to_string(header->second) + " edges, found "
                + std::to_string(edges.size()));
    return build_graph(static_cast<std::size_t>(header->first), edges);
}

auto label_sidecar_path(const std::filesystem::path& graph_path) -> std::filesystem::path
{
    auto p = graph_path;
    p += ".labels.json";
    return p;
}

auto parse_graph_file(const std::filesystem::path& path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    auto g = parse_edge_list(in, path.string());

    auto sidecar = label_sidecar_path(path);
    if (std::filesystem::exists(sidecar)) {
        std::ifstream labels(sidecar);
        json j;
        try {
            j = json::parse(labels);
        }
        catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, sidecar.string() + ": " + e.what());
        }
        g = labels_from_json(g, j);
    }
    return g;
}

auto write_edge_list(std::ostream& out, const Graph& g) -> void
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

auto labels_to_json(const Graph& g) -> json
{
    auto j = json::object();
    for (auto cls : { VertexClass::p, VertexClass::q, VertexClass::r, VertexClass::s }) {
        auto members = g.class_members(cls);
        if (! members.empty())
            j[class_key(cls)] = members;
    }
    return j;
}

auto labels_from_json(const Graph& g, const json& j) -> Graph
{
    std::vector<std::optional<VertexLabel>> labels(g.vertex_count());
    try {
        for (auto& [key, ids] : j.items()) {
            auto parsed = parse_label(key + "1");
            if (key.size() != 1 || ! parsed)
                throw Error(ErrorKind::ParseError, "unknown label class '" + key + "'");
            int index = 1;
            for (auto& id : ids) {
                auto v = id.get<VertexId>();
                if (v >= labels.size())
                    throw Error(ErrorKind::VertexOutOfRange, "labelled vertex " + std::to_string(v) + " out of range");
                labels[v] = VertexLabel{ parsed->cls, index++ };
            }
        }
    }
    catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("label sidecar: ") + e.what());
    }
    std::vector<VertexLabel> complete;
    for (VertexId v = 0; v < labels.size(); ++v) {
        if (! labels[v])
            throw Error(ErrorKind::UnknownLabel, "label sidecar leaves vertex " + std::to_string(v) + " unlabelled");
        complete.push_back(*labels[v]);
    }
    return g.with_labels(std::move(complete));
}

auto element_to_json(const GraphElement& el) -> json
{
    if (auto v = std::get_if<VertexId>(&el))
        return *v;
    auto& e = std::get<Edge>(el);
    return json::array({ e.u, e.v });
}

auto element_from_json(const json& j) -> GraphElement
{
    if (j.is_array())
        return Edge{ j.at(0).get<VertexId>(), j.at(1).get<VertexId>() };
    return j.get<VertexId>();
}

auto parse_vertex_list(const Graph& g, const std::string& text) -> LandmarkSet
{
    std::vector<VertexId> ids;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(' ');
        auto last = token.find_last_not_of(' ');
        if (first == std::string::npos)
            continue;
        token = token.substr(first, last - first + 1);
        if (auto label = parse_label(token); label && g.has_labels()) {
            ids.push_back(g.id_of(*label));
            continue;
        }
        VertexId v = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw Error(g.has_labels() ? ErrorKind::UnknownLabel : ErrorKind::Usage,
                    "cannot read vertex '" + token + "'");
        ids.push_back(v);
    }
    if (ids.empty())
        throw Error(ErrorKind::EmptyLandmarkSet, "vertex list is empty");
    LandmarkSet set{ std::move(ids) };
    set.validate(g);
    return set;
}

auto landmark_labels(const Graph& g, const LandmarkSet& landmarks) -> std::vector<std::string>
{
    std::vector<std::string> names;
    for (auto v : landmarks.ids())
        names.push_back(element_to_string(g, v));
    return names;
}

auto to_json(const Graph& g, const LowerBoundCertificate& cert) -> json
{
    json j;
    j["forced"] = cert.forced.leaves.ids();
    j["forced_labels"] = landmark_labels(g, cert.forced.leaves);
    j["bound"] = cert.bound;
    auto evidence = json::array();
    for (auto& ev : cert.forced.evidence)
        evidence.push_back({ { "leaf", ev.leaf }, { "support", ev.support } });
    j["evidence"] = evidence;
    if (cert.failure_witness) {
        j["witness"] = json::array({ element_to_json(cert.failure_witness->first), element_to_json(cert.failure_witness->second) });
        j["witness_labels"] = json::array({ element_to_string(g, cert.failure_witness->first),
            element_to_string(g, cert.failure_witness->second) });
    }
    else
        j["witness"] = nullptr;
    return j;
}

auto to_json(const Graph& g, const DimensionResult& result) -> json
{
    json j;
    j["mode"] = to_string(result.mode);
    j["dimension"] = result.dimension;
    j["basis"] = result.basis.ids();
    j["basis_labels"] = landmark_labels(g, result.basis);
    j["certificate"] = result.certificate ? to_json(g, *result.certificate) : json(nullptr);
    j["pruned"] = result.pruned;
    if (! result.all_bases.empty()) {
        auto all = json::array();
        for (auto& b : result.all_bases)
            all.push_back(b.ids());
        j["all_bases"] = all;
    }
    j["stats"] = { { "subsets", result.stats.subsets }, { "millis", result.stats.millis } };
    return j;
}

auto dimension_result_from_json(const json& j) -> DimensionResult
{
    DimensionResult result;
    try {
        result.mode = parse_mode(j.at("mode").get<std::string>());
        result.dimension = j.at("dimension").get<std::size_t>();
        result.basis = LandmarkSet{ j.at("basis").get<std::vector<VertexId>>() };
        result.pruned = j.value("pruned", false);
        if (auto& c = j.at("certificate"); ! c.is_null()) {
            LowerBoundCertificate cert;
            cert.forced.leaves = LandmarkSet{ c.at("forced").get<std::vector<VertexId>>() };
            for (auto& ev : c.at("evidence"))
                cert.forced.evidence.push_back({ ev.at("leaf").get<VertexId>(), ev.at("support").get<VertexId>() });
            cert.bound = c.at("bound").get<std::size_t>();
            if (auto& w = c.at("witness"); ! w.is_null())
                cert.failure_witness = ElementPair{ element_from_json(w.at(0)), element_from_json(w.at(1)) };
            result.certificate = std::move(cert);
        }
        if (j.contains("all_bases"))
            for (auto& b : j.at("all_bases"))
                result.all_bases.emplace_back(b.get<std::vector<VertexId>>());
        result.stats.subsets = j.at("stats").at("subsets").get<std::uint64_t>();
        result.stats.millis = j.at("stats").at("millis").get<double>();
    }
    catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("dimension result: ") + e.what());
    }
    return result;
}

auto to_json(const Graph& g, const FamilyTheoremReport& report) -> json
{
    return {
        { "family", to_string(report.family) },
        { "n", report.n },
        { "mdim", report.n + 1 },
        { "certificate", to_json(g, report.certificate) },
        { "basis", report.basis.ids() },
        { "basis_labels", landmark_labels(g, report.basis) },
        { "basis_is_generator", report.basis_is_generator },
        { "basis_is_independent", report.basis_is_independent },
        { "proven", report.proven },
    };
}

namespace {
    auto pairs_to_json(const std::vector<CollisionPair>& pairs, int n) -> json
    {
        auto j = json::array();
        for (auto& p : pairs)
            j.push_back(json::array({ label(p.first, n), label(p.second, n) }));
        return j;
    }
}

auto to_json(const CensusReport& report) -> json
{
    return {
        { "family", to_string(report.family) },
        { "n", report.n },
        { "aleph", report.aleph },
        { "observed", pairs_to_json(report.observed, report.n) },
        { "predicted", pairs_to_json(report.predicted, report.n) },
        { "unexpected", pairs_to_json(report.unexpected, report.n) },
        { "missing", pairs_to_json(report.missing, report.n) },
        { "unseparated", pairs_to_json(report.unseparated, report.n) },
        { "full_basis_collisions", pairs_to_json(report.full_basis_collisions, report.n) },
        { "matches", report.matches() },
    };
}

auto to_json(const ValidationReport& report) -> json
{
    auto mismatches = json::array();
    for (auto& m : report.mismatches)
        mismatches.push_back({
            { "element", label(m.element, report.n) },
            { "kind", to_string(m.element.kind) },
            { "index", m.element.index },
            { "table", m.table ? json(*m.table) : json(nullptr) },
            { "oracle", m.oracle },
        });
    return {
        { "family", to_string(report.family) },
        { "n", report.n },
        { "aleph", report.aleph },
        { "case", report.even ? "even" : "odd" },
        { "elements_checked", report.elements_checked },
        { "mismatches", mismatches },
        { "census", to_json(report.census) },
    };
}

auto to_json(const ReportEnvelope& envelope) -> json
{
    return {
        { "tool", envelope.tool },
        { "version", envelope.version },
        { "command", envelope.command },
        { "input", envelope.input },
        { "result", envelope.result },
        { "duration_ms", envelope.duration_ms },
        { "seed", envelope.seed },
    };
}

auto envelope_from_json(const json& j) -> ReportEnvelope
{
    ReportEnvelope envelope;
    try {
        envelope.tool = j.at("tool").get<std::string>();
        envelope.version = j.at("version").get<std::string>();
        envelope.command = j.at("command").get<std::string>();
        envelope.input = j.at("input");
        envelope.result = j.at("result");
        envelope.duration_ms = j.at("duration_ms").get<double>();
        envelope.seed = j.at("seed");
    }
    catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("report envelope: ") + e.what());
    }
    return envelope;
}

} // namespace resolvekit
