#include "resolvekit/driver.hpp"
#include "resolvekit/io.hpp"
#include "resolvekit/tables.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace resolvekit {

auto exit_code_for(ErrorKind kind) noexcept -> int
{
    switch (kind) {
    case ErrorKind::TheoremViolation:
    case ErrorKind::CensusMismatch:
    case ErrorKind::EvidenceFailure:
        return 1;
    case ErrorKind::BudgetExceeded:
        return 3;
    case ErrorKind::SelfLoop:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::Disconnected:
    case ErrorKind::InvalidN:
    case ErrorKind::UnlabeledGraph:
    case ErrorKind::UnknownLabel:
    case ErrorKind::EmptyLandmarkSet:
    case ErrorKind::InvalidLandmarkSet:
    case ErrorKind::NBelowTableRange:
    case ErrorKind::UnknownRow:
    case ErrorKind::ParseError:
    case ErrorKind::Usage:
        return 2;
    }
    return 2;
}

auto chain_check(Family family, int n, const SearchOptions& opts) -> ChainReport
{
    if (n < 5)
        throw Error(ErrorKind::InvalidN, "chain check needs n >= 5, got " + std::to_string(n));
    auto g = make_family(family, n);
    DistanceMatrix d(g);

    ChainReport report{ .family = family, .n = n };
    report.vertex = exact_dimension(g, d, ResolutionMode::vertex, opts).dimension;
    report.edge = exact_dimension(g, d, ResolutionMode::edge, opts).dimension;
    if (family == Family::web || family == Family::prism_allied)
        report.mixed = verify_family_theorem(family, n).basis.size();
    else
        report.mixed = exact_dimension(g, d, ResolutionMode::mixed, opts).dimension;
    report.strict = report.vertex < report.edge && report.edge < report.mixed;
    return report;
}

auto parse_range(const std::string& text) -> IntRange
{
    auto bad = [&] { return Error(ErrorKind::Usage, "cannot read n range '" + text + "'"); };
    auto read_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
            throw bad();
        return std::stoi(s);
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = read_int(text);
        return { v, v };
    }
    IntRange range{ read_int(text.substr(0, dots)), read_int(text.substr(dots + 2)) };
    if (range.last < range.first)
        throw bad();
    return range;
}

auto budget_from_environment() -> std::uint64_t
{
    auto* value = std::getenv("RESOLVE_KIT_BUDGET");
    if (value == nullptr || *value == '\0')
        return SearchOptions::default_budget;
    std::string text(value);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19)
        throw Error(ErrorKind::Usage, "RESOLVE_KIT_BUDGET must be a positive integer, got '" + text + "'");
    auto budget = std::stoull(text);
    if (budget == 0)
        throw Error(ErrorKind::Usage, "RESOLVE_KIT_BUDGET must be positive");
    return budget;
}

namespace {
    auto command_name(Command c) -> std::string
    {
        switch (c) {
        case Command::gen: return "gen";
        case Command::dim: return "dim";
        case Command::check_set: return "check-set";
        case Command::verify_paper: return "verify-paper";
        case Command::codes: return "codes";
        case Command::validate_tables: return "validate-tables";
        case Command::chain: return "chain";
        }
        return "?";
    }

    auto join(const std::vector<std::string>& parts, const char* sep = " ") -> std::string
    {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? sep : "") + parts[i];
        return s;
    }

    struct Input {
        Graph graph;
        json description;
    };

    auto single_n(const RunConfig& c) -> int
    {
        auto r = parse_range(*c.n);
        if (r.first != r.last)
            throw Error(ErrorKind::Usage, command_name(c.command) + " takes a single n, not a range");
        return r.first;
    }

    auto require_family(const RunConfig& c) -> Family
    {
        if (! c.family || ! c.n)
            throw Error(ErrorKind::Usage, command_name(c.command) + " needs --family and --n");
        if (c.input)
            throw Error(ErrorKind::Usage, command_name(c.command) + " does not read a graph file");
        return *c.family;
    }

    auto load_input(const RunConfig& c) -> Input
    {
        bool from_family = c.family.has_value() || c.n.has_value();
        if (from_family == c.input.has_value())
            throw Error(ErrorKind::Usage, "give either --family with --n, or --input, but not both");
        if (c.input)
            return { parse_graph_file(*c.input), { { "file", *c.input } } };
        auto f = require_family(c);
        auto n = single_n(c);
        return { make_family(f, n), { { "family", std::string(to_string(f)) }, { "n", n } } };
    }

    auto certificate_line(const Graph& g, const LowerBoundCertificate& cert) -> std::string
    {
        std::ostringstream s;
        s << cert.bound << " (" << cert.forced.leaves.size() << " forced";
        if (cert.failure_witness)
            s << ", witness " << element_to_string(g, cert.failure_witness->first) << " ~ "
              << element_to_string(g, cert.failure_witness->second);
        s << ")";
        return s.str();
    }

    struct Outcome {
        json result;
        std::string text;
        int code = 0;
    };

    auto run_dim(const RunConfig& c, const Input& in) -> Outcome
    {
        DistanceMatrix d(in.graph);
        DimensionResult r;
        if (c.greedy_only) {
            auto start = std::chrono::steady_clock::now();
            r.mode = c.mode;
            r.basis = greedy_upper_bound(in.graph, d, c.mode);
            r.dimension = r.basis.size();
            r.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        else
            r = exact_dimension(in.graph, d, c.mode, c.search);

        std::ostringstream text;
        text << "mode: " << to_string(r.mode) << '\n';
        text << (c.greedy_only ? "upper bound: " : "dimension: ") << r.dimension << '\n';
        text << "basis: " << join(landmark_labels(in.graph, r.basis)) << '\n';
        if (r.certificate)
            text << "lower bound: " << certificate_line(in.graph, *r.certificate) << '\n';
        for (auto& b : r.all_bases)
            text << "minimal basis: " << join(landmark_labels(in.graph, b)) << '\n';
        if (! c.greedy_only)
            text << "subsets checked: " << r.stats.subsets << (r.pruned ? " (pruned)" : "") << '\n';
        auto j = to_json(in.graph, r);
        j["exact"] = ! c.greedy_only;
        return { j, text.str() };
    }

    auto run_check_set(const RunConfig& c, const Input& in) -> Outcome
    {
        if (c.landmarks.empty())
            throw Error(ErrorKind::Usage, "check-set needs --set");
        auto set = parse_vertex_list(in.graph, c.landmarks);
        DistanceMatrix d(in.graph);
        auto check = is_generator(in.graph, d, set, c.mode);
        auto independent = is_independent_set(in.graph, set);

        json j{
            { "mode", to_string(c.mode) },
            { "set", set.ids() },
            { "set_labels", landmark_labels(in.graph, set) },
            { "generator", check.resolves },
            { "independent", independent },
            { "witness", nullptr },
        };
        std::ostringstream text;
        text << "generator: " << (check.resolves ? "true" : "false") << '\n';
        text << "independent: " << (independent ? "true" : "false") << '\n';
        if (check.witness) {
            auto& [a, b] = *check.witness;
            j["witness"] = json::array({ element_to_json(a), element_to_json(b) });
            j["witness_labels"] = json::array({ element_to_string(in.graph, a), element_to_string(in.graph, b) });
            text << "witness: " << element_to_string(in.graph, a) << " ~ " << element_to_string(in.graph, b)
                 << " share code (" << join([&] {
                        std::vector<std::string> parts;
                        for (auto x : mixed_code(d, a, set))
                            parts.push_back(std::to_string(x));
                        return parts;
                    }(), ",")
                 << ")\n";
        }
        return { j, text.str() };
    }

    auto run_verify_paper(const RunConfig& c) -> Outcome
    {
        auto f = require_family(c);
        auto range = parse_range(*c.n);
        Outcome o{ json::array(), {} };
        for (int n = range.first; n <= range.last; ++n) {
            auto report = verify_family_theorem(f, n);
            auto g = make_family(f, n);
            o.result.push_back(to_json(g, report));
            o.text += std::string(to_string(f)) + " n=" + std::to_string(n) + ": proven, mdim = " + std::to_string(n + 1)
                    + ", lower bound " + certificate_line(g, report.certificate) + ", basis "
                    + join(landmark_labels(g, report.basis), ",") + " independent\n";
        }
        return o;
    }

    auto run_codes(const RunConfig& c) -> Outcome
    {
        auto f = require_family(c);
        auto n = single_n(c);
        auto rows = compare_codes(f, n);
        std::ostringstream csv;
        csv << "kind,label,t1,t2,t3,t4,t5,o1,o2,o3,o4,o5,match\n";
        auto result = json::array();
        for (auto& row : rows) {
            csv << to_string(row.element.kind) << ',' << label(row.element, n);
            for (std::size_t i = 0; i < 5; ++i) {
                csv << ',';
                if (row.table)
                    csv << (*row.table)[i];
            }
            for (auto x : row.oracle)
                csv << ',' << x;
            csv << ',' << (row.matches() ? "true" : "false") << '\n';
            result.push_back({
                { "kind", to_string(row.element.kind) },
                { "label", label(row.element, n) },
                { "table", row.table ? json(*row.table) : json(nullptr) },
                { "oracle", row.oracle },
                { "match", row.matches() },
            });
        }
        return { result, csv.str() };
    }

    auto run_validate_tables(const RunConfig& c) -> Outcome
    {
        auto f = require_family(c);
        auto range = parse_range(*c.n);
        Outcome o{ json::array(), {} };
        for (int n = range.first; n <= range.last; ++n) {
            auto report = validate_tables(f, n);
            o.result.push_back(to_json(report));
            auto& census = report.census;
            o.text += std::string(to_string(f)) + " n=" + std::to_string(n) + " (" + (report.even ? "even" : "odd")
                    + ", aleph=" + std::to_string(report.aleph) + "): " + std::to_string(report.elements_checked)
                    + " elements, " + std::to_string(report.mismatches.size()) + " table mismatches; census "
                    + std::to_string(census.observed.size()) + " pairs, "
                    + (census.matches() ? "matches prediction" : "DIFFERS from prediction") + "\n";
            for (auto& m : report.mismatches) {
                std::string table = "no row";
                if (m.table) {
                    std::vector<std::string> parts;
                    for (auto x : *m.table)
                        parts.push_back(std::to_string(x));
                    table = "(" + join(parts, ",") + ")";
                }
                std::vector<std::string> oracle;
                for (auto x : m.oracle)
                    oracle.push_back(std::to_string(x));
                o.text += "  " + label(m.element, n) + ": table " + table + ", computed (" + join(oracle, ",") + ")\n";
            }
            if (! census.matches())
                o.code = 1;
        }
        return o;
    }

    auto run_chain(const RunConfig& c) -> Outcome
    {
        auto f = require_family(c);
        auto range = parse_range(*c.n);
        Outcome o{ json::array(), {} };
        for (int n = range.first; n <= range.last; ++n) {
            auto r = chain_check(f, n, c.search);
            o.result.push_back({
                { "family", to_string(f) },
                { "n", n },
                { "vertex", r.vertex },
                { "edge", r.edge },
                { "mixed", r.mixed },
                { "strict", r.strict },
            });
            auto triple = std::to_string(r.vertex) + (r.strict ? " < " : ", ") + std::to_string(r.edge)
                    + (r.strict ? " < " : ", ") + std::to_string(r.mixed);
            o.text += std::string(to_string(f)) + " n=" + std::to_string(n) + ": " + triple
                    + (r.strict ? " strict" : " NOT strict (flagged)") + "\n";
        }
        return o;
    }

    auto write_report(const RunConfig& c, std::ostream& out, const std::string& body) -> void
    {
        if (! c.output) {
            out << body;
            return;
        }
        std::ofstream file(*c.output);
        if (! file)
            throw Error(ErrorKind::Usage, "cannot write " + *c.output);
        file << body;
    }

    auto run_gen(const RunConfig& c, std::ostream& out) -> void
    {
        auto f = require_family(c);
        auto g = make_family(f, single_n(c));
        if (c.format == OutputFormat::csv)
            throw Error(ErrorKind::Usage, "gen writes an edge list or json, not csv");
        if (c.format == OutputFormat::json) {
            json edges = json::array();
            for (auto& e : g.edges())
                edges.push_back({ e.u, e.v });
            write_report(c, out, json{ { "n", g.vertex_count() }, { "edges", edges }, { "labels", labels_to_json(g) } }.dump(2) + "\n");
            return;
        }
        std::ostringstream list;
        write_edge_list(list, g);
        write_report(c, out, list.str());
        if (c.output && g.has_labels()) {
            std::ofstream sidecar(label_sidecar_path(*c.output));
            sidecar << labels_to_json(g).dump() << '\n';
        }
    }
}

auto run(const RunConfig& config, std::ostream& out, std::ostream& err) -> int
{
    try {
        if (config.search.budget == 0)
            throw Error(ErrorKind::Usage, "budget must be positive");
        if (config.command == Command::gen) {
            run_gen(config, out);
            return 0;
        }

        auto start = std::chrono::steady_clock::now();
        ReportEnvelope envelope;
        envelope.command = command_name(config.command);
        Outcome outcome;
        switch (config.command) {
        case Command::dim:
        case Command::check_set: {
            auto in = load_input(config);
            envelope.input = in.description;
            outcome = config.command == Command::dim ? run_dim(config, in) : run_check_set(config, in);
            break;
        }
        case Command::verify_paper: outcome = run_verify_paper(config); break;
        case Command::codes: outcome = run_codes(config); break;
        case Command::validate_tables: outcome = run_validate_tables(config); break;
        case Command::chain: outcome = run_chain(config); break;
        case Command::gen: break;
        }
        if (envelope.input.is_null())
            envelope.input = { { "family", std::string(to_string(*config.family)) }, { "n", *config.n } };
        if (config.command == Command::dim || config.command == Command::check_set)
            envelope.input["mode"] = to_string(config.mode);

        envelope.result = std::move(outcome.result);
        envelope.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        switch (config.format) {
        case OutputFormat::json: write_report(config, out, to_json(envelope).dump(2) + "\n"); break;
        case OutputFormat::csv:
            if (config.command != Command::codes)
                throw Error(ErrorKind::Usage, "csv output is only available for codes");
            [[fallthrough]];
        case OutputFormat::text: write_report(config, out, outcome.text); break;
        }
        return outcome.code;
    }
    catch (const BudgetExceeded& e) {
        err << "resolve-kit: budget exceeded after " << e.subsets << " subsets; dimension lies in [" << e.lower_bound
            << ", " << e.upper_bound << "]\n";
        return exit_code_for(ErrorKind::BudgetExceeded);
    }
    catch (const Error& e) {
        err << "resolve-kit: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace resolvekit
