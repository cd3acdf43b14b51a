#include "resolvekit/driver.hpp"
#include "resolvekit/families.hpp"
#include "resolvekit/io.hpp"
#include "resolvekit/resolvability.hpp"
#include "resolvekit/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace resolvekit;

namespace {

auto to_python(const json& j) -> py::object
{
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (auto& x : j)
            out.append(to_python(x));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (auto& [k, v] : j.items())
            out[py::str(k)] = to_python(v);
        return out;
    }
    default: return py::none();
    }
}

auto landmarks_from(const Graph& g, const py::iterable& items) -> LandmarkSet
{
    std::vector<VertexId> ids;
    for (auto item : items) {
        if (py::isinstance<py::str>(item)) {
            auto label = parse_label(item.cast<std::string>());
            if (! label)
                throw Error(ErrorKind::UnknownLabel, "cannot read label '" + item.cast<std::string>() + "'");
            ids.push_back(g.id_of(*label));
        }
        else
            ids.push_back(item.cast<VertexId>());
    }
    LandmarkSet set{ std::move(ids) };
    set.validate(g);
    return set;
}

}

PYBIND11_MODULE(resolvekit, m)
{
    m.doc() = "Metric, edge metric and mixed metric dimension of graphs";
    m.attr("__version__") = RESOLVEKIT_VERSION;

    static py::exception<Error> error_type(m, "ResolveKitError");
    static py::exception<BudgetExceeded> budget_type(m, "BudgetExceeded", error_type.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const BudgetExceeded& e) {
            py::object exc = py::handle(budget_type.ptr())(e.what());
            exc.attr("kind") = "BudgetExceeded";
            exc.attr("lower_bound") = e.lower_bound;
            exc.attr("upper_bound") = e.upper_bound;
            exc.attr("subsets") = e.subsets;
            PyErr_SetObject(budget_type.ptr(), exc.ptr());
        }
        catch (const Error& e) {
            py::object exc = py::handle(error_type.ptr())(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            exc.attr("exit_code") = exit_code_for(e.kind());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) {
            std::vector<std::pair<VertexId, VertexId>> out;
            for (auto& e : g.edges())
                out.emplace_back(e.u, e.v);
            return out;
        })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def_property_readonly("has_labels", &Graph::has_labels)
        .def("label", [](const Graph& g, VertexId v) { return to_string(g.label_of(v)); })
        .def("id_of", [](const Graph& g, const std::string& text) {
            auto label = parse_label(text);
            if (! label)
                throw Error(ErrorKind::UnknownLabel, "cannot read label '" + text + "'");
            return g.id_of(*label);
        })
        .def("distances", [](const Graph& g) {
            DistanceMatrix d(g);
            std::vector<std::vector<Distance>> rows;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                auto r = d.row(v);
                rows.emplace_back(r.begin(), r.end());
            }
            return rows;
        })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges>";
        });

    m.def("build_graph", [](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        return build_graph(n, edges);
    }, py::arg("n"), py::arg("edges"));
    m.def("load_graph", [](const std::string& path) { return parse_graph_file(path); }, py::arg("path"));
    m.def("family", [](const std::string& name, int n) { return make_family(parse_family(name), n); },
        py::arg("name"), py::arg("n"));

    m.def("dimension", [](const Graph& g, const std::string& mode, bool prune, bool all_bases, std::uint64_t budget) {
        SearchOptions opts;
        opts.use_forced_pruning = prune;
        opts.enumerate_all = all_bases;
        opts.budget = budget;
        DimensionResult r;
        {
            py::gil_scoped_release release;
            r = exact_dimension(g, DistanceMatrix(g), parse_mode(mode), opts);
        }
        return to_python(to_json(g, r));
    }, py::arg("graph"), py::arg("mode") = "mixed", py::arg("prune") = true, py::arg("all_bases") = false,
        py::arg("budget") = SearchOptions::default_budget);

    m.def("greedy", [](const Graph& g, const std::string& mode) {
        return greedy_upper_bound(g, DistanceMatrix(g), parse_mode(mode)).ids();
    }, py::arg("graph"), py::arg("mode") = "mixed");

    m.def("check_set", [](const Graph& g, const py::iterable& landmarks, const std::string& mode) {
        auto set = landmarks_from(g, landmarks);
        DistanceMatrix d(g);
        auto check = is_generator(g, d, set, parse_mode(mode));
        py::dict out;
        out["generator"] = check.resolves;
        out["independent"] = is_independent_set(g, set);
        out["witness"] = py::none();
        if (check.witness)
            out["witness"] = py::make_tuple(element_to_string(g, check.witness->first),
                element_to_string(g, check.witness->second));
        return out;
    }, py::arg("graph"), py::arg("landmarks"), py::arg("mode") = "mixed");

    m.def("verify_family_theorem", [](const std::string& family, int n) {
        auto f = parse_family(family);
        return to_python(to_json(make_family(f, n), verify_family_theorem(f, n)));
    }, py::arg("family"), py::arg("n"));

    m.def("validate_tables", [](const std::string& family, int n) {
        return to_python(to_json(validate_tables(parse_family(family), n)));
    }, py::arg("family"), py::arg("n"));

    m.def("collision_census", [](const std::string& family, int n) {
        return to_python(to_json(collision_census(parse_family(family), n)));
    }, py::arg("family"), py::arg("n"));

    m.def("chain_check", [](const std::string& family, int n) {
        auto r = chain_check(parse_family(family), n);
        py::dict out;
        out["vertex"] = r.vertex;
        out["edge"] = r.edge;
        out["mixed"] = r.mixed;
        out["strict"] = r.strict;
        return out;
    }, py::arg("family"), py::arg("n"));
}
