#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homcover/covering.hpp"
#include "homcover/deck.hpp"
#include "homcover/error.hpp"
#include "homcover/families.hpp"
#include "homcover/io.hpp"
#include "homcover/morphism.hpp"
#include "homcover/universal.hpp"
#include "homcover/walk.hpp"

namespace py = pybind11;
using namespace homcover;

namespace {

std::vector<std::string> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(g.label(v));
    return out;
}

Walk walk_from(const Graph& g, const std::vector<std::string>& labels) {
    std::vector<Vertex> seq;
    for (const auto& l : labels) seq.push_back(g.vertex(l));
    return Walk(g, seq);
}

std::vector<std::string> walk_labels(const Walk& w) { return labels_of(w.base(), w.seq()); }

Morphism morphism_from(const Graph& dom, const Graph& cod, const std::map<std::string, std::string>& images) {
    std::vector<Vertex> map(dom.order());
    std::vector<bool> seen(dom.order(), false);
    for (const auto& [from, to] : images) {
        auto v = dom.vertex(from);
        map[v] = cod.vertex(to);
        seen[v] = true;
    }
    for (Vertex v = 0; v < dom.order(); ++v)
        if (!seen[v]) throw PreconditionError("vertex '" + dom.label(v) + "' is not mapped");
    Morphism f(dom, cod, std::move(map));
    f.require_valid();
    return f;
}

std::map<std::string, std::string> morphism_dict(const Morphism& f) {
    std::map<std::string, std::string> out;
    for (Vertex v = 0; v < f.dom().order(); ++v) out[f.dom().label(v)] = f.cod().label(f(v));
    return out;
}

py::dict group_dict(const GroupDescription& d) {
    py::dict out;
    out["name"] = d.name;
    out["order"] = d.order;
    out["abelian"] = d.abelian;
    out["element_orders"] = d.element_orders;
    return out;
}

py::object shift_dict(const std::optional<ShiftEvidence>& s) {
    if (!s) return py::none();
    py::dict out;
    out["generator"] = walk_labels(s->generator);
    out["safe_fibre_size"] = s->safe_fibre_size;
    out["powers"] = s->powers;
    out["fibre_sizes"] = s->fibre_sizes;
    return out;
}

}  // namespace

PYBIND11_MODULE(_homcover, m) {
    m.doc() = "Homotopy covers of finite graphs";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            error(e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::string& name, const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
                 return Graph::from_labels(name, labels, edges);
             }),
             py::arg("name"), py::arg("vertices"), py::arg("edges"))
        .def_static("parse", &parse_graph, py::arg("text"), py::arg("default_name") = "G")
        .def_static("load", [](const std::string& path) { return load_graph(path); })
        .def_property_readonly("name", &Graph::name)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("vertices", &Graph::labels)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& e : g.edges()) out.emplace_back(g.label(e.first), g.label(e.second));
                                   return out;
                               })
        .def("neighborhood",
             [](const Graph& g, const std::string& v) { return labels_of(g, neighborhood(g, g.vertex(v))); })
        .def("adjacent", [](const Graph& g, const std::string& a,
                            const std::string& b) { return g.adjacent(g.vertex(a), g.vertex(b)); })
        .def("diamonds",
             [](const Graph& g) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& d : diamonds(g)) out.push_back(labels_of(g, {d.w, d.x, d.y, d.z}));
                 return out;
             })
        .def("to_text", &format_graph)
        .def("to_dot", [](const Graph& g) { return to_dot(g); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + g.name() + ": " + std::to_string(g.order()) + " vertices, " +
                   std::to_string(g.size()) + " edges>";
        });

    py::class_<Morphism>(m, "Morphism")
        .def(py::init(&morphism_from), py::arg("dom"), py::arg("cod"), py::arg("images"))
        .def_static("load", [](const std::string& path) { return load_morphism(path); })
        .def_property_readonly("dom", &Morphism::dom)
        .def_property_readonly("cod", &Morphism::cod)
        .def("images", &morphism_dict)
        .def("__call__", [](const Morphism& f, const std::string& v) { return f.cod().label(f(f.dom().vertex(v))); });

    m.def(
        "generate",
        [](const std::string& family, const std::vector<int>& params) {
            return generate({family_from_tag(family), params});
        },
        py::arg("family"), py::arg("params") = std::vector<int>{});
    m.def("paper_g_covering", &paper_g_covering);
    m.def("are_isomorphic", [](const Graph& a, const Graph& b) { return are_isomorphic(a, b).has_value(); });

    m.def("prune_normal_form", [](const Graph& g, const std::vector<std::string>& walk) {
        return walk_labels(prune_normal_form(walk_from(g, walk)));
    });
    m.def(
        "oracle_homotopic",
        [](const Graph& g, const std::vector<std::string>& a, const std::vector<std::string>& b, std::size_t max_len,
           std::size_t max_states) {
            return oracle_homotopic_rel_endpoints(walk_from(g, a), walk_from(g, b), {max_len, max_states}).verdict ==
                   OracleVerdict::Yes;
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("max_len") = 0, py::arg("max_states") = 1'000'000);
    m.def(
        "homotopic_walks",
        [](const Graph& g, const std::vector<std::string>& a, const std::vector<std::string>& b, std::size_t slack) {
            auto r = homotopic_rel_endpoints(walk_from(g, a), walk_from(g, b), slack);
            return r.verdict == DeciderVerdict::Yes ? "yes" : r.verdict == DeciderVerdict::No ? "no" : "unstable";
        },
        py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("slack") = 2);
    m.def("homotopic_maps", [](const Morphism& f, const Morphism& g, std::size_t max_states) {
        auto r = homotopic(f, g, max_states);
        return r.verdict == HomotopyVerdict::Yes ? "yes" : r.verdict == HomotopyVerdict::No ? "no" : "inconclusive";
    }, py::arg("f"), py::arg("g"), py::arg("max_states") = 1'000'000);

    m.def("find_fold", [](const Graph& g) -> py::object {
        auto f = find_fold(g);
        if (!f) return py::none();
        return py::make_tuple(g.label(f->first), g.label(f->second));
    });
    m.def("pleat", [](const Graph& g) {
        auto p = pleat(g);
        return py::make_tuple(p.pleat, p.retraction);
    });

    m.def("check_cover", [](const Morphism& f) {
        auto r = check_cover(f);
        py::dict out;
        out["surjective"] = r.is_surjective;
        out["cover"] = r.is_cover;
        out["homotopy_cover"] = r.is_homotopy_cover;
        std::vector<std::vector<std::string>> failed;
        for (const auto& d : r.diamond_failures) failed.push_back(labels_of(f.cod(), {d.w, d.x, d.y, d.z}));
        out["diamond_failures"] = failed;
        return out;
    });
    m.def("lift_walk", [](const Morphism& f, const std::vector<std::string>& walk, const std::string& start) {
        return walk_labels(lift_walk(f, walk_from(f.cod(), walk), f.dom().vertex(start)));
    });
    m.def("lift_homotopy", [](const Morphism& f, const std::vector<Morphism>& chain, const Morphism& start) {
        return lift_homotopy(f, chain, start);
    });

    py::class_<FoldedCover>(m, "FoldedCover")
        .def_property_readonly("depth", &FoldedCover::depth)
        .def_property_readonly("stabilized", &FoldedCover::stabilized)
        .def_property_readonly("class_count", &FoldedCover::class_count)
        .def_property_readonly("graph", &FoldedCover::graph)
        .def_property_readonly("projection", &FoldedCover::projection_map)
        .def("representatives",
             [](const FoldedCover& u) {
                 std::vector<std::vector<std::string>> out;
                 for (ClassId c = 0; c < u.class_count(); ++c) out.push_back(walk_labels(u.representative_walk(c)));
                 return out;
             })
        .def("lift", [](const FoldedCover& u, const std::vector<std::string>& walk) {
            return u.lift(walk_from(u.base(), walk));
        })
        .def("to_dot", [](const FoldedCover& u) { return to_dot(u); });
    m.def("build_folded_cover", [](const Graph& g, const std::string& v, std::size_t depth) {
        return build_folded_cover(g, g.vertex(v), depth);
    });

    m.def(
        "fundamental_group",
        [](const Graph& g, const std::string& v, std::size_t depth, std::size_t bound) {
            auto r = fundamental_group(g, g.vertex(v), depth, bound);
            py::dict out;
            out["depth"] = r.depth;
            out["stabilized"] = r.stabilized;
            out["classes"] = r.class_count;
            out["group"] = r.group ? py::object(group_dict(*r.group)) : py::none();
            out["shift"] = shift_dict(r.shift);
            return out;
        },
        py::arg("graph"), py::arg("basepoint"), py::arg("depth") = 12, py::arg("order_bound") = kDefaultOrderBound);
    m.def(
        "enumerate_covers",
        [](const Graph& g, const std::string& v, std::size_t depth, std::size_t max_index) {
            auto e = enumerate_covers(g, g.vertex(v), depth, max_index);
            py::list covers;
            for (const auto& c : e.covers) covers.append(py::make_tuple(c.graph, c.projection, c.index));
            return covers;
        },
        py::arg("graph"), py::arg("basepoint"), py::arg("depth") = 12, py::arg("max_index") = 4);
    m.def(
        "cyclic_quotient",
        [](const Graph& g, const std::string& v, const std::vector<std::string>& generator, std::size_t n) {
            auto q = cyclic_quotient(g, g.vertex(v), walk_from(g, generator), n);
            return py::make_tuple(q.graph, q.projection);
        },
        py::arg("graph"), py::arg("basepoint"), py::arg("generator"), py::arg("n"));
}
