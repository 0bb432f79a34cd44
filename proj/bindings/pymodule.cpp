#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergetool/canonical.hpp"
#include "bergetool/census.hpp"
#include "bergetool/constructions.hpp"
#include "bergetool/detectors.hpp"
#include "bergetool/errors.hpp"
#include "bergetool/hgr_io.hpp"
#include "bergetool/witness.hpp"

namespace py = pybind11;
using namespace berge;

namespace {

Variant variant_from(const std::string& s) {
    if (s == "cycles") return Variant::cycles;
    if (s == "paths") return Variant::paths;
    throw InvalidParams("variant must be 'cycles' or 'paths'");
}

ExtremalQuery make_query(int n, int r, int k, const std::string& variant,
                         bool multi) {
    return ExtremalQuery{n, r, k, variant_from(variant), multi};
}

std::string kind_name(Recognition::Kind k) {
    switch (k) {
        case Recognition::Kind::r_star: return "r-star";
        case Recognition::Kind::block_tree: return "block-tree";
        default: return "other";
    }
}

}  // namespace

PYBIND11_MODULE(_bergetool, m) {
    m.doc() = "Berge path/cycle analysis for r-uniform hypergraphs";

    py::register_exception<ParseError>(m, "HgrParseError");
    py::register_exception<UnsupportedRegime>(m, "UnsupportedRegimeError");
    py::register_exception<CanonLimitExceeded>(m, "CanonLimitError");
    py::register_exception<PreconditionViolated>(m, "PreconditionError");

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init([](int r, int n, std::vector<Edge> edges, bool simple) {
                 Hypergraph h;
                 h.r = r;
                 h.n = n;
                 h.edges = std::move(edges);
                 h.simple = simple;
                 return h;
             }),
             py::arg("r"), py::arg("n"), py::arg("edges") = std::vector<Edge>{},
             py::arg("simple") = true)
        .def_readonly("r", &Hypergraph::r)
        .def_readonly("n", &Hypergraph::n)
        .def_readonly("simple", &Hypergraph::simple)
        .def_readonly("edges", &Hypergraph::edges)
        .def("edge_count", &Hypergraph::edge_count)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& h) {
            return "<Hypergraph r=" + std::to_string(h.r) + " n=" + std::to_string(h.n) +
                   " e=" + std::to_string(h.edge_count()) + ">";
        });

    m.def("validate", &validate, py::arg("h"));
    m.def("two_shadow",
          [](const Hypergraph& h) { return two_shadow(h).pairs; }, py::arg("h"));
    m.def("incidence_degrees", [](const Hypergraph& h) {
        std::vector<int> deg(static_cast<size_t>(h.n + 1), 0);
        for (auto [v, i] : incidence_graph(h).adjacency) deg[static_cast<size_t>(v)]++;
        return std::vector<int>(deg.begin() + 1, deg.end());
    });
    m.def("shadow_blocks", [](const Hypergraph& h) {
        auto dec = shadow_blocks(h);
        return py::make_tuple(dec.blocks, dec.cut_vertices);
    });
    m.def("canonical_form", &canonical_form, py::arg("h"));
    m.def("hyperedge_neighborhood",
          [](const Hypergraph& h, const std::vector<Vertex>& s) {
              auto nb = hyperedge_neighborhood(h, s);
              for (auto& i : nb) ++i;  // 1-based for the python surface
              return nb;
          },
          py::arg("h"), py::arg("s"));
    m.def("read_hgr", &read_hgr, py::arg("text"));
    m.def("write_hgr", &write_hgr, py::arg("h"));

    py::class_<BergePath>(m, "BergePath")
        .def_readonly("vertices", &BergePath::vertices)
        .def_readonly("edge_indices", &BergePath::edge_indices)
        .def("length", &BergePath::length)
        .def("__repr__", [](const BergePath& p) { return to_line(p); });
    py::class_<BergeCycle>(m, "BergeCycle")
        .def_readonly("vertices", &BergeCycle::vertices)
        .def_readonly("edge_indices", &BergeCycle::edge_indices)
        .def("length", &BergeCycle::length)
        .def("__repr__", [](const BergeCycle& c) { return to_line(c); });
    py::class_<SemiPath>(m, "SemiPath")
        .def_readonly("vertices", &SemiPath::vertices)
        .def_readonly("edge_indices", &SemiPath::edge_indices)
        .def("length", &SemiPath::length)
        .def("__repr__", [](const SemiPath& s) { return to_line(s); });

    m.def("find_berge_path", &find_berge_path, py::arg("h"), py::arg("k"),
          py::arg("endpoints") = std::nullopt);
    m.def("find_berge_cycle_at_least", &find_berge_cycle_at_least, py::arg("h"),
          py::arg("k"));
    m.def("longest_berge_cycle", [](const Hypergraph& h) {
        auto res = longest_berge_cycle(h);
        return py::make_tuple(res.length, res.cycle);
    });
    m.def("maximum_semi_path", &maximum_semi_path, py::arg("h"), py::arg("k"));
    m.def("verify_path", [](const Hypergraph& h, const BergePath& p) {
        return verify_certificate(h, p);
    });
    m.def("verify_cycle", [](const Hypergraph& h, const BergeCycle& c) {
        return verify_certificate(h, c);
    });
    m.def("verify_semi_path", [](const Hypergraph& h, const SemiPath& s) {
        return verify_certificate(h, s);
    });

    m.def("r_star", &r_star, py::arg("n"), py::arg("r"));
    m.def("block_tree_chain",
          [](int blocks, int s, int r, int k) {
              return block_tree(BlockTreeTemplate::chain(blocks, s), s, r, k);
          },
          py::arg("blocks"), py::arg("s"), py::arg("r"), py::arg("k"));
    m.def("extremal_value",
          [](int n, int r, int k, const std::string& variant, bool multi) {
              return extremal_value(make_query(n, r, k, variant, multi));
          },
          py::arg("n"), py::arg("r"), py::arg("k"), py::arg("variant"),
          py::arg("multi") = false);
    m.def("apex_extend", &apex_extend, py::arg("h"));
    m.def("recognize", [](const Hypergraph& h) {
        auto rec = recognize(h);
        py::dict out;
        out["kind"] = kind_name(rec.kind);
        if (rec.kind == Recognition::Kind::r_star) out["center"] = rec.center;
        if (rec.kind == Recognition::Kind::block_tree) {
            out["s"] = rec.s;
            out["mu"] = rec.mu;
            out["blocks"] = rec.block_count;
        }
        return out;
    });

    py::class_<Witness> witness(m, "Witness");
    py::enum_<Witness::Case>(witness, "Case")
        .value("I", Witness::Case::I)
        .value("II", Witness::Case::II)
        .value("III", Witness::Case::III);
    witness.def_readonly("tag", &Witness::tag)
        .def_readonly("set", &Witness::set)
        .def_readonly("incident", &Witness::incident)
        .def_readonly("removed_edge", &Witness::removed_edge)
        .def_readonly("center", &Witness::center)
        .def_readonly("star_edges", &Witness::star_edges)
        .def_readonly("shared", &Witness::shared)
        .def_readonly("k_vertices", &Witness::k_vertices)
        .def("__repr__", [](const Witness& w) { return to_line(w); });
    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("witness", &WitnessReport::witness)
        .def_readonly("fallback_used", &WitnessReport::fallback_used)
        .def_readonly("trace", &WitnessReport::trace);
    m.def("find_witness", &find_witness, py::arg("h"), py::arg("k"), py::arg("m"));
    m.def("verify_witness", &verify_witness, py::arg("h"), py::arg("k"),
          py::arg("m"), py::arg("w"));

    py::class_<CensusResult>(m, "CensusResult")
        .def_readonly("value", &CensusResult::value)
        .def_readonly("witness_graph", &CensusResult::witness_graph)
        .def_readonly("explored", &CensusResult::explored)
        .def_readonly("exhaustive", &CensusResult::exhaustive)
        .def_readonly("formula", &CensusResult::formula);
    m.def("turan_census",
          [](int n, int r, int k, const std::string& variant, bool multi, int cap,
             int workers, long long max_nodes, int max_edges) {
              SearchConfig cfg;
              cfg.multiplicity_cap = cap;
              cfg.workers = workers;
              cfg.max_nodes = max_nodes;
              cfg.max_edges = max_edges;
              return turan_census(make_query(n, r, k, variant, multi), cfg);
          },
          py::arg("n"), py::arg("r"), py::arg("k"), py::arg("variant"),
          py::arg("multi") = false, py::arg("cap") = 1, py::arg("workers") = 1,
          py::arg("max_nodes") = 0, py::arg("max_edges") = 0);
    m.def("enumerate_extremal",
          [](int n, int r, int k, const std::string& variant, bool multi, int cap) {
              SearchConfig cfg;
              cfg.multiplicity_cap = cap;
              return enumerate_extremal(make_query(n, r, k, variant, multi), cfg);
          },
          py::arg("n"), py::arg("r"), py::arg("k"), py::arg("variant"),
          py::arg("multi") = false, py::arg("cap") = 1);
    m.def("jackson_check",
          [](int a_count, const std::vector<std::vector<int>>& b_neighbors, int r) {
              BipartiteGraph g;
              g.a_count = a_count;
              g.b_neighbors = b_neighbors;
              auto res = jackson_check(g, r);
              std::string verdict =
                  res.verdict == JacksonResult::Verdict::premise_fails
                      ? "premise_fails"
                      : (res.verdict == JacksonResult::Verdict::cycle_found
                             ? "cycle_found"
                             : "counterexample");
              return py::make_tuple(verdict, res.cycle_length);
          },
          py::arg("a_count"), py::arg("b_neighbors"), py::arg("r"));
}
