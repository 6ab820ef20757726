#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hocolim/io.hpp"
#include "hocolim/verify.hpp"

namespace py = pybind11;
using namespace hocolim;

namespace {

template <class T>
std::vector<std::string> names(const std::map<std::string, T>& section) {
    std::vector<std::string> out;
    for (const auto& entry : section) out.push_back(entry.first);
    return out;
}

template <class T>
const T& entity(const std::map<std::string, T>& section, const std::string& name, const char* what) {
    return io::select(section, name, what);
}

std::vector<size_t> colim_betti(const io::Workspace& w, const std::string& name) {
    if (auto it = w.bounded_diagrams.find(name); it != w.bounded_diagrams.end()) {
        const auto& d = it->second;
        if (d.tag.chain) {
            const ChainValues v(d.tag.p);
            return trimmed(v.betti(colim_bounded(v, *d.chain).apex));
        }
        const SSetValues v(d.tag.p);
        return trimmed(v.betti(colim_bounded(v, *d.sset).apex));
    }
    const auto& d = entity(w.indexed_diagrams, name, "diagram");
    if (d.tag.chain) {
        const ChainValues v(d.tag.p);
        return trimmed(v.betti(cat_colim(v, *d.chain).apex));
    }
    const SSetValues v(d.tag.p);
    return trimmed(v.betti(cat_colim(v, *d.sset).apex));
}

std::vector<size_t> ocolim_betti(const io::Workspace& w, const std::string& name) {
    const auto& d = entity(w.bounded_diagrams, name, "bounded diagram");
    if (d.tag.chain) {
        const ChainValues v(d.tag.p);
        return trimmed(v.betti(ocolim(v, *d.chain).value()));
    }
    const SSetValues v(d.tag.p);
    return trimmed(v.betti(ocolim(v, *d.sset).value()));
}

std::vector<size_t> hocolim_betti(const io::Workspace& w, const std::string& name) {
    const auto& d = entity(w.indexed_diagrams, name, "indexed diagram");
    if (d.tag.chain) {
        const ChainValues v(d.tag.p);
        return trimmed(v.betti(homotopy_colimit(v, *d.chain).value()));
    }
    const SSetValues v(d.tag.p);
    return trimmed(v.betti(homotopy_colimit(v, *d.sset).value()));
}

Report suite(const std::string& name, uint64_t seed, int instances, uint32_t p) {
    static const std::map<std::string, std::function<Report(const SuiteOptions&)>> suites{
        {"terminal-simplex", suite_terminal_simplex},
        {"sphere-colimit", suite_sphere_colimit},
        {"ocolim-sphere", [](const SuiteOptions&) { return check_ocolim_sphere(); }},
        {"kan-bounded", suite_kan_bounded},
        {"degeneracy-pullback", suite_degeneracy_pullback},
        {"reduction", suite_reduction},
        {"epsilon-cofinality", suite_epsilon_cofinality},
        {"terminal-hocolim", [](const SuiteOptions& o) { return suite_terminal_hocolim(o, false); }},
        {"determinism", [](const SuiteOptions& o) { return suite_terminal_hocolim(o, true); }},
        {"homotopy-pushout", [](const SuiteOptions&) { return check_homotopy_pushout(); }},
        {"classifying-space", suite_classifying_space},
        {"thomason", suite_thomason},
        {"fubini", suite_fubini},
        {"cofibration-colimit", suite_cofibration_colimit},
        {"cofinality", suite_cofinality},
        {"cone", suite_cone},
    };
    auto it = suites.find(name);
    if (it == suites.end()) throw py::value_error("unknown suite '" + name + "'");
    SuiteOptions o;
    o.seed = seed;
    o.instances = instances;
    o.p = p;
    py::gil_scoped_release release;
    return it->second(o);
}

}  // namespace

PYBIND11_MODULE(_hocolim, m) {
    m.doc() = "Colimits and homotopy colimits of finite diagrams of chain complexes and simplicial sets.";

    py::register_exception<io::IoError>(m, "IoError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Report>(m, "Report")
        .def_readonly("claim", &Report::claim)
        .def_readonly("citation", &Report::citation)
        .def_readonly("inputs", &Report::inputs)
        .def_readonly("betti", &Report::betti)
        .def_readonly("verdict", &Report::verdict)
        .def_readonly("detail", &Report::detail)
        .def_readonly("ms", &Report::ms)
        .def("to_json", &io::report_json)
        .def("__str__", &io::report_text)
        .def("__bool__", [](const Report& r) { return r.verdict; });

    py::class_<io::Workspace>(m, "Workspace")
        .def(py::init<>())
        .def_property_readonly("ssets", [](const io::Workspace& w) { return names(w.ssets); })
        .def_property_readonly("maps", [](const io::Workspace& w) { return names(w.maps); })
        .def_property_readonly("categories", [](const io::Workspace& w) { return names(w.categories); })
        .def_property_readonly("functors", [](const io::Workspace& w) { return names(w.functors); })
        .def_property_readonly("cat_diagrams", [](const io::Workspace& w) { return names(w.cat_diagrams); })
        .def_property_readonly("chain_complexes", [](const io::Workspace& w) { return names(w.chain_complexes); })
        .def_property_readonly("bounded_diagrams", [](const io::Workspace& w) { return names(w.bounded_diagrams); })
        .def_property_readonly("indexed_diagrams", [](const io::Workspace& w) { return names(w.indexed_diagrams); })
        .def("dump", &io::dump)
        .def("save", &io::save, py::arg("path"))
        .def("__repr__", [](const io::Workspace& w) {
            return "<Workspace " + std::to_string(w.ssets.size()) + " ssets, " +
                   std::to_string(w.categories.size()) + " categories, " +
                   std::to_string(w.bounded_diagrams.size() + w.indexed_diagrams.size()) + " diagrams>";
        });

    m.def("load", py::overload_cast<const std::vector<std::string>&>(&io::load), py::arg("paths"),
          "Merge workspace files; a name may repeat only with identical content.");
    m.def("parse", &io::parse, py::arg("text"), py::arg("source") = "<input>");
    m.def(
        "generate",
        [](const std::string& family, uint64_t seed, int max_objects, int max_dim, const std::string& value_cat) {
            io::GenSpec g;
            g.family = family;
            g.seed = seed;
            g.max_objects = max_objects;
            g.max_dim = max_dim;
            g.tag = io::parse_tag(value_cat);
            return io::generate(g);
        },
        py::arg("family"), py::arg("seed") = 1, py::arg("max_objects") = 5, py::arg("max_dim") = 3,
        py::arg("value_cat") = "chain:f2");
    m.attr("families") = io::gen_families();

    m.def(
        "homology",
        [](const io::Workspace& w, const std::string& name, uint32_t p) {
            return trimmed(homology(*entity(w.ssets, name, "simplicial set"), p));
        },
        py::arg("workspace"), py::arg("name") = "", py::arg("p") = 2);
    m.def(
        "nerve_homology",
        [](const io::Workspace& w, const std::string& name, uint32_t p) {
            return trimmed(homology(*nerve(entity(w.categories, name, "category")).space, p));
        },
        py::arg("workspace"), py::arg("name") = "", py::arg("p") = 2);
    m.def("colim", &colim_betti, py::arg("workspace"), py::arg("name"),
          "Betti numbers of the colimit of a bounded or indexed diagram.");
    m.def("ocolim", &ocolim_betti, py::arg("workspace"), py::arg("name") = "");
    m.def("hocolim", &hocolim_betti, py::arg("workspace"), py::arg("name") = "");
    m.def(
        "verify_thomason",
        [](const io::Workspace& w, const std::string& name, uint32_t p) {
            return verify_thomason_nerves(entity(w.cat_diagrams, name, "category diagram").diagram, p);
        },
        py::arg("workspace"), py::arg("name") = "", py::arg("p") = 2);
    m.def("suite", &suite, py::arg("name"), py::arg("seed") = 1, py::arg("instances") = 0, py::arg("p") = 2,
          "Run a generated property suite and return its report.");
}
