#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "addspan/cli.hpp"
#include "addspan/error.hpp"
#include "addspan/io.hpp"
#include "addspan/report.hpp"

namespace py = pybind11;
using namespace addspan;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GSet make_set(const std::string& group, const std::vector<std::vector<std::int64_t>>& elements) {
    GroupSpec spec = parse_group_spec(group);
    std::vector<Element> raw;
    raw.reserve(elements.size());
    for (const auto& e : elements) raw.emplace_back(e);
    return GSet(std::move(spec), std::move(raw));
}

SearchMode mode_of(const std::string& s) {
    if (s == "greedy") return SearchMode::Greedy;
    if (s == "exact") return SearchMode::Exact;
    throw PreconditionError("mode must be 'greedy' or 'exact'");
}

}  // namespace

PYBIND11_MODULE(_addspan, m) {
    m.doc() = "Dissociated spans, Bourgain peeling and Fourier certificates";

    py::register_exception<Error>(m, "Error");

    py::class_<GSet>(m, "Set")
        .def(py::init(&make_set), py::arg("group"), py::arg("elements"))
        .def_property_readonly("group", [](const GSet& a) { return a.spec().to_string(); })
        .def_property_readonly("elements",
                               [](const GSet& a) {
                                   std::vector<std::vector<std::int64_t>> out;
                                   for (const auto& e : a) out.push_back(e.coords);
                                   return out;
                               })
        .def("__len__", &GSet::size)
        .def("__eq__", [](const GSet& a, const GSet& b) { return a == b; })
        .def("serialize", &serialize_set_file)
        .def("__repr__", [](const GSet& a) { return "<addspan.Set " + a.spec().to_string() + " |A|=" + std::to_string(a.size()) + ">"; });

    m.def("parse_set_file", [](const std::string& text, bool dedupe) { return parse_set_file(text, {dedupe}); },
          py::arg("text"), py::arg("dedupe") = false);
    m.def("generate", &generate, py::arg("kind"), py::arg("params"), py::arg("seed") = 0);

    m.def("sumset", &sumset);
    m.def("additive_energy", [](const GSet& a) { return to_python(to_json(additive_energy(a))); });
    m.def("doubling", [](const GSet& a) {
        const Rational k = doubling(a);
        return py::make_tuple(k.numerator(), k.denominator());
    });

    m.def(
        "is_dissociated",
        [](const GSet& l, const std::string& strategy) {
            DissociationStrategy s = DissociationStrategy::Auto;
            if (strategy == "brute") s = DissociationStrategy::Brute;
            else if (strategy == "mitm") s = DissociationStrategy::Mitm;
            else if (strategy != "auto") throw PreconditionError("strategy must be auto, brute or mitm");
            return to_python(to_json(is_dissociated(l, s)));
        },
        py::arg("l"), py::arg("strategy") = "auto");
    m.def("max_dissociated_greedy", [](const GSet& a) { return max_dissociated_greedy(a); });
    m.def("span_contains", [](const GSet& l, const std::vector<std::int64_t>& x) -> py::object {
        auto sv = span_contains(l, Element(x));
        if (!sv) return py::none();
        return py::cast(sv->signs);
    });
    m.def("span_intersect", [](const GSet& l, const GSet& a) { return span_intersect(l, a); });

    m.def(
        "bourgain_peel",
        [](const GSet& a, std::size_t l, const std::string& mode) {
            return to_python(to_json(bourgain_peel(a, l, mode_of(mode))));
        },
        py::arg("a"), py::arg("l"), py::arg("mode") = "greedy");

    m.def(
        "energy_structure",
        [](const GSet& a, double l_const, bool adaptive, const std::string& mode) {
            EnergyStructureOptions opts;
            opts.l_const = l_const;
            opts.adaptive = adaptive;
            opts.mode = mode_of(mode);
            return to_python(to_json(energy_structure(a, opts)));
        },
        py::arg("a"), py::arg("l_const") = 1.0, py::arg("adaptive") = true, py::arg("mode") = "greedy");
    m.def("cover_structure", [](const GSet& a) { return to_python(to_json(cover_structure(a))); });
    m.def("thm2_chain_check",
          [](const GSet& a, double p_prime) { return to_python(to_json(thm2_chain_check(a, p_prime))); });

    m.def("energy_via_l4", [](const GSet& a) { return energy_via_l4(a); });
    m.def("rudin_probe", [](const GSet& l, double p, std::int64_t trials, std::uint64_t seed) {
        return to_python(to_json(rudin_probe(l, p, trials, seed)));
    });
    m.def("embed_to_torus", [](const GSet& a, std::int64_t headroom) {
        const auto emb = embed_to_torus(a, headroom);
        return py::make_tuple(emb.image, to_python(to_json(emb)));
    }, py::arg("a"), py::arg("headroom") = 1);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_subcommand(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
