#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polsyz/report.hpp"

namespace py = pybind11;
using namespace polsyz;

namespace {

RunConfig config(int max_walk_len, int degree_bound, std::uint64_t seed, const std::string& module) {
    RunConfig cfg;
    cfg.max_walk_len = max_walk_len;
    cfg.degree_bound = degree_bound;
    cfg.seed = seed;
    if (module != "Z" && module != "P") throw std::invalid_argument("module must be Z or P");
    cfg.module = module[0];
    return cfg;
}

template <Json (*Doc)(const MonomialSet&, const RunConfig&)>
std::string run(const std::string& text, int max_walk_len, int degree_bound, std::uint64_t seed,
                const std::string& module) {
    return Doc(parse_monomial_set(text), config(max_walk_len, degree_bound, seed, module)).dump();
}

}  // namespace

PYBIND11_MODULE(_polsyz, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IncohesiveError>(m, "IncohesiveError", PyExc_ValueError);
    py::register_exception<InvariantBreach>(m, "InvariantBreach", PyExc_RuntimeError);

    auto doc_args = [] {
        return std::make_tuple(py::arg("text"), py::arg("max_walk_len") = 8, py::arg("degree_bound") = 8,
                               py::arg("seed") = 0, py::arg("module") = "Z");
    };
    auto [a0, a1, a2, a3, a4] = doc_args();
    m.def("analyze", &run<analyze_doc>, a0, a1, a2, a3, a4);
    m.def("walks", &run<walks_doc>, a0, a1, a2, a3, a4);
    m.def("bowties", &run<bowties_doc>, a0, a1, a2, a3, a4);
    m.def("syzygies", &run<syzygies_doc>, a0, a1, a2, a3, a4);
    m.def("oracle", &run<oracle_doc>, a0, a1, a2, a3, a4);
    m.def(
        "pinch", [](const std::string& text, int i, int j) { return pinch_doc(parse_monomial_set(text), i - 1, j - 1).dump(); },
        py::arg("text"), py::arg("i"), py::arg("j"));
    m.def(
        "normalize", [](const std::string& text) { return to_mon(parse_monomial_set(text)); }, py::arg("text"));
    m.def(
        "from_pairs",
        [](int n, const std::vector<std::pair<int, int>>& pairs) {
            std::vector<std::pair<int, int>> p;
            for (auto [i, j] : pairs) {
                if (i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("variable out of range");
                p.emplace_back(i - 1, j - 1);
            }
            return to_mon(make_monomial_set(n, p));
        },
        py::arg("n"), py::arg("pairs"));
}
