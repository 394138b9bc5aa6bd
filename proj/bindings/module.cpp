// Python bindings for the core operations.  Structured results are
// returned as JSON strings rendered by the same code as the CLI, so both
// front ends emit identical data.

#include "tqschur/hecke_clifford.hpp"
#include "tqschur/json_io.hpp"
#include "tqschur/repr.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace tqs;

namespace {

GeneratorName generator_from(const std::string& tok) {
    auto idx = [&](size_t pos) { return std::stoi(tok.substr(pos)); };
    if (tok.rfind("Kinv", 0) == 0) return gen_Kinv(idx(4));
    if (tok.rfind("Kbar", 0) == 0) return gen_Kbar(idx(4));
    if (tok.rfind("Ebar", 0) == 0) return gen_Ebar(idx(4));
    if (tok.rfind("Fbar", 0) == 0) return gen_Fbar(idx(4));
    if (tok.rfind("K", 0) == 0) return gen_K(idx(1));
    if (tok.rfind("E", 0) == 0) return gen_E(idx(1));
    if (tok.rfind("F", 0) == 0) return gen_F(idx(1));
    throw std::invalid_argument("unknown generator: " + tok);
}

SuperMatrixIndex index_from(const std::vector<std::vector<int>>& even,
                            const std::vector<std::vector<int>>& odd) {
    int n = static_cast<int>(even.size());
    SuperMatrixIndex a = SuperMatrixIndex::zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a.e(i, j) = even[static_cast<size_t>(i)][static_cast<size_t>(j)];
            a.o(i, j) = odd[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return a;
}

}  // namespace

PYBIND11_MODULE(_tqschur, m) {
    m.doc() = "twisted queer q-Schur superalgebra: exact basis actions and certificates";

    m.def("basis_count", [](int n, int r) { return enumerate_basis(n, r).size(); });

    m.def("basis", [](int n, int r) {
        Json rows = Json::array();
        for (auto& a : enumerate_basis(n, r)) rows.push_back(to_json(a));
        return rows.dump();
    });

    m.def(
        "act",
        [](const std::vector<std::string>& word, const std::vector<std::vector<int>>& even,
           const std::vector<std::vector<int>>& odd) {
            SuperMatrixIndex a = index_from(even, odd);
            std::vector<GeneratorName> w;
            for (auto& tok : word) w.push_back(generator_from(tok));
            return to_json(apply_word(w, AlgebraElement::basis(a, a.total()))).dump();
        },
        py::arg("word"), py::arg("even"), py::arg("odd"));

    m.def("check_relations", [](int n, int r) { return to_json(check_relations(n, r)).dump(); });

    m.def(
        "verify_structure",
        [](int n, int r, unsigned seed) { return to_json(verify_structure_props(n, r, seed)).dump(); },
        py::arg("n"), py::arg("r"), py::arg("seed") = 2024u);

    m.def(
        "decompose",
        [](const std::vector<int>& mu, int r, unsigned seed) {
            return to_json(decompose_block(mu, r, seed)).dump();
        },
        py::arg("mu"), py::arg("r"), py::arg("seed") = 2024u);

    m.def(
        "oracle_check",
        [](int n, int r) {
            int mismatches = 0, checked = 0;
            std::vector<GeneratorName> gens;
            for (int i = 1; i <= n; ++i) {
                gens.push_back(gen_K(i));
                gens.push_back(gen_Kinv(i));
            }
            for (int j = 1; j < n; ++j) {
                gens.push_back(gen_E(j));
                gens.push_back(gen_F(j));
            }
            gens.push_back(gen_Kbar(n));
            for (auto& g : gens) {
                AlgebraElement image = generator_image(g, n, r);
                for (auto& a : enumerate_basis(n, r)) {
                    ++checked;
                    if (!(act_generator(g, AlgebraElement::basis(a, r)) == oracle_act(image, a)))
                        ++mismatches;
                }
            }
            return py::make_tuple(checked, mismatches);
        },
        py::arg("n"), py::arg("r"));
}
