#pragma once

// JSON rendering of the core data types.  Ordering is deterministic: maps
// iterate in canonical index order and nlohmann::ordered_json preserves
// insertion order.

#include "tqschur/qschur.hpp"
#include "tqschur/repr.hpp"

#include <json.hpp>

namespace tqs {

using Json = nlohmann::ordered_json;

inline Json to_json(const SuperMatrixIndex& a) {
    Json even = Json::array(), odd = Json::array();
    for (int i = 0; i < a.n; ++i) {
        Json re = Json::array(), ro = Json::array();
        for (int j = 0; j < a.n; ++j) {
            re.push_back(a.e(i, j));
            ro.push_back(a.o(i, j));
        }
        even.push_back(std::move(re));
        odd.push_back(std::move(ro));
    }
    return Json{{"even", std::move(even)}, {"odd", std::move(odd)}};
}

inline Json to_json(const AlgebraElement& x) {
    Json out = Json::array();
    for (auto& [a, c] : x.terms())
        out.push_back(Json{{"index", to_json(a)}, {"coeff", c.str()}});
    return out;
}

inline Json to_json(const DecompositionCertificate& cert) {
    Json summands = Json::array();
    for (auto& sm : cert.summands) {
        Json s{{"seed", to_json(sm.seed)},
               {"dim", sm.span.dim()},
               {"hw_dim", sm.hw_dim},
               {"parity", sm.parity}};
        if (cert.r == 1) s["eigen"] = sm.eigen;
        summands.push_back(std::move(s));
    }
    return Json{{"mu", cert.mu},
                {"r", cert.r},
                {"summands", std::move(summands)},
                {"direct_sum", cert.direct_sum},
                {"checks",
                 Json{{"counts_ok", cert.counts_ok},
                      {"closed", cert.closed},
                      {"hw_ok", cert.hw_ok},
                      {"sampling_ok", cert.sampling_ok},
                      {"failures", cert.failures}}},
                {"seed", cert.seed}};
}

inline Json to_json(const CheckReport& rep) {
    return Json{{"checks", rep.checks}, {"failures", rep.failures}, {"ok", rep.ok()}};
}

}  // namespace tqs
