#pragma once

// JSON forms of the library types. Rationals serialize as "num/den"
// strings (denominator omitted when 1), polynomials as coefficient arrays
// lowest degree first, spectra as value/multiplicity pairs descending, and
// unreachable distances as null.

#include <json.hpp>

#include "midcube/boundary.hpp"
#include "midcube/doubles.hpp"
#include "midcube/drg.hpp"
#include "midcube/graph.hpp"
#include "midcube/hamilton.hpp"
#include "midcube/metric.hpp"
#include "midcube/polynomial.hpp"
#include "midcube/spectral.hpp"

namespace midcube {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

inline Json to_json(const Spectrum& sp) {
    Json out;
    Json pairs = Json::array();
    for (const auto& [v, m] : sp.pairs)
        pairs.push_back(Json{{"value", to_string(v)}, {"multiplicity", m}});
    out["eigenvalues"] = std::move(pairs);
    out["residual"] = sp.residual ? to_json(*sp.residual) : Json(nullptr);
    return out;
}

inline Json to_json(const Graph& g) {
    Json out;
    out["order"] = g.order();
    out["size"] = g.size();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    out["edges"] = std::move(edges);
    if (g.labels()) {
        Json labels = Json::array();
        for (std::size_t v = 0; v < g.order(); ++v)
            labels.push_back(g.label_string(static_cast<int>(v)));
        out["labels"] = std::move(labels);
    }
    return out;
}

inline Json to_json(const DoubledGraph& d) {
    Json out = to_json(d.graph);
    out["primed_offset"] = d.primed_offset;
    if (!d.origin.empty()) out["origin"] = d.origin;
    return out;
}

inline Json to_json(const IntersectionArray& arr) {
    Json out;
    out["b"] = arr.b;
    out["c"] = arr.c;
    out["notation"] = arr.brace_notation();
    return out;
}

inline Json to_json(const DrgCertificate& cert) {
    Json out;
    out["is_drg"] = cert.is_drg;
    out["array"] = cert.array ? to_json(*cert.array) : Json(nullptr);
    if (cert.witness) {
        out["witness"] = Json{{"u", cert.witness->u},
                              {"v", cert.witness->v},
                              {"level", cert.witness->level},
                              {"detail", cert.witness->detail}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline Json to_json(const AntipodalCertificate& cert) {
    Json out;
    out["is_antipodal"] = cert.is_antipodal;
    out["diameter"] = cert.diameter;
    out["uniform_size"] = cert.uniform_size ? Json(*cert.uniform_size) : Json(nullptr);
    out["cliques"] = cert.cliques;
    return out;
}

inline Json to_json(const BoundaryReport& rep) {
    Json out;
    out["sum"] = to_string(rep.sum);
    out["order"] = rep.order;
    out["is_boundary"] = rep.is_boundary;
    Json pi = Json::array(), phi = Json::array();
    for (const auto& x : rep.products.pi) pi.push_back(to_string(x));
    for (const auto& x : rep.products.phi) phi.push_back(to_string(x));
    out["pi"] = std::move(pi);
    out["phi"] = std::move(phi);
    out["tail_sum"] = to_string(rep.tail_sum);
    return out;
}

inline Json to_json(const DiameterReport& rep) {
    Json out;
    out["source_diameter"] = rep.source_diameter;
    out["double_diameter"] = rep.double_diameter;
    out["bound_holds"] = rep.bound_holds;
    out["equality_holds"] = rep.equality_holds;
    out["certificate_vertex"] =
        rep.certificate_vertex ? Json(*rep.certificate_vertex) : Json(nullptr);
    out["criterion_agrees"] = rep.criterion_agrees;
    return out;
}

inline Json to_json(const HamiltonResult& r) {
    Json out;
    out["status"] = to_string(r.status);
    out["cycle"] = r.cycle;
    out["nodes_expanded"] = r.nodes_expanded;
    return out;
}

}  // namespace midcube
