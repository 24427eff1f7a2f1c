#include "beilab/invariants.hpp"

#include <json.hpp>

#include <sstream>

#include "beilab/domination.hpp"
#include "beilab/structure.hpp"

namespace beilab {

InvariantReport compute_invariants(const Graph& g, VMode mode) {
    InvariantReport r;
    r.n = g.n;
    for (auto [u, v] : g.edges) r.edges.emplace_back(u + 1, v + 1);
    r.connected = is_connected(g);
    r.closed = is_closed_labeling(g).closed;

    VNumberReport vn = v_number(g);
    r.v = vn.v;
    if (r.connected) {
        r.v_at_kn = mode == VMode::combinatorial ? dc_min(g) : v_local_at_Kn(g, mode);
        DominationResult dom = gamma_c(g);
        r.gamma_c = dom.gamma_c;
        r.lf_max = dom.lf_max;
    }
    r.theta = theta_clique_cover(g).first;
    r.ell = longest_induced_path(g);
    if (r.closed && g.edge_count() > 0) r.im_initial = induced_matching_number(initial_graph(g));
    // the zero ideal has no associated primes; its v is 0 by the alpha(0)
    // convention and the initial side is empty as well
    r.v_init = g.edge_count() == 0 ? 0 : v_monomial(initial_ideal(g));
    if (vn.achieving_prime) {
        InvariantReport::Prime p;
        vn.achieving_prime->s.for_each([&](int v) { p.s.push_back(v + 1); });
        for (const BitSet& comp : vn.achieving_prime->components) {
            std::vector<int> verts;
            comp.for_each([&](int v) { verts.push_back(v + 1); });
            p.components.push_back(std::move(verts));
        }
        r.achieving_prime = std::move(p);
    }
    return r;
}

std::string report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : r.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["connected"] = r.connected;
    j["closed"] = r.closed;
    j["v"] = r.v;
    j["v_at_Kn"] = r.v_at_kn ? nlohmann::ordered_json(*r.v_at_kn) : nullptr;
    j["gamma_c"] = r.gamma_c ? nlohmann::ordered_json(*r.gamma_c) : nullptr;
    j["theta"] = r.theta;
    j["ell"] = r.ell;
    j["im_initial"] = r.im_initial ? nlohmann::ordered_json(*r.im_initial) : nullptr;
    j["v_init"] = r.v_init;
    j["lf_max"] = r.lf_max ? nlohmann::ordered_json(*r.lf_max) : nullptr;
    if (r.achieving_prime) {
        nlohmann::ordered_json p;
        p["S"] = r.achieving_prime->s;
        p["components"] = r.achieving_prime->components;
        j["achieving_prime"] = std::move(p);
    } else {
        j["achieving_prime"] = nullptr;
    }
    return j.dump(2);
}

namespace {

std::string opt_str(const std::optional<int>& o) { return o ? std::to_string(*o) : "-"; }

}  // namespace

std::string report_to_text(const InvariantReport& r) {
    std::ostringstream out;
    out << "n          = " << r.n << '\n';
    out << "edges      = ";
    for (size_t i = 0; i < r.edges.size(); ++i) {
        if (i) out << ' ';
        out << '{' << r.edges[i].first << ',' << r.edges[i].second << '}';
    }
    out << '\n';
    out << "connected  = " << (r.connected ? "yes" : "no") << '\n';
    out << "closed     = " << (r.closed ? "yes" : "no") << '\n';
    out << "v          = " << r.v << '\n';
    out << "v_at_Kn    = " << opt_str(r.v_at_kn) << '\n';
    out << "gamma_c    = " << opt_str(r.gamma_c) << '\n';
    out << "theta      = " << r.theta << '\n';
    out << "ell        = " << r.ell << '\n';
    out << "im_initial = " << opt_str(r.im_initial) << '\n';
    out << "v_init     = " << r.v_init << '\n';
    out << "lf_max     = " << opt_str(r.lf_max) << '\n';
    out << "achieving prime: ";
    if (r.achieving_prime) {
        out << "S={";
        for (size_t i = 0; i < r.achieving_prime->s.size(); ++i) {
            if (i) out << ',';
            out << r.achieving_prime->s[i];
        }
        out << "} components=";
        for (const auto& comp : r.achieving_prime->components) {
            out << '{';
            for (size_t i = 0; i < comp.size(); ++i) {
                if (i) out << ',';
                out << comp[i];
            }
            out << '}';
        }
    } else {
        out << "-";
    }
    out << '\n';
    return out.str();
}

}  // namespace beilab
