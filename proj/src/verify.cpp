#include "beilab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "beilab/bei.hpp"
#include "beilab/catalog.hpp"
#include "beilab/corpus.hpp"
#include "beilab/domination.hpp"
#include "beilab/errors.hpp"
#include "beilab/parallel.hpp"
#include "beilab/structure.hpp"

namespace beilab {

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n << " edges=";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i) out << ' ';
        out << '{' << g.edges[i].first + 1 << ',' << g.edges[i].second + 1 << '}';
    }
    return out.str();
}

int max_leaf_count_oracle(const Graph& g) {
    int n = g.n;
    int m = g.edge_count();
    if (n < 2) return 0;
    int best = -1;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == n - 1) {
            std::vector<std::pair<int, int>> edges;
            for (int e : pick) edges.push_back(g.edges[static_cast<size_t>(e)]);
            Graph tree = Graph::build0(n, edges);
            if (!is_connected(tree)) return;
            int leaves = 0;
            for (int v = 0; v < n; ++v)
                if (tree.degree(v) == 1) ++leaves;
            best = std::max(best, leaves);
            return;
        }
        int need = n - 1 - static_cast<int>(pick.size());
        for (int e = from; e <= m - need; ++e) {
            pick.push_back(e);
            rec(e + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

namespace {

struct ItemOutcome {
    bool pass = true;
    std::string detail;
};

// Runs fn over items in parallel; reports the first failing item.
template <typename Item, typename Fn>
CheckResult run_items(const std::string& name, const std::vector<Item>& items, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ItemOutcome> outcomes(items.size());
    parallel_for(items.size(), [&](size_t i) { outcomes[i] = fn(items[i]); });
    CheckResult res;
    res.name = name;
    res.cases = static_cast<long>(items.size());
    res.pass = true;
    for (const auto& o : outcomes)
        if (!o.pass) {
            res.pass = false;
            res.detail = o.detail;
            break;
        }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<Graph> classes_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : connected_graphs_up_to_iso(n)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> with_relabelings(const std::vector<Graph>& graphs, int copies, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (const Graph& g : graphs) {
        out.push_back(g);
        for (int c = 0; c < copies; ++c) out.push_back(permuted(g, random_permutation(g.n, rng)));
    }
    return out;
}

ItemOutcome check_graph(bool ok, const Graph& g, const std::string& what) {
    ItemOutcome o;
    if (!ok) {
        o.pass = false;
        o.detail = what + " on " + edge_list_string(g);
    }
    return o;
}

// ---- individual checks ----

CheckResult check_main_theorem(const VerifyOptions& opts) {
    int cap = opts.n_cap.value_or(6);
    std::vector<Graph> items = with_relabelings(classes_up_to(std::min(cap, 5)), 2, opts.seed);
    if (cap >= 6) {
        std::mt19937_64 rng(opts.seed + 1);
        for (int k = 0; k < 50; ++k) items.push_back(random_connected_graph(6, rng));
    }
    return run_items("main-theorem", items, [](const Graph& g) {
        try {
            v_local_at_Kn(g, VMode::both);
            return ItemOutcome{};
        } catch (const theorem_violation& e) {
            return check_graph(false, g, e.what());
        }
    });
}

std::vector<Graph> colon_corpus(const VerifyOptions& opts) {
    int cap = opts.n_cap.value_or(5);
    std::vector<Graph> items;
    for (int n = 2; n <= std::min(cap, 4); ++n)
        for (Graph& g : labeled_connected_graphs(n))
            if (!g.is_complete()) items.push_back(std::move(g));
    if (cap >= 5) {
        std::mt19937_64 rng(opts.seed + 2);
        int added = 0;
        while (added < 25) {
            Graph g = random_connected_graph(5, rng);
            if (g.is_complete()) continue;
            items.push_back(std::move(g));
            ++added;
        }
    }
    return items;
}

CheckResult check_colon_single_edge(const VerifyOptions& opts) {
    return run_items("colon-single-edge", colon_corpus(opts), [](const Graph& g) {
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j) {
                if (g.has_edge(i, j)) continue;
                if (!colon_single_edge_check(g, i, j))
                    return check_graph(false, g,
                                       "colon by the minor of {" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + "} mismatch");
            }
        return ItemOutcome{};
    });
}

CheckResult check_colon_formula(const VerifyOptions& opts) {
    return run_items("colon-formula", colon_corpus(opts), [](const Graph& g) {
        return check_graph(colon_formula_check(g), g, "colon formula mismatch");
    });
}

CheckResult check_decomposition(const VerifyOptions& opts) {
    int cap = opts.n_cap.value_or(5);
    std::vector<Graph> items = with_relabelings(classes_up_to(std::min(cap, 5)), 1, opts.seed + 3);
    return run_items("decomposition", items, [](const Graph& g) {
        return check_graph(decomposition_check(g), g, "minimal-prime intersection mismatch");
    });
}

CheckResult check_closed_gb(const VerifyOptions& opts) {
    int cap = std::min(opts.n_cap.value_or(5), 5);
    std::vector<Graph> items;
    for (int n = 1; n <= cap; ++n)
        for (Graph& g : labeled_connected_graphs(n)) items.push_back(std::move(g));
    return run_items("closed-gb", items, [](const Graph& g) {
        bool closed = is_closed_labeling(g).closed;
        bool quad_gb = is_groebner(binomial_edge_ideal(g).generators());
        return check_graph(closed == quad_gb, g,
                           closed ? "closed labeling but natural generators are no basis"
                                  : "quadratic basis but labeling not closed");
    });
}

CheckResult check_duality(const VerifyOptions& opts) {
    int cap = std::min(opts.n_cap.value_or(6), 6);
    std::vector<Graph> items;
    for (int n = 2; n <= cap; ++n)
        for (Graph& g : connected_graphs_up_to_iso(n)) items.push_back(std::move(g));
    return run_items("duality", items, [](const Graph& g) {
        DominationResult dom = gamma_c(g);
        if (dom.lf_max != g.n - dom.gamma_c)
            return check_graph(false, g, "lf_max field out of sync");
        Graph tree = Graph::build0(g.n, dom.tree);
        if (tree.edge_count() != g.n - 1 || !is_connected(tree))
            return check_graph(false, g, "witness is not a spanning tree");
        int oracle = max_leaf_count_oracle(g);
        if (g.is_complete() && g.n == 2) {
            // the 2-vertex tree has two degree-1 endpoints, the one place the
            // leaf identity diverges from the gamma_c >= 1 convention
            return check_graph(oracle == 2 && dom.gamma_c == 1, g, "two-vertex special case");
        }
        int leaves = 0;
        for (int v = 0; v < g.n; ++v)
            if (tree.degree(v) == 1) ++leaves;
        if (leaves != dom.lf_max)
            return check_graph(false, g, "witness tree does not realize lf_max");
        return check_graph(dom.gamma_c == g.n - oracle, g,
                           "gamma_c != n - max leaves (oracle " + std::to_string(oracle) + ")");
    });
}

CheckResult check_dc_equivalence(const VerifyOptions& opts) {
    int cap = opts.n_cap.value_or(7);
    std::vector<Graph> items;
    for (int n = 1; n <= std::min(cap, 5); ++n)
        for (Graph& g : labeled_connected_graphs(n)) items.push_back(std::move(g));
    if (cap >= 6)
        for (Graph& g : connected_graphs_up_to_iso(6)) items.push_back(std::move(g));
    if (cap >= 7) {
        std::mt19937_64 rng(opts.seed + 4);
        for (int k = 0; k < 200; ++k) items.push_back(random_connected_graph(7, rng));
    }
    return run_items("dc-equivalence", items, [](const Graph& g) {
        int brute = -1;
        for (uint64_t mask = 0; mask < (1ull << g.n); ++mask) {
            BitSet b{mask, 0};
            bool dc = dc_membership(g, b);
            bool expected = b.any() ? is_connected_dominating(g, b) : g.is_complete();
            if (dc != expected)
                return check_graph(false, g, "membership mismatch at subset " +
                                                 std::to_string(mask));
            if (dc && (brute < 0 || b.count() < brute)) brute = b.count();
        }
        return check_graph(dc_min(g) == brute, g, "dc_min != brute-force minimum");
    });
}

CheckResult check_additivity(const VerifyOptions& opts) {
    struct Pair {
        Graph a, b;
    };
    std::mt19937_64 rng(opts.seed + 5);
    std::vector<Pair> items;
    for (int k = 0; k < 20; ++k) {
        int n1 = 1 + static_cast<int>(rng() % 4);
        int n2 = 1 + static_cast<int>(rng() % static_cast<uint64_t>(8 - n1 > 3 ? 4 : 8 - n1));
        items.push_back({random_connected_graph(n1, rng), random_connected_graph(n2, rng)});
    }
    return run_items("additivity", items, [](const Pair& p) {
        std::vector<std::pair<int, int>> edges = p.a.edges;
        for (auto [u, v] : p.b.edges) edges.emplace_back(u + p.a.n, v + p.a.n);
        Graph uni = Graph::build0(p.a.n + p.b.n, std::move(edges));
        int direct = v_number_direct(uni).v;
        int split = v_number(p.a).v + v_number(p.b).v;
        int shortcut = v_number(uni).v;
        return check_graph(direct == split && shortcut == split, uni,
                           "additivity mismatch: direct " + std::to_string(direct) + ", sum " +
                               std::to_string(split) + ", componentwise " +
                               std::to_string(shortcut));
    });
}

void compositions_rec(int n, int min_part, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (n == 0) {
        if (cur.size() >= 2) out.push_back(cur);
        return;
    }
    for (int p = min_part; p <= n; ++p) {
        cur.push_back(p);
        compositions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

CheckResult check_multipartite(const VerifyOptions& opts) {
    int cap = std::min(opts.n_cap.value_or(6), 6);
    std::vector<std::vector<int>> items;
    for (int n = 2; n <= cap; ++n) {
        std::vector<int> cur;
        compositions_rec(n, 1, cur, items);
    }
    return run_items("multipartite", items, [](const std::vector<int>& parts) {
        Graph g = complete_multipartite(parts);
        int formula = v_multipartite(parts);
        int algebraic = v_number(g).v;
        ItemOutcome o = check_graph(formula == algebraic, g,
                                    "formula " + std::to_string(formula) + " != algebraic " +
                                        std::to_string(algebraic));
        if (!o.pass) return o;
        // decomposition witness: J_G = J_Kn ∩ (the part primes)
        IdealHandle meet = complete_graph_ideal(ring_for(g));
        for (const IdealHandle& p : multipartite_part_primes(parts))
            meet = ideal_intersection(meet, p);
        return check_graph(ideal_equal(meet, binomial_edge_ideal(g)), g,
                           "part-prime decomposition mismatch");
    });
}

CheckResult check_initial_squarefree(const VerifyOptions& opts) {
    int cap = std::min(opts.n_cap.value_or(5), 5);
    std::vector<Graph> items = with_relabelings(classes_up_to(cap), 1, opts.seed + 6);
    return run_items("initial-squarefree", items, [](const Graph& g) {
        try {
            SquarefreeMonomialIdeal in = initial_ideal(g);
            return check_graph(in.clutter.edges.size() == binomial_edge_ideal(g).gb().size(), g,
                               "initial ideal size mismatch");
        } catch (const std::logic_error& e) {
            return check_graph(false, g, e.what());
        }
    });
}

CheckResult check_im_ell_closed(const VerifyOptions& opts) {
    int cap = std::min(opts.n_cap.value_or(6), 6);
    std::vector<Graph> items;
    for (int n = 2; n <= cap; ++n)
        for (Graph& g : connected_graphs_up_to_iso(n)) {
            ClosednessCertificate cert = find_closed_labeling(g);
            if (cert.closed) items.push_back(permuted(g, *cert.relabeling));
        }
    return run_items("im-ell-closed", items, [](const Graph& g) {
        int im = induced_matching_number(initial_graph(g));
        int ell = longest_induced_path(g);
        return check_graph(im == ell, g,
                           "induced matching of the bipartite double is " + std::to_string(im) +
                               " but the induced path length is " + std::to_string(ell));
    });
}

CheckResult check_v_edge_both_routes(const VerifyOptions& opts) {
    int cap = opts.n_cap.value_or(7);
    std::vector<Graph> items;
    for (int n = 2; n <= std::min(cap, 6); ++n)
        for (Graph& g : connected_graphs_up_to_iso(n))
            if (g.edge_count() > 0) items.push_back(std::move(g));
    if (cap >= 7) {
        std::mt19937_64 rng(opts.seed + 7);
        for (int k = 0; k < 50; ++k) items.push_back(random_connected_graph(7, rng));
    }
    return run_items("v-edge-both-routes", items, [](const Graph& g) {
        try {
            v_edge_ideal_both_routes(g);
            return ItemOutcome{};
        } catch (const theorem_violation& e) {
            return check_graph(false, g, e.what());
        }
    });
}

CheckResult check_vlocal_routes(const VerifyOptions& opts) {
    int cap = std::min(opts.n_cap.value_or(5), 5);
    std::vector<Graph> items = classes_up_to(cap);
    return run_items("vlocal-routes", items, [](const Graph& g) {
        if (g.edge_count() == 0) return ItemOutcome{};
        IdealHandle J = binomial_edge_ideal(g);
        for (const PrimeSpec& p : minimal_primes(g)) {
            int sweep = v_local(g, p);
            int oracle = alpha_quotient(colon_by_ideal(J, p.ideal), J);
            if (sweep != oracle)
                return check_graph(false, g,
                                   "sweep " + std::to_string(sweep) + " != colon oracle " +
                                       std::to_string(oracle));
        }
        return ItemOutcome{};
    });
}

CheckResult check_chain_closed(const VerifyOptions& opts) {
    int cap = std::min(opts.n_cap.value_or(6), 6);
    std::vector<Graph> items;
    for (int n = 2; n <= cap; ++n)
        for (Graph& g : connected_graphs_up_to_iso(n)) {
            ClosednessCertificate cert = find_closed_labeling(g);
            if (cert.closed) items.push_back(permuted(g, *cert.relabeling));
        }
    return run_items("chain-closed", items, [](const Graph& g) {
        ChainResult c = chain_check_closed(g);
        return check_graph(c.pass, g,
                           "chain (v=" + std::to_string(c.v) + ", theta=" + std::to_string(c.theta) +
                               ", v_init=" + std::to_string(c.v_init) +
                               ", ell=" + std::to_string(c.ell) + ") violated");
    });
}

struct NamedCheck {
    const char* name;
    CheckResult (*fn)(const VerifyOptions&);
    bool optional;
};

const NamedCheck kChecks[] = {
    {"main-theorem", check_main_theorem, false},
    {"colon-single-edge", check_colon_single_edge, false},
    {"colon-formula", check_colon_formula, false},
    {"decomposition", check_decomposition, false},
    {"closed-gb", check_closed_gb, false},
    {"duality", check_duality, false},
    {"dc-equivalence", check_dc_equivalence, false},
    {"additivity", check_additivity, false},
    {"multipartite", check_multipartite, false},
    {"initial-squarefree", check_initial_squarefree, false},
    {"im-ell-closed", check_im_ell_closed, false},
    {"v-edge-both-routes", check_v_edge_both_routes, false},
    {"vlocal-routes", check_vlocal_routes, false},
    // reported on request only: the strict v < theta leg has genuine
    // counterexamples (see the closed8 worked example), so this is a survey,
    // not a regression gate
    {"chain-closed", check_chain_closed, true},
};

}  // namespace

std::vector<std::string> verify_check_names(bool include_optional) {
    std::vector<std::string> names;
    for (const auto& c : kChecks)
        if (include_optional || !c.optional) names.emplace_back(c.name);
    return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    for (const auto& c : kChecks) {
        if (opts.only) {
            if (*opts.only != c.name) continue;
        } else if (c.optional && !opts.include_chain) {
            continue;
        }
        out.push_back(c.fn(opts));
    }
    return out;
}

}  // namespace beilab
