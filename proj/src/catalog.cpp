#include "beilab/catalog.hpp"

namespace beilab {

namespace {
using E = std::vector<std::pair<int, int>>;
}

Graph cycle_graph(int n) {
    E edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph::build(n, edges);
}

Graph path_graph(int n) {
    E edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph star_graph(int n) {
    E edges;
    for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
    return Graph::build(n, edges);
}

Graph complete_graph(int n) {
    E edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

Graph closed6_example() {
    return Graph::build(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}, {4, 6}});
}

Graph closed8_example() {
    return Graph::build(8, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5},
                            {5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}});
}

Graph nonclosed6_example() {
    return Graph::build(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 6}, {5, 6}});
}

Graph tree10_example() {
    return Graph::build(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {7, 8}, {4, 7}, {4, 9},
                             {9, 10}});
}

std::vector<ExampleExpectation> worked_examples() {
    std::vector<ExampleExpectation> out;
    {
        ExampleExpectation e;
        e.name = "cycle6";
        e.graph = cycle_graph(6);
        e.v = 4;
        e.v_at_kn = 4;
        e.gamma_c = 4;
        e.v_init = 4;
        e.closed = false;
        out.push_back(std::move(e));
    }
    {
        ExampleExpectation e;
        e.name = "cycle7";
        e.graph = cycle_graph(7);
        e.v = 5;
        e.v_at_kn = 5;
        e.gamma_c = 5;
        e.v_init = 5;
        e.closed = false;
        out.push_back(std::move(e));
    }
    {
        ExampleExpectation e;
        e.name = "closed8";
        e.graph = closed8_example();
        e.v = 3;
        e.v_at_kn = 4;
        e.gamma_c = 4;
        // the minimum cover {1,2,3},{4,5},{6,7,8} beats the chain of
        // overlapping intervals, so theta sits below v_init here
        e.theta = 3;
        e.ell = 5;
        e.v_init = 5;
        e.lf_max = 4;
        e.reg_closed = 5;
        e.closed = true;
        out.push_back(std::move(e));
    }
    {
        ExampleExpectation e;
        e.name = "nonclosed6";
        e.graph = nonclosed6_example();
        e.v = 2;
        // no adjacent pair dominates: every 2-set misses one of the five
        // outer vertices, so the domination minimum is 3
        e.v_at_kn = 3;
        e.gamma_c = 3;
        e.v_init = 2;
        e.closed = false;
        out.push_back(std::move(e));
    }
    {
        ExampleExpectation e;
        e.name = "tree10";
        e.graph = tree10_example();
        e.v = 3;
        e.v_at_kn = 6;
        e.gamma_c = 6;
        e.theta = 5;
        e.ell = 5;
        e.v_init = 6;
        e.lf_max = 4;
        e.closed = false;
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<TableEntry>& five_vertex_table() {
    static const std::vector<TableEntry> table = [] {
        std::vector<TableEntry> t;
        auto add = [&](std::string name, E edges, int v, int vi, int reg, bool amb = false) {
            t.push_back({std::move(name), std::move(edges), v, vi, reg, amb});
        };
        add("complete", {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                         {3, 5}, {4, 5}},
            0, 1, 1);
        add("cycle", {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}, 3, 3, 3);
        add("complete-minus-two-disjoint",
            {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 1, 1, 2);
        add("bipartite-2-3", {{1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 2, 2, 2);
        add("two-hubs", {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}, 1, 1, 2);
        add("complete-minus-edge",
            {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 1, 2, 2);
        add("star", {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, 1, 1, 2);
        add("clique-with-pendant", {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 1,
            2, 2);
        add("complete-minus-path",
            {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 1, 2, 2);
        add("chair", {{1, 2}, {1, 3}, {1, 5}, {4, 5}}, 2, 2, 3);
        add("bowtie", {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}, 1, 2, 2);
        // the drawing labels two vertices "4"; this reading replaces the one
        // adjacent to the degree-4 hub and vertex 5
        add("hub-with-tail", {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 1, 2, 3,
            true);
        add("cricket", {{1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 1, 1, 2);
        add("bull", {{1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}, 2, 3, 3);
        add("diamond-pendant-rim", {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}, 2, 3, 3);
        add("diamond-pendant-hub", {{1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, 1, 1, 2);
        add("path", {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 2, 4, 4);
        add("tadpole", {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}, 2, 3, 3);
        add("near-wheel", {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 2, 2, 2);
        add("house", {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}, 2, 2, 3);
        add("banner", {{1, 3}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, 2, 2, 3);
        return t;
    }();
    return table;
}

}  // namespace beilab
