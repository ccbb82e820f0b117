#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace arc {

/**
 * Rooted plane tree indexing a cell of the thrice-punctured monogon
 * complex.  The root is unlabeled; every other node carries a proper
 * nonempty subset of {1,2,3} as a bitmask.  Children are ordered, nodes at
 * equal depth carry pairwise disjoint labels, and each child's label is a
 * proper subset of its parent's.
 */
struct TableauNode {
    int label = 0;
    std::vector<TableauNode> children;
};

using Tableau = TableauNode;  // the root, label 0

inline int tableau_edge_count(const Tableau& t) {
    int edges = 0;
    std::function<void(const TableauNode&)> walk = [&](const TableauNode& n) {
        edges += static_cast<int>(n.children.size());
        for (const auto& c : n.children) walk(c);
    };
    walk(t);
    return edges;
}

inline std::string tableau_key(const TableauNode& n) {
    std::string key = std::to_string(n.label) + "(";
    for (const auto& c : n.children) key += tableau_key(c);
    return key + ")";
}

/**
 * Every tableau over {1,2,3} with at least one edge, grouped by cell
 * dimension (edge count minus one).  The nesting constraints bound the
 * depth, so no cap parameter is needed.
 */
inline std::vector<std::vector<Tableau>> enumerate_tableaux() {
    std::vector<Tableau> all;
    Tableau work;

    // assigns ordered child sequences to level[at..] with labels pairwise
    // disjoint across the level, then descends to the new level
    std::function<void(std::vector<TableauNode*>&, std::size_t, int)> assign =
        [&](std::vector<TableauNode*>& level, std::size_t at, int used) {
            if (at == level.size()) {
                std::vector<TableauNode*> next;
                for (TableauNode* n : level)
                    for (auto& c : n->children) next.push_back(&c);
                if (next.empty())
                    all.push_back(work);
                else
                    assign(next, 0, 0);
                return;
            }
            TableauNode* node = level[at];
            int parent = node->label == 0 ? 7 : node->label;
            std::function<void(int)> pick = [&](int taken) {
                assign(level, at + 1, used | taken);
                int avail = parent & ~(used | taken);
                for (int s = avail; s > 0; s = (s - 1) & avail) {
                    if (s == parent) continue;
                    node->children.push_back(TableauNode{s, {}});
                    pick(taken | s);
                    node->children.pop_back();
                }
            };
            pick(0);
        };

    std::vector<TableauNode*> root{&work};
    assign(root, 0, 0);

    int max_edges = 0;
    for (const auto& t : all) max_edges = std::max(max_edges, tableau_edge_count(t));
    std::vector<std::vector<Tableau>> by_dim(static_cast<std::size_t>(max_edges));
    for (const auto& t : all) {
        int e = tableau_edge_count(t);
        if (e > 0) by_dim[static_cast<std::size_t>(e - 1)].push_back(t);
    }
    return by_dim;
}

namespace detail {

inline int third_of(int i, int j) { return 6 - i - j; }

inline std::string nm(const std::string& family, int a, int b = 0) {
    std::string id = family + std::to_string(a);
    if (b) id += std::to_string(b);
    return id;
}

}  // namespace detail

/**
 * The thrice-punctured monogon complex, cells named after the tableau
 * families: A_k, B_k (vertices), C_ij, D_ij, E_k, F_k (edges), G_ij, H_ij,
 * I_ij, J_ij (faces), K_ij, L_ij (solid cells), with ij ranging over ordered
 * pairs of distinct punctures and k the remaining one.
 */
inline CellComplex build_F013() {
    using detail::nm;
    using detail::third_of;
    CellComplex k;
    k.name = "F013";

    auto add = [&k](const std::string& id, int dim,
                    std::vector<std::pair<std::string, long long>> boundary) {
        k.cells.push_back({id, dim, std::move(boundary), 3});
    };

    for (int a = 1; a <= 3; ++a) {
        add(nm("A", a), 0, {});
        add(nm("B", a), 0, {});
        add(nm("E", a), 1, {{nm("A", a), 1}, {nm("B", a), -1}});
        add(nm("F", a), 1, {{nm("B", a), 1}, {nm("A", a), -1}});
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            int t = third_of(i, j);
            add(nm("C", i, j), 1, {{nm("A", i), 1}, {nm("A", j), -1}});
            add(nm("D", i, j), 1, {{nm("A", j), 1}, {nm("B", t), -1}});
            add(nm("G", i, j), 2,
                {{nm("C", i, j), 1}, {nm("D", j, i), -1}, {nm("D", i, j), 1}});
            add(nm("H", i, j), 2,
                {{nm("D", i, j), 1}, {nm("C", j, t), -1}, {nm("F", t), 1}});
            add(nm("I", i, j), 2,
                {{nm("D", i, j), 1}, {nm("E", t), -1}, {nm("C", t, j), 1}});
            add(nm("J", i, j), 2,
                {{nm("C", i, j), 1}, {nm("C", i, t), -1}, {nm("C", j, t), 1}});
            add(nm("K", i, j), 3,
                {{nm("G", i, j), 1}, {nm("H", i, j), -1}, {nm("H", j, i), 1}, {nm("J", i, j), -1}});
            add(nm("L", i, j), 3,
                {{nm("I", i, j), 1}, {nm("G", i, j), -1}, {nm("J", t, i), 1}, {nm("I", j, i), -1}});
        }
    k.canonicalize();
    return k;
}

}  // namespace arc
