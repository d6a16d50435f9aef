#include "ampwick/diagnostics.hpp"

#include <algorithm>
#include <set>

namespace ampwick {

namespace {

LabelPair pair_of(int a, int b) { return a < b ? LabelPair{a, b} : LabelPair{b, a}; }

LabelPair edge_pair(const LabeledTree& t, int child) {
    return pair_of(t.label(t.base.parent(child)), t.label(child));
}

// Edges grouped by depth of the child vertex, each group in BFS parent order.
std::vector<std::vector<int>> edges_by_depth(const UnlabeledTree& t) {
    std::vector<std::vector<int>> g(static_cast<std::size_t>(t.height() + 1));
    for (int v : t.bfs_order())
        if (v != 0) g[static_cast<std::size_t>(t.depth(v))].push_back(v);
    return g;
}

struct Walk {
    std::vector<EdgeClass> cls;  // indexed by child vertex
    std::vector<int> partner;    // T2 child -> its T1 child
};

Walk walk_root_first(const LabeledTree& t) {
    const int n = t.base.size();
    Walk w{std::vector<EdgeClass>(static_cast<std::size_t>(n), EdgeClass::T3), std::vector<int>(static_cast<std::size_t>(n), -1)};
    std::set<int> seen{t.root_label()};
    std::map<LabelPair, std::vector<int>> occ;
    for (const auto& group : edges_by_depth(t.base)) {
        for (int v : group) {
            LabelPair p = edge_pair(t, v);
            auto& list = occ[p];
            if (!seen.count(t.label(v))) {
                w.cls[static_cast<std::size_t>(v)] = EdgeClass::T1;
                seen.insert(t.label(v));
            } else if (list.size() == 1 && w.cls[static_cast<std::size_t>(list[0])] == EdgeClass::T1) {
                w.cls[static_cast<std::size_t>(v)] = EdgeClass::T2;
                w.partner[static_cast<std::size_t>(v)] = list[0];
            }
            list.push_back(v);
        }
    }
    return w;
}

std::vector<int> sorted(std::set<int> s) { return {s.begin(), s.end()}; }

}  // namespace

const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::T1: return "T1";
        case EdgeClass::T2: return "T2";
        default: return "T3";
    }
}

std::vector<int> standard_ordering(const UnlabeledTree& t) {
    std::vector<int> out;
    auto g = edges_by_depth(t);
    for (auto it = g.rbegin(); it != g.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
}

std::vector<EdgeClass> classify_edges(const LabeledTree& t) {
    Walk w = walk_root_first(t);
    std::vector<EdgeClass> out;
    for (int v : standard_ordering(t.base)) out.push_back(w.cls[static_cast<std::size_t>(v)]);
    return out;
}

Rational excess(const LabeledTree& t) {
    std::set<int> distinct(t.labels.begin(), t.labels.end());
    Rational d(t.base.edge_count() - 2 * (static_cast<long>(distinct.size()) - 1), 2);
    d.canonicalize();
    return d;
}

bool assumption_filter(const LabeledTree& t) {
    std::map<LabelPair, int> b;
    for (int v = 1; v < t.base.size(); ++v) ++b[edge_pair(t, v)];
    for (const auto& [p, c] : b)
        if (c < 2) return false;
    return true;
}

int count_bad_pairs(const LabeledTree& t) {
    Walk w = walk_root_first(t);
    int bad = 0;
    for (int v = 1; v < t.base.size(); ++v) {
        int u = w.partner[static_cast<std::size_t>(v)];
        if (u >= 0 && t.base.depth(u) != t.base.depth(v)) ++bad;
    }
    return bad;
}

BadSubtree bad_subtree(const LabeledTree& t) {
    const UnlabeledTree& b = t.base;
    const int n = b.size();
    std::map<int, int> count;
    for (int l : t.labels) ++count[l];
    Walk w = walk_root_first(t);

    std::set<int> bad;
    for (int v = 0; v < n; ++v)
        if (count[t.label(v)] >= 3) bad.insert(v);
    for (int v = 1; v < n; ++v) {
        if (w.cls[static_cast<std::size_t>(v)] == EdgeClass::T3) {
            bad.insert(v);
            bad.insert(b.parent(v));
        }
        if (t.label(v) == t.root_label()) bad.insert(v);
    }
    // Label closure.
    std::set<int> bad_labels;
    for (int v : bad) bad_labels.insert(t.label(v));
    for (int v = 0; v < n; ++v)
        if (bad_labels.count(t.label(v))) bad.insert(v);

    BadSubtree out;
    out.bad_vertices = sorted(bad);
    if (bad.empty()) return out;

    std::set<int> branch;
    for (int v : bad)
        for (int u = v; u >= 0; u = b.parent(u)) branch.insert(u);
    std::set<int> branch_labels;
    for (int v : branch) branch_labels.insert(t.label(v));
    for (int v = 0; v < n; ++v)
        if (branch_labels.count(t.label(v))) branch.insert(v);
    out.branch_vertices = sorted(branch);

    std::set<int> boundary;
    for (int v = 1; v < n; ++v) {
        int p = b.parent(v);
        bool in_v = branch.count(v), in_p = branch.count(p);
        if (in_v && in_p) out.branch_edges.push_back({p, v});
        else if (in_v || in_p) {
            out.boundary_edges.push_back({p, v});
            boundary.insert(in_p ? v : p);
        }
    }
    out.boundary_vertices = sorted(boundary);
    std::map<int, std::vector<int>> by_label;
    for (int v : boundary) by_label[t.label(v)].push_back(v);
    for (const auto& [l, vs] : by_label)
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) out.boundary_pairs.push_back({vs[i], vs[j]});
    return out;
}

int TreeDiagnostics::count(EdgeClass c) const {
    return static_cast<int>(std::count(edge_classes.begin(), edge_classes.end(), c));
}

TreeDiagnostics diagnose(const LabeledTree& t) {
    TreeDiagnostics d;
    d.excess = excess(t);
    d.edge_order = standard_ordering(t.base);
    d.edge_classes = classify_edges(t);
    for (int l : t.labels) ++d.label_multiplicities[l];
    for (int v = 1; v < t.base.size(); ++v) {
        ++d.edge_multiplicities[edge_pair(t, v)];
        if (t.label(v) == t.root_label()) ++d.root_extra;
    }
    d.bad_pairs = count_bad_pairs(t);
    d.passes_filter = assumption_filter(t);
    d.bad = bad_subtree(t);
    return d;
}

}  // namespace ampwick
