#include "ampwick/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "ampwick/diagnostics.hpp"

namespace ampwick {

int IsomorphismClass::block_count() const {
    return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

LabeledTree induced_labeling(const IsomorphismClass& c) {
    LabeledTree t{c.base, {}};
    for (int b : c.block) t.labels.push_back(b + 1);
    return t;
}

Rational excess(const IsomorphismClass& c) { return excess(induced_labeling(c)); }

void enumerate_classes(const UnlabeledTree& t, const std::function<void(const IsomorphismClass&)>& visit,
                       int max_blocks, bool skip_self_loops) {
    if (max_blocks < 0) max_blocks = t.size();
    std::vector<int> order = t.bfs_order();
    IsomorphismClass c{t, std::vector<int>(static_cast<std::size_t>(t.size()), 0)};
    auto rec = [&](auto&& self, std::size_t k, int blocks) -> void {
        if (k == order.size()) {
            visit(c);
            return;
        }
        int v = order[k];
        int p = t.parent(v);
        int forbidden = p > 0 ? c.block[static_cast<std::size_t>(t.parent(p))] : -1;
        for (int b = 0; b <= blocks && b < max_blocks; ++b) {
            if (b == forbidden) continue;
            if (skip_self_loops && b == c.block[static_cast<std::size_t>(p)]) continue;
            c.block[static_cast<std::size_t>(v)] = b;
            self(self, k + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 1, 1);
}

void enumerate_delta_zero_classes(const UnlabeledTree& t,
                                  const std::function<void(const IsomorphismClass&)>& visit) {
    const int edges = t.edge_count();
    if (edges % 2) return;
    const int target = edges / 2 + 1;
    std::vector<int> order = t.bfs_order();
    const int n = t.size();
    IsomorphismClass c{t, std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::map<std::pair<int, int>, int> uses;
    int open = 0;  // pairs used exactly once

    auto rec = [&](auto&& self, int k, int blocks) -> void {
        const int remaining = n - k;
        if (blocks > target || blocks + remaining < target || open > remaining) return;
        if (k == n) {
            if (open == 0 && blocks == target) visit(c);
            return;
        }
        int v = order[static_cast<std::size_t>(k)];
        int p = t.parent(v);
        int pb = c.block[static_cast<std::size_t>(p)];
        int forbidden = p > 0 ? c.block[static_cast<std::size_t>(t.parent(p))] : -1;
        for (int b = 0; b <= blocks && b < target; ++b) {
            if (b == forbidden || b == pb) continue;
            auto key = std::minmax(pb, b);
            int& u = uses[key];
            if (u == 2) continue;
            ++u;
            open += u == 1 ? 1 : -1;
            c.block[static_cast<std::size_t>(v)] = b;
            self(self, k + 1, std::max(blocks, b + 1));
            open -= u == 1 ? 1 : -1;
            --u;
        }
    };
    rec(rec, 1, 1);
}

Integer count_delta_zero_classes(const UnlabeledTree& t) {
    Integer n = 0;
    enumerate_delta_zero_classes(t, [&](const IsomorphismClass&) { ++n; });
    return n;
}

namespace {

// Forest of open (once-used) label pairs.  Blocks 0..roles-1 are the blocks of
// the processed parents and grandparents of unprocessed vertices, numbered by
// first appearance in `slots`.
struct FrontierState {
    std::vector<int> slot_block;
    std::vector<std::pair<int, int>> open;
    int nodes = 0;
};

// Canonical key; empty string marks a dead state (an open pair that no
// unprocessed vertex can reach).
std::string canonical_key(const std::vector<int>& slot_block, const std::vector<std::pair<int, int>>& open) {
    std::map<int, int> role;
    for (int b : slot_block)
        if (!role.count(b)) {
            int id = static_cast<int>(role.size());
            role[b] = id;
        }
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : open) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<int> seen;
    auto enc = [&](auto&& self, int u, int from) -> std::string {
        seen.insert(u);
        std::vector<std::string> parts;
        for (int w : adj[u])
            if (w != from) parts.push_back(self(self, w, u));
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        auto it = role.find(u);
        s += it == role.end() ? std::string(".") : std::to_string(it->second);
        for (auto& p : parts) s += p;
        return s + ")";
    };
    std::vector<std::pair<int, int>> roots(role.begin(), role.end());
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) { return a.second < b.second; });
    std::string key;
    for (int b : slot_block) key += std::to_string(role[b]) + ",";
    key += "|";
    for (auto [b, id] : roots)
        if (!seen.count(b)) key += enc(enc, b, -1);
    for (auto [a, b] : open)
        if (!seen.count(a)) return {};
    return key;
}

FrontierState decode_key(const std::string& key) {
    FrontierState s;
    std::size_t k = 0;
    int roles = 0;
    while (key[k] != '|') {
        std::size_t comma = key.find(',', k);
        int id = std::stoi(key.substr(k, comma - k));
        s.slot_block.push_back(id);
        roles = std::max(roles, id + 1);
        k = comma + 1;
    }
    ++k;
    s.nodes = roles;
    auto parse = [&](auto&& self) -> int {
        ++k;  // '('
        int me;
        if (key[k] == '.') {
            me = s.nodes++;
            ++k;
        } else {
            std::size_t j = k;
            while (std::isdigit(static_cast<unsigned char>(key[j]))) ++j;
            me = std::stoi(key.substr(k, j - k));
            k = j;
        }
        while (key[k] == '(') s.open.push_back({me, self(self)});
        ++k;  // ')'
        return me;
    };
    while (k < key.size()) parse(parse);
    return s;
}

}  // namespace

Integer count_delta_zero_classes_dp(const UnlabeledTree& t) {
    const int n = t.size();
    if (t.edge_count() % 2) return 0;
    std::vector<int> order = t.bfs_order();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

    // slots[i]: processed vertices (BFS position < i) that are the parent or
    // grandparent of some vertex at position >= i.
    std::vector<std::vector<int>> slots(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        auto& s = slots[static_cast<std::size_t>(i)];
        for (int k = i; k < n; ++k) {
            int v = order[static_cast<std::size_t>(k)];
            int p = t.parent(v);
            for (int u : {p, p > 0 ? t.parent(p) : -1})
                if (u >= 0 && pos[static_cast<std::size_t>(u)] < i && std::find(s.begin(), s.end(), u) == s.end())
                    s.push_back(u);
        }
    }

    std::unordered_map<std::string, Integer> layer;
    layer[canonical_key(std::vector<int>(slots[1].size(), 0), {})] = 1;
    for (int i = 1; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        int p = t.parent(v);
        int g = p > 0 ? t.parent(p) : -1;
        const auto& cur = slots[static_cast<std::size_t>(i)];
        const auto& nxt = slots[static_cast<std::size_t>(i) + 1];
        std::unordered_map<std::string, Integer> next;
        for (const auto& [key, count] : layer) {
            FrontierState s = decode_key(key);
            std::map<int, int> blk;
            for (std::size_t k = 0; k < cur.size(); ++k) blk[cur[k]] = s.slot_block[k];
            int P = blk.at(p);
            int G = g >= 0 ? blk.at(g) : -1;

            auto emit = [&](int X, std::vector<std::pair<int, int>> open) {
                std::vector<int> sb;
                for (int u : nxt) sb.push_back(u == v ? X : blk.at(u));
                std::string k2 = canonical_key(sb, open);
                if (!k2.empty()) next[k2] += count;
            };
            // Fresh block: a new pair, used once.
            {
                auto open = s.open;
                open.push_back({P, s.nodes});
                emit(s.nodes, std::move(open));
            }
            // Close an open pair at the parent's block.  Any other reuse of an
            // existing block would either exceed two uses or close a cycle in
            // the (always connected) pair graph.
            for (std::size_t e = 0; e < s.open.size(); ++e) {
                auto [a, b] = s.open[e];
                if (a != P && b != P) continue;
                int X = a == P ? b : a;
                if (X == G) continue;
                auto open = s.open;
                open.erase(open.begin() + static_cast<long>(e));
                emit(X, std::move(open));
            }
        }
        layer = std::move(next);
    }
    Integer total = 0;
    for (const auto& [key, count] : layer) total += count;
    return total;
}

}  // namespace ampwick
