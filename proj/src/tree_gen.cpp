#include "ampwick/tree_gen.hpp"

#include <algorithm>
#include <map>

#include "ampwick/diagnostics.hpp"

namespace ampwick {

namespace {

struct Generator {
    int max_degree;
    std::map<int, std::vector<std::string>> by_size;  // size in vertices

    const std::vector<std::string>& trees(int n) {
        auto it = by_size.find(n);
        if (it != by_size.end()) return it->second;
        std::vector<std::string> out;
        if (n == 1) {
            out.push_back("()");
        } else {
            // Multisets of child trees in (size, index) order summing to n - 1.
            std::vector<std::pair<int, int>> pick;
            auto rec = [&](auto&& self, int left, int min_size, int min_idx) -> void {
                if (left == 0) {
                    std::vector<std::string> parts;
                    for (auto [s, i] : pick) parts.push_back(trees(s)[static_cast<std::size_t>(i)]);
                    std::sort(parts.begin(), parts.end());
                    std::string c = "(";
                    for (auto& p : parts) c += p;
                    out.push_back(c + ")");
                    return;
                }
                if (max_degree >= 0 && static_cast<int>(pick.size()) >= max_degree) return;
                for (int s = min_size; s <= left; ++s) {
                    const auto& list = trees(s);
                    for (int i = s == min_size ? min_idx : 0; i < static_cast<int>(list.size()); ++i) {
                        pick.push_back({s, i});
                        self(self, left - s, s, i);
                        pick.pop_back();
                    }
                }
            };
            rec(rec, n - 1, 1, 0);
            std::sort(out.begin(), out.end());
        }
        return by_size[n] = std::move(out);
    }
};

}  // namespace

std::vector<std::string> canonical_trees(int edges, int max_degree) {
    Generator g{max_degree, {}};
    return g.trees(edges + 1);
}

std::vector<std::string> canonical_trees_up_to(int max_edges, int max_degree) {
    Generator g{max_degree, {}};
    std::vector<std::string> out;
    for (int e = 0; e <= max_edges; ++e) {
        const auto& t = g.trees(e + 1);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

UnlabeledTree random_tree(int edges, Rng& rng) {
    UnlabeledTree t;
    for (int k = 1; k <= edges; ++k) {
        std::uniform_int_distribution<int> pick(0, k - 1);
        t.add_child(pick(rng));
    }
    return t;
}

LabeledTree random_valid_labeled_tree(int max_edges, Rng& rng) {
    std::uniform_int_distribution<int> edge_count(2, max_edges);
    std::uniform_int_distribution<int> alphabet(2, 5);
    while (true) {
        UnlabeledTree base = random_tree(edge_count(rng), rng);
        int K = alphabet(rng);
        std::uniform_int_distribution<int> label(1, K);
        LabeledTree t{base, std::vector<int>(static_cast<std::size_t>(base.size()), 1)};
        for (int v = 1; v < base.size(); ++v) t.labels[static_cast<std::size_t>(v)] = label(rng);
        if (is_non_backtracking(t) && !has_self_loop(t) && assumption_filter(t)) return t;
    }
}

}  // namespace ampwick
