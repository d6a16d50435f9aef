#include "ampwick/labeling.hpp"

#include <stdexcept>

#include "ampwick/errors.hpp"

namespace ampwick {

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x) {
    const int n = a.size();
    if (static_cast<int>(x.size()) != n) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const double* r = a.row(i);
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += r[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

void enumerate_labelings(const UnlabeledTree& t, int N, int root_label,
                         const std::function<void(const LabeledTree&)>& visit) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    std::vector<int> order = t.bfs_order();
    LabeledTree lt{t, std::vector<int>(static_cast<std::size_t>(t.size()), 0)};
    lt.labels[0] = root_label;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            visit(lt);
            return;
        }
        int v = order[k];
        int p = t.parent(v);
        int forbidden = p > 0 ? lt.labels[static_cast<std::size_t>(t.parent(p))] : 0;
        for (int l = 1; l <= N; ++l) {
            if (l == forbidden) continue;
            lt.labels[static_cast<std::size_t>(v)] = l;
            self(self, k + 1);
        }
    };
    rec(rec, 1);
}

std::vector<LabeledTree> labelings(const UnlabeledTree& t, int N, int root_label) {
    std::vector<LabeledTree> out;
    enumerate_labelings(t, N, root_label, [&](const LabeledTree& l) { out.push_back(l); });
    return out;
}

double val(const LabeledTree& t, const Matrix& A, const std::vector<double>& x0) {
    const int n = A.size();
    for (int l : t.labels)
        if (l < 1 || l > n) throw DimensionMismatch("label " + std::to_string(l) + " exceeds matrix size");
    if (static_cast<int>(x0.size()) < n) throw DimensionMismatch("x0 shorter than matrix");
    double v = 1.0;
    for (int u = 0; u < t.base.size(); ++u) {
        v *= t.base.coeff(u).to_double();
        if (u > 0) v *= A(t.label(t.base.parent(u)) - 1, t.label(u) - 1);
        if (t.base.carries_initial(u)) v *= x0[static_cast<std::size_t>(t.label(u) - 1)];
    }
    return v;
}

double val_forest(const std::vector<LabeledTree>& forest, const Matrix& A, const std::vector<double>& x0) {
    double v = 1.0;
    for (const auto& t : forest) v *= val(t, A, x0);
    return v;
}

std::vector<LabeledTree> cut_forest(const LabeledTree& t, const std::vector<bool>& in_s) {
    const UnlabeledTree& b = t.base;
    if (!in_s.at(0)) throw std::invalid_argument("cut subtree must contain the root");
    std::vector<LabeledTree> out;

    LabeledTree s{UnlabeledTree(), {t.root_label()}};
    std::vector<bool> flags{b.carries_initial(0)};
    s.base.set_coeff(0, b.coeff(0));
    std::vector<std::pair<int, int>> queue{{0, 0}};
    std::vector<int> cut_edges;
    for (std::size_t k = 0; k < queue.size(); ++k) {
        auto [u, su] = queue[k];
        for (int c : b.children(u)) {
            if (!in_s[static_cast<std::size_t>(c)]) {
                cut_edges.push_back(c);
                continue;
            }
            queue.push_back({c, s.base.add_child(su, b.coeff(c))});
            s.labels.push_back(t.label(c));
            flags.push_back(b.carries_initial(c));
        }
    }
    s.base.set_initial_flags(flags);
    out.push_back(std::move(s));

    for (int c : cut_edges) {
        LabeledTree piece{UnlabeledTree(), {t.label(b.parent(c))}};
        std::vector<bool> f{false};
        std::vector<std::pair<int, int>> q{{c, piece.base.add_child(0, b.coeff(c))}};
        piece.labels.push_back(t.label(c));
        f.push_back(b.carries_initial(c));
        for (std::size_t k = 0; k < q.size(); ++k) {
            auto [u, pu] = q[k];
            for (int ch : b.children(u)) {
                q.push_back({ch, piece.base.add_child(pu, b.coeff(ch))});
                piece.labels.push_back(t.label(ch));
                f.push_back(b.carries_initial(ch));
            }
        }
        piece.base.set_initial_flags(f);
        out.push_back(std::move(piece));
    }
    return out;
}

double labeled_sum(const UnlabeledTree& t, const Matrix& A, const std::vector<double>& x0, int root_label) {
    const int n = A.size();
    if (root_label < 1 || root_label > n) throw DimensionMismatch("root label exceeds matrix size");
    if (static_cast<int>(x0.size()) < n) throw DimensionMismatch("x0 shorter than matrix");
    const auto N = static_cast<std::size_t>(n);
    const int r = root_label - 1;

    // For a non-root vertex v: g_v(a; p) is the labeled sum of the subtree at v
    // given label a at v and label p at its parent.  Childless vertices do not
    // depend on p and are stored as a vector.
    std::vector<std::vector<double>> table(static_cast<std::size_t>(t.size()));
    std::vector<bool> flat(static_cast<std::size_t>(t.size()), false);
    auto g = [&](int v, int a, int p) {
        const auto& tb = table[static_cast<std::size_t>(v)];
        return flat[static_cast<std::size_t>(v)] ? tb[static_cast<std::size_t>(a)]
                                                 : tb[static_cast<std::size_t>(a) * N + static_cast<std::size_t>(p)];
    };
    auto weight = [&](int v, int a) {
        double w = t.coeff(v).to_double();
        if (t.carries_initial(v)) w *= x0[static_cast<std::size_t>(a)];
        return w;
    };
    // h_c(a) = sum_b A_ab g_c(b; a)
    auto h = [&](int c) {
        std::vector<double> out(N, 0.0);
        if (flat[static_cast<std::size_t>(c)]) return multiply(A, table[static_cast<std::size_t>(c)]);
        for (int a = 0; a < n; ++a) {
            const double* row = A.row(a);
            double s = 0.0;
            for (int b = 0; b < n; ++b) s += row[b] * g(c, b, a);
            out[static_cast<std::size_t>(a)] = s;
        }
        return out;
    };

    std::vector<int> order = t.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (v == 0) break;
        auto& tb = table[static_cast<std::size_t>(v)];
        if (t.is_leaf(v)) {
            flat[static_cast<std::size_t>(v)] = true;
            tb.resize(N);
            for (int a = 0; a < n; ++a) tb[static_cast<std::size_t>(a)] = weight(v, a);
            continue;
        }
        tb.assign(N * N, 0.0);
        for (int a = 0; a < n; ++a) {
            double w = weight(v, a);
            for (int p = 0; p < n; ++p) tb[static_cast<std::size_t>(a) * N + static_cast<std::size_t>(p)] = w;
        }
        for (int c : t.children(v)) {
            std::vector<double> hc = h(c);
            for (int a = 0; a < n; ++a) {
                const double* row = A.row(a);
                double* out = tb.data() + static_cast<std::size_t>(a) * N;
                for (int p = 0; p < n; ++p) out[p] *= hc[static_cast<std::size_t>(a)] - row[p] * g(c, p, a);
            }
        }
        for (int c : t.children(v)) {
            table[static_cast<std::size_t>(c)].clear();
            table[static_cast<std::size_t>(c)].shrink_to_fit();
        }
    }
    double total = weight(0, r);
    for (int c : t.children(0)) {
        const double* row = A.row(r);
        double s = 0.0;
        for (int b = 0; b < n; ++b) s += row[b] * g(c, b, r);
        total *= s;
    }
    return total;
}

}  // namespace ampwick
