#include "ampwick/spiked.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace ampwick {

int ColoredTree::yellow_edges() const {
    int c = 0;
    for (int v = 1; v < base.size(); ++v) c += color[static_cast<std::size_t>(v)] == EdgeColor::Yellow;
    return c;
}

ColoredTree colored(const ParsedTree& p) {
    ColoredTree t{p.tree, p.colors, 1};
    if (p.labels.at(0)) t.root_label = *p.labels[0];
    return t;
}

ColoredTree all_blue(const UnlabeledTree& t, int root_label) {
    return {t, std::vector<EdgeColor>(static_cast<std::size_t>(t.size()), EdgeColor::Blue), root_label};
}

void SpikeConfig::validate() const {
    if (v_star.empty()) throw std::invalid_argument("v_star is empty");
    double s = 0.0;
    for (double x : v_star) s += x * x;
    if (std::abs(s - N()) > 1e-12 * N()) throw std::invalid_argument("||v_star||^2 must equal N");
}

SpikeConfig SpikeConfig::ones(double lambda, int N) {
    SpikeConfig c;
    c.lambda = lambda;
    c.v_star.assign(static_cast<std::size_t>(N), 1.0);
    return c;
}

namespace {

// Colored canonical form: children "b(...)" / "y(...)", sorted.
std::string colored_canon(const ColoredTree& t, int v) {
    std::vector<std::string> parts;
    for (int c : t.base.children(v))
        parts.push_back((t.color[static_cast<std::size_t>(c)] == EdgeColor::Yellow ? "y" : "b") + colored_canon(t, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    return s + ")";
}

std::vector<std::string> split_children(const std::string& canon) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 1; k + 1 < canon.size(); ++k) {
        char ch = canon[k];
        if (ch == 'b' || ch == 'y') {
            if (depth == 0) start = k;
        } else if (ch == '(') {
            ++depth;
        } else if (--depth == 0) {
            out.push_back(canon.substr(start, k - start + 1));
        }
    }
    return out;
}

std::string assemble(std::vector<std::string> parts) {
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    return s + ")";
}

std::string glue(const std::string& a, const std::string& b) {
    auto ca = split_children(a), cb = split_children(b);
    ca.insert(ca.end(), cb.begin(), cb.end());
    return assemble(ca);
}

int yellow_children(const std::string& canon) {
    int y = 0;
    for (const auto& c : split_children(canon)) y += c[0] == 'y';
    return y;
}

// Wick_S(T)[i] = C(T) * v_i^{y(T)} with y(T) the number of yellow root
// children; C is computed from power sums p_r = sum_j v_j^r.
struct ClosedForm {
    const SpikeConfig& cfg;
    std::vector<double> power;
    std::map<std::string, double> memo;

    double p(int r) {
        while (static_cast<int>(power.size()) <= r) {
            double s = 0.0;
            for (double v : cfg.v_star) s += std::pow(v, static_cast<int>(power.size()));
            power.push_back(s);
        }
        return power[static_cast<std::size_t>(r)];
    }

    double C(const std::string& canon) {
        auto it = memo.find(canon);
        if (it != memo.end()) return it->second;
        auto ch = split_children(canon);
        std::vector<std::string> blue;
        double yellow = 1.0;
        const double n = cfg.N();
        for (const auto& c : ch) {
            std::string sub = c.substr(1);
            if (c[0] == 'b') blue.push_back(sub);
            else yellow *= cfg.lambda * (C(sub) * p(1 + yellow_children(sub)) / n);
        }
        double r = yellow * pairings(blue);
        memo.emplace(canon, r);
        return r;
    }

    double pairings(std::vector<std::string> items) {
        if (items.empty()) return 1.0;
        if (items.size() % 2) return 0.0;
        double total = 0.0;
        std::string first = items[0];
        for (std::size_t j = 1; j < items.size(); ++j) {
            std::string g = glue(first, items[j]);
            double pair = C(g) * p(yellow_children(g)) / cfg.N();
            std::vector<std::string> rest;
            for (std::size_t k = 1; k < items.size(); ++k)
                if (k != j) rest.push_back(items[k]);
            total += pair * pairings(rest);
        }
        return total;
    }
};

// Vector-valued recursion: W(T)[i] for every root label i.
struct Direct {
    const SpikeConfig& cfg;

    std::vector<double> W(const std::string& canon) {
        const auto N = static_cast<std::size_t>(cfg.N());
        auto ch = split_children(canon);
        std::vector<std::string> blue;
        std::vector<double> out(N, 1.0);
        for (const auto& c : ch) {
            std::string sub = c.substr(1);
            if (c[0] == 'b') {
                blue.push_back(sub);
                continue;
            }
            std::vector<double> w = W(sub);
            double s = 0.0;
            for (std::size_t j = 0; j < N; ++j) s += cfg.v_star[j] * w[j];
            for (std::size_t i = 0; i < N; ++i) out[i] *= cfg.lambda / cfg.N() * cfg.v_star[i] * s;
        }
        double pair_sum = pairings(blue);
        for (auto& x : out) x *= pair_sum;
        return out;
    }

    double average(const std::string& canon) {
        auto w = W(canon);
        double s = 0.0;
        for (double x : w) s += x;
        return s / cfg.N();
    }

    double pairings(std::vector<std::string> items) {
        if (items.empty()) return 1.0;
        if (items.size() % 2) return 0.0;
        double total = 0.0;
        for (std::size_t j = 1; j < items.size(); ++j) {
            std::vector<std::string> rest;
            for (std::size_t k = 1; k < items.size(); ++k)
                if (k != j) rest.push_back(items[k]);
            total += average(glue(items[0], items[j])) * pairings(rest);
        }
        return total;
    }
};

void check_root(const SpikeConfig& cfg, int root_index) {
    cfg.validate();
    if (root_index < 1 || root_index > cfg.N()) throw std::invalid_argument("root index outside [1, N]");
}

}  // namespace

double spiked_wick(const ColoredTree& t, const SpikeConfig& cfg, int root_index) {
    check_root(cfg, root_index);
    ClosedForm cf{cfg, {}, {}};
    std::string canon = colored_canon(t, 0);
    return cf.C(canon) * std::pow(cfg.v_star[static_cast<std::size_t>(root_index - 1)], yellow_children(canon));
}

double spiked_wick_direct(const ColoredTree& t, const SpikeConfig& cfg, int root_index) {
    check_root(cfg, root_index);
    Direct d{cfg};
    return d.W(colored_canon(t, 0))[static_cast<std::size_t>(root_index - 1)];
}

}  // namespace ampwick
