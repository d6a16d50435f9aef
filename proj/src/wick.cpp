#include "ampwick/wick.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "ampwick/errors.hpp"

namespace ampwick {

bool WickCache::find(const std::string& key, Integer& out) const {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
}

void WickCache::store(const std::string& key, const Integer& value) {
    std::unique_lock lock(mu_);
    table_.emplace(key, value);
}

std::size_t WickCache::size() const {
    std::shared_lock lock(mu_);
    return table_.size();
}

std::vector<std::string> canonical_children(const std::string& canon) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 1; k + 1 < canon.size(); ++k) {
        if (canon[k] == '(') {
            if (depth++ == 0) start = k;
        } else if (--depth == 0) {
            out.push_back(canon.substr(start, k - start + 1));
        }
    }
    return out;
}

namespace {

std::string assemble(const std::vector<std::string>& children) {
    std::string s = "(";
    for (const auto& c : children) s += c;
    return s + ")";
}

struct WickEval {
    WickCache* shared;
    std::unordered_map<std::string, Integer> local;

    Integer operator()(const std::string& canon) {
        auto it = local.find(canon);
        if (it != local.end()) return it->second;
        Integer r;
        if (shared && shared->find(canon, r)) return r;
        r = compute(canon);
        local.emplace(canon, r);
        if (shared) shared->store(canon, r);
        return r;
    }

    Integer compute(const std::string& canon) {
        auto ch = canonical_children(canon);
        if (ch.empty()) return 1;
        if (ch.size() % 2) return 0;
        // Pair the first child with each partner; equal partners share a term.
        Integer total = 0;
        for (std::size_t j = 1; j < ch.size(); ++j) {
            if (j > 1 && ch[j] == ch[j - 1]) continue;
            std::size_t same = 1;
            while (j + same < ch.size() && ch[j + same] == ch[j]) ++same;
            Integer glued = (*this)(glue_canonical(ch[0], ch[j]));
            if (sgn(glued) == 0) continue;
            std::vector<std::string> rest;
            for (std::size_t k = 1; k < ch.size(); ++k)
                if (k != j) rest.push_back(ch[k]);
            total += glued * (*this)(assemble(rest)) * static_cast<unsigned long>(same);
        }
        return total;
    }
};

}  // namespace

std::string glue_canonical(const std::string& a, const std::string& b) {
    auto ca = canonical_children(a);
    auto cb = canonical_children(b);
    std::vector<std::string> all;
    all.reserve(ca.size() + cb.size());
    std::merge(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(all));
    return assemble(all);
}

Integer wick_count(const std::string& canon, WickCache* shared) {
    WickEval ev{shared, {}};
    return ev(canon);
}

Integer wick_count(const UnlabeledTree& t, WickCache* shared) { return wick_count(t.canonical(), shared); }

Integer wick_multi(const std::vector<UnlabeledTree>& trees, WickCache* shared) {
    if (trees.empty()) return 1;
    std::string acc = "()";
    std::optional<int> root;
    for (const auto& t : trees) {
        if (t.root_index) {
            if (root && *root != *t.root_index) throw RootMismatch("trees have different root labels");
            root = t.root_index;
        }
        acc = glue_canonical(acc, t.canonical());
    }
    return wick_count(acc, shared);
}

AlgebraElement AlgebraElement::basis(const UnlabeledTree& t, Rational weight) {
    AlgebraElement e(t.root_index.value_or(1));
    e.add(t, weight);
    return e;
}

void AlgebraElement::add(const std::string& canon, const Rational& weight) {
    if (sgn(weight) == 0) return;
    auto& w = terms_[canon];
    w += weight;
    if (sgn(w) == 0) terms_.erase(canon);
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, w] : terms_) w *= s;
    return *this;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.is_zero() && !b.is_zero() && a.root_label() != b.root_label())
        throw RootMismatch("cannot add elements with different root labels");
    AlgebraElement r(a.is_zero() ? b.root_label() : a.root_label());
    for (const auto& [k, w] : a.terms()) r.add(k, w);
    for (const auto& [k, w] : b.terms()) r.add(k, w);
    return r;
}

AlgebraElement star(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r(a.root_label());
    if (a.root_label() != b.root_label()) return r;
    for (const auto& [ka, wa] : a.terms())
        for (const auto& [kb, wb] : b.terms()) r.add(glue_canonical(ka, kb), wa * wb);
    return r;
}

Rational inner(const AlgebraElement& a, const AlgebraElement& b, WickCache* shared) {
    if (a.root_label() != b.root_label()) return 0;
    WickEval ev{shared, {}};
    Rational total = 0;
    for (const auto& [ka, wa] : a.terms())
        for (const auto& [kb, wb] : b.terms()) total += wa * wb * Rational(ev(glue_canonical(ka, kb)));
    return total;
}

Rational isserlis(const std::vector<std::vector<Rational>>& sigma) {
    const std::size_t d = sigma.size();
    for (const auto& row : sigma)
        if (row.size() != d) throw std::invalid_argument("isserlis needs a square matrix");
    if (d % 2) return 0;
    if (d == 0) return 1;
    if (d > 30) throw TooLarge("isserlis dimension too large");
    std::unordered_map<std::uint32_t, Rational> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> Rational {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int i = __builtin_ctz(mask);
        std::uint32_t rest = mask & ~(1u << i);
        Rational total = 0;
        for (std::uint32_t m = rest; m; m &= m - 1) {
            int j = __builtin_ctz(m);
            const Rational& s = sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (sgn(s) == 0) continue;
            total += s * self(self, rest & ~(1u << j));
        }
        memo.emplace(mask, total);
        return total;
    };
    return rec(rec, (d == 32 ? 0u : (1u << d)) - 1u);
}

namespace {

struct SeEval {
    int max_depth;
    std::unordered_map<std::string, Rational> memo;

    Rational operator()(const std::string& canon, int depth) {
        if (depth > max_depth) throw RecursionDepthExceeded("se_functional recursion deeper than " + std::to_string(max_depth));
        auto it = memo.find(canon);
        if (it != memo.end()) return it->second;
        auto ch = canonical_children(canon);
        Rational r = 1;
        if (!ch.empty()) {
            std::vector<std::vector<Rational>> sigma(ch.size(), std::vector<Rational>(ch.size()));
            for (std::size_t j = 0; j < ch.size(); ++j)
                for (std::size_t k = j; k < ch.size(); ++k) {
                    Rational s = (*this)(glue_canonical(ch[j], ch[k]), depth + 1);
                    sigma[j][k] = s;
                    sigma[k][j] = s;
                }
            r = isserlis(sigma);
        }
        memo.emplace(canon, r);
        return r;
    }
};

}  // namespace

Rational se_functional(const UnlabeledTree& t, int max_depth) {
    SeEval ev{max_depth, {}};
    return ev(t.canonical(), 0);
}

}  // namespace ampwick
