#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ampwick/rational.hpp"
#include "ampwick/tree.hpp"

namespace ampwick {

// Shared memo table for wick_count, keyed on canonical form.  Reads are
// concurrent and writes exclusive; stored values do not depend on the order
// in which workers fill the table.
class WickCache {
  public:
    bool find(const std::string& key, Integer& out) const;
    void store(const std::string& key, const Integer& value);
    std::size_t size() const;

  private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, Integer> table_;
};

// Canonical string operations (see UnlabeledTree::canonical).
std::vector<std::string> canonical_children(const std::string& canon);
std::string glue_canonical(const std::string& a, const std::string& b);

Integer wick_count(const UnlabeledTree& t, WickCache* shared = nullptr);
Integer wick_count(const std::string& canon, WickCache* shared = nullptr);

// Throws RootMismatch when two trees carry different root labels.
Integer wick_multi(const std::vector<UnlabeledTree>& trees, WickCache* shared = nullptr);

class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(int root_label) : root_label_(root_label) {}
    static AlgebraElement basis(const UnlabeledTree& t, Rational weight = 1);

    void add(const std::string& canon, const Rational& weight);
    void add(const UnlabeledTree& t, const Rational& weight) { add(t.canonical(), weight); }

    int root_label() const { return root_label_; }
    const std::map<std::string, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement& operator*=(const Rational& s);
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.root_label_ == b.root_label_);
    }

  private:
    int root_label_ = 1;
    std::map<std::string, Rational> terms_;
};

AlgebraElement star(const AlgebraElement& a, const AlgebraElement& b);
Rational inner(const AlgebraElement& a, const AlgebraElement& b, WickCache* shared = nullptr);

// Sum over perfect matchings of [d] of prod Sigma_ij; 0 for odd d.
Rational isserlis(const std::vector<std::vector<Rational>>& sigma);

constexpr int kDefaultMaxDepth = 256;

// L(T): 1 for a childless root, else isserlis(Sigma) with
// Sigma_jk = L(T_j * T_k) over the root's child subtrees.
Rational se_functional(const UnlabeledTree& t, int max_depth = kDefaultMaxDepth);

}  // namespace ampwick
