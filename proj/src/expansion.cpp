#include "ampwick/expansion.hpp"

#include <stdexcept>
#include <string>

#include "ampwick/errors.hpp"

namespace ampwick {

namespace {

struct Option {
    std::string canon;
    Integer mult;
    RootRational coeff;
};

Integer factorial(int n) {
    Integer r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// All multisets of size d drawn from `pool` (sorted by canon), each yielding a
// parent option with the given coefficient.
void multisets(const std::vector<Option>& pool, int d, const RootRational& c, std::vector<Option>& out,
               std::size_t budget) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            Option o{"(", factorial(d), c};
            int run = 1;
            for (std::size_t k = 0; k < pick.size(); ++k) {
                const Option& ch = pool[static_cast<std::size_t>(pick[k])];
                o.canon += ch.canon;
                o.mult *= ch.mult;
                o.coeff *= ch.coeff;
                if (k > 0 && pick[k] == pick[k - 1]) ++run;
                else run = 1;
                o.mult /= run;
            }
            o.canon += ")";
            if (out.size() >= budget) throw BudgetExceeded(budget);
            out.push_back(std::move(o));
            return;
        }
        for (int j = start; j < static_cast<int>(pool.size()); ++j) {
            pick.push_back(j);
            self(self, j, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, d);
}

}  // namespace

std::vector<WeightedTree> expand_iterate(const std::vector<Polynomial>& F, int t, int m, std::size_t budget) {
    if (t < 1 || m < 1) throw std::invalid_argument("expand_iterate needs t >= 1 and m >= 1");
    if (static_cast<int>(F.size()) < t) throw std::invalid_argument("F must provide f_0..f_{t-1}");
    if (!F[0].is_identity()) throw std::invalid_argument("f_0 must be the identity");

    std::vector<Option> level{{"()", 1, RootRational()}};
    for (int depth = t - 1; depth >= 1; --depth) {
        const Polynomial& f = F[static_cast<std::size_t>(t - depth)];
        std::vector<Option> next;
        for (int d = 0; d <= f.degree(); ++d) {
            if (sgn(f.coeffs()[static_cast<std::size_t>(d)]) == 0) continue;
            multisets(level, d, f.coefficient(d), next, budget);
        }
        level = std::move(next);
    }
    std::vector<Option> roots;
    multisets(level, m, RootRational(), roots, budget);

    std::vector<WeightedTree> out;
    out.reserve(roots.size());
    for (auto& o : roots) {
        UnlabeledTree tr = UnlabeledTree::from_canonical(o.canon);
        tr.horizon = t;
        for (int v = 1; v < tr.size(); ++v) {
            int depth = tr.depth(v);
            if (depth < t) tr.set_coeff(v, F[static_cast<std::size_t>(t - depth)].coefficient(tr.degree(v)));
        }
        RootRational w = o.coeff;
        w.value *= o.mult;
        out.push_back({std::move(tr), o.mult, w});
    }
    return out;
}

}  // namespace ampwick
