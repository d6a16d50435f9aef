#pragma once

#include <cstddef>
#include <vector>

namespace ampwick {

// Dense square matrix, row-major, 0-based.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[idx(i, j)]; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }
    const double* row(int i) const { return a_.data() + idx(i, 0); }
    double* row(int i) { return a_.data() + idx(i, 0); }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    int n_ = 0;
    std::vector<double> a_;
};

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x);

}  // namespace ampwick
