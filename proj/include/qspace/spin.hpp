#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qspace/errors.hpp"

namespace qspace {

/// Spin label storing 2j, so half-integer spins stay exact.
struct SpinLabel {
    int two_j = 0;

    SpinLabel() = default;
    explicit SpinLabel(int tj) : two_j(tj) {
        if (tj < 0) throw Error("spin label must be nonnegative");
    }

    int dim() const { return two_j + 1; }

    friend bool operator==(SpinLabel a, SpinLabel b) { return a.two_j == b.two_j; }
    friend bool operator!=(SpinLabel a, SpinLabel b) { return a.two_j != b.two_j; }
    friend bool operator<(SpinLabel a, SpinLabel b) { return a.two_j < b.two_j; }
};

/// Weight 2m at position k in the ascending weight basis of spin j.
inline int two_m_at(SpinLabel j, int k) { return -j.two_j + 2 * k; }

/// Position of weight 2m in the ascending weight basis of spin j (-1 if absent).
inline int weight_index(SpinLabel j, int two_m) {
    if (two_m < -j.two_j || two_m > j.two_j || ((two_m + j.two_j) % 2) != 0) return -1;
    return (two_m + j.two_j) / 2;
}

/// One row/column label of a representation matrix: the (2j, 2m) pair of
/// every tensor factor.
using BasisLabel = std::vector<std::pair<int, int>>;

/// Ordered tensor-product weight basis. Weights ascend within each factor
/// and factors are enumerated lexicographically with the first factor major.
struct TensorBasis {
    std::vector<SpinLabel> factors;

    TensorBasis() = default;
    explicit TensorBasis(std::vector<SpinLabel> f) : factors(std::move(f)) {}
    static TensorBasis single(SpinLabel j) { return TensorBasis({j}); }
    static TensorBasis pair(SpinLabel j1, SpinLabel j2) { return TensorBasis({j1, j2}); }

    int dim() const {
        int d = 1;
        for (auto j : factors) d *= j.dim();
        return d;
    }

    /// Flat index of per-factor weight positions.
    int index_of(const std::vector<int>& pos) const {
        int idx = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) idx = idx * factors[f].dim() + pos[f];
        return idx;
    }

    /// Per-factor weight positions of a flat index.
    std::vector<int> positions(int idx) const {
        std::vector<int> pos(factors.size(), 0);
        for (std::size_t f = factors.size(); f-- > 0;) {
            pos[f] = idx % factors[f].dim();
            idx /= factors[f].dim();
        }
        return pos;
    }

    /// Total weight 2m of a flat index.
    int total_two_m(int idx) const {
        int t = 0;
        auto pos = positions(idx);
        for (std::size_t f = 0; f < factors.size(); ++f) t += two_m_at(factors[f], pos[f]);
        return t;
    }

    std::vector<BasisLabel> labels() const {
        std::vector<BasisLabel> out;
        out.reserve(static_cast<std::size_t>(dim()));
        for (int i = 0; i < dim(); ++i) {
            auto pos = positions(i);
            BasisLabel lbl;
            for (std::size_t f = 0; f < factors.size(); ++f)
                lbl.emplace_back(factors[f].two_j, two_m_at(factors[f], pos[f]));
            out.push_back(std::move(lbl));
        }
        return out;
    }
};

/// Allowed total spins of j1 (x) j2: |j1-j2|, ..., j1+j2.
inline std::vector<SpinLabel> clebsch_range(SpinLabel j1, SpinLabel j2) {
    std::vector<SpinLabel> out;
    for (int tj = std::abs(j1.two_j - j2.two_j); tj <= j1.two_j + j2.two_j; tj += 2)
        out.push_back(SpinLabel(tj));
    return out;
}

/// Spins as "3/2", "1", "0" — used by the CLI and JSON writers.
inline std::string spin_to_string(SpinLabel j) {
    if (j.two_j % 2 == 0) return std::to_string(j.two_j / 2);
    return std::to_string(j.two_j) + "/2";
}

} // namespace qspace
