#include "qspace/cg.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>

namespace qspace {

namespace {

// Kernel of an r x c series matrix expected to have rank c-1, via
// Gauss-Jordan with full pivoting on constant-term magnitude.
std::vector<HSeries> kernel_vector(std::vector<std::vector<HSeries>> m, int rows, int cols, int order) {
    std::vector<bool> row_used(rows, false), col_used(cols, false);
    std::vector<std::pair<int, int>> pivots; // (row, col)
    for (int step = 0; step < std::min(rows, cols); ++step) {
        int pr = -1, pc = -1;
        double best = 0.0;
        for (int r = 0; r < rows; ++r) {
            if (row_used[r]) continue;
            for (int c = 0; c < cols; ++c) {
                if (col_used[c]) continue;
                const double v = std::abs(m[r][c][0]);
                if (v > best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0 || best < 1e-9) break;
        const HSeries pinv = m[pr][pc].inverse();
        for (int c = 0; c < cols; ++c) m[pr][c] = HSeries::mul(m[pr][c], pinv);
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const HSeries f = m[r][pc];
            if (f.is_zero()) continue;
            for (int c = 0; c < cols; ++c) m[r][c] -= HSeries::mul(f, m[pr][c]);
        }
        row_used[pr] = true;
        col_used[pc] = true;
        pivots.emplace_back(pr, pc);
    }
    if (static_cast<int>(pivots.size()) != cols - 1)
        throw DegenerateKernel("raising-operator kernel has dimension " +
                               std::to_string(cols - static_cast<int>(pivots.size())) + ", expected 1");
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!col_used[c]) free_col = c;
    std::vector<HSeries> v(cols, HSeries(order));
    v[free_col] = HSeries::one(order);
    for (auto [pr, pc] : pivots) v[pc] = -m[pr][free_col];
    return v;
}

HSeries dot(const std::vector<HSeries>& a, const std::vector<HSeries>& b, int order) {
    HSeries s(order);
    for (std::size_t i = 0; i < a.size(); ++i) s.add_mul(a[i], b[i]);
    return s;
}

} // namespace

CGTable::CGTable(SpinLabel j1, SpinLabel j2, bool deformed, int order)
    : j1_(j1), j2_(j2), deformed_(deformed), order_(order),
      blocks_(clebsch_range(j1, j2)) {
    const TensorBasis tb = TensorBasis::pair(j1, j2);
    const int dim = tb.dim();
    const RepMatrix raise = rep_tensor_coproduct(Gen::E, j1, j2, deformed, order);
    const RepMatrix lower = rep_tensor_coproduct(Gen::F, j1, j2, deformed, order);

    // vectors[(two_j, two_m)] as full tensor-coordinate columns
    std::map<std::pair<int, int>, std::vector<HSeries>> vectors;

    for (int bi = static_cast<int>(blocks_.size()) - 1; bi >= 0; --bi) {
        const int two_j = blocks_[bi].two_j;

        // Highest weight: kernel of the raising operator inside weight 2m = 2j.
        std::vector<int> w, w_up;
        for (int i = 0; i < dim; ++i) {
            const int tm = tb.total_two_m(i);
            if (tm == two_j) w.push_back(i);
            if (tm == two_j + 2) w_up.push_back(i);
        }
        std::vector<std::vector<HSeries>> a(w_up.size(), std::vector<HSeries>(w.size(), HSeries(order)));
        for (std::size_t r = 0; r < w_up.size(); ++r)
            for (std::size_t c = 0; c < w.size(); ++c) a[r][c] = raise.at(w_up[r], w[c]);
        std::vector<HSeries> k = kernel_vector(std::move(a), static_cast<int>(w_up.size()),
                                               static_cast<int>(w.size()), order);
        std::vector<HSeries> top(dim, HSeries(order));
        for (std::size_t c = 0; c < w.size(); ++c) top[w[c]] = k[c];

        // Orthogonalize against the weight-2j vectors of higher blocks.
        for (int tjp = two_j + 2; tjp <= j1.two_j + j2.two_j; tjp += 2) {
            auto it = vectors.find({tjp, two_j});
            if (it == vectors.end()) continue;
            const HSeries ov = dot(top, it->second, order);
            for (int i = 0; i < dim; ++i) top[i] -= HSeries::mul(ov, it->second[i]);
        }
        const HSeries norm2 = dot(top, top, order);
        const HSeries ninv = norm2.sqrt().inverse();
        for (auto& e : top) e = HSeries::mul(e, ninv);

        // Sign: the coefficient at m1 = j1 must be positive at h = 0.
        const int k2 = weight_index(j2, two_j - j1.two_j);
        if (k2 >= 0) {
            const int top_idx = tb.index_of({j1.two_j, k2});
            if (std::abs(top[top_idx][0]) < 1e-9)
                throw DegenerateKernel("vanishing leading Clebsch-Gordan coefficient");
            if (top[top_idx][0] < 0.0)
                for (auto& e : top) e *= -1.0;
        }
        vectors[{two_j, two_j}] = top;

        // Lower through the block, dividing out the ladder normalization
        // F|j,m> = e^{-hm} sqrt([j+m][j-m+1]) |j,m-1>.
        std::vector<HSeries> cur = vectors[{two_j, two_j}];
        for (int two_m = two_j; two_m > -two_j; two_m -= 2) {
            std::vector<HSeries> nxt(dim, HSeries(order));
            for (int i = 0; i < dim; ++i)
                for (int c = 0; c < dim; ++c) nxt[i].add_mul(lower.at(i, c), cur[c]);
            HSeries f = HSeries::mul(qnum_v((two_j + two_m) / 2, order, deformed),
                                     qnum_v((two_j - two_m) / 2 + 1, order, deformed))
                            .sqrt();
            f = HSeries::mul(exp_h_v(-two_m / 2.0, order, deformed), f);
            const HSeries finv = f.inverse();
            for (auto& e : nxt) e = HSeries::mul(e, finv);
            vectors[{two_j, two_m - 2}] = nxt;
            cur = std::move(nxt);
        }
    }

    // Assemble embed/reduce and the sparse entry map.
    TensorBasis sum_basis; // placeholder basis carrying only the dimension
    sum_basis.factors = {SpinLabel(sum_dim() - 1)};
    embed_ = RepMatrix(tb, sum_basis, order);
    for (const auto& [jm, vec] : vectors) {
        const int col = block_column(jm.first, jm.second);
        for (int i = 0; i < dim; ++i) embed_.at(i, col) = vec[i];
    }
    reduce_ = embed_.transposed();

    for (const auto& [jm, vec] : vectors) {
        for (int i = 0; i < dim; ++i) {
            if (vec[i].is_zero()) continue;
            const auto pos = tb.positions(i);
            entries_[{jm.first, jm.second, two_m_at(j1, pos[0]), two_m_at(j2, pos[1])}] = vec[i];
        }
    }
}

HSeries CGTable::coeff(int two_j, int two_m, int two_m1, int two_m2) const {
    auto it = entries_.find({two_j, two_m, two_m1, two_m2});
    if (it == entries_.end()) return HSeries::zero(order_);
    return it->second;
}

int CGTable::sum_dim() const {
    int d = 0;
    for (auto b : blocks_) d += b.dim();
    return d;
}

int CGTable::block_column(int two_j, int two_m) const {
    int col = 0;
    for (auto b : blocks_) {
        if (b.two_j == two_j) return col + weight_index(b, two_m);
        col += b.dim();
    }
    throw DimensionMismatch("spin " + std::to_string(two_j) + "/2 is outside the Clebsch-Gordan range");
}

namespace {

struct CGCacheKey {
    int two_j1, two_j2, deformed, order;
    bool operator<(const CGCacheKey& o) const {
        return std::tie(two_j1, two_j2, deformed, order) < std::tie(o.two_j1, o.two_j2, o.deformed, o.order);
    }
};

std::map<CGCacheKey, std::shared_ptr<const CGTable>> g_cg_cache;
std::shared_mutex g_cg_mutex;

} // namespace

std::shared_ptr<const CGTable> cg_table(SpinLabel j1, SpinLabel j2, bool deformed, int order) {
    const CGCacheKey key{j1.two_j, j2.two_j, deformed ? 1 : 0, order};
    {
        std::shared_lock lock(g_cg_mutex);
        auto it = g_cg_cache.find(key);
        if (it != g_cg_cache.end()) return it->second;
    }
    auto table = std::make_shared<const CGTable>(j1, j2, deformed, order);
    std::unique_lock lock(g_cg_mutex);
    return g_cg_cache.emplace(key, std::move(table)).first->second;
}

std::vector<HSeries> cg_apply(const CGTable& table, CGDirection direction, const std::vector<HSeries>& v) {
    const RepMatrix& m = direction == CGDirection::Reduce ? table.reduce() : table.embed();
    return m.apply(v);
}

} // namespace qspace
