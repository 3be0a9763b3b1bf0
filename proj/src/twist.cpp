#include "qspace/twist.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace qspace {

namespace {

// Block-diagonal sum_dim x sum_dim matrix with eta(j) on each block.
RepMatrix block_factor_diag(const CGTable& table, const BlockFactors* eta, bool inverse, int order) {
    TensorBasis sum_basis;
    sum_basis.factors = {SpinLabel(table.sum_dim() - 1)};
    RepMatrix d(sum_basis, sum_basis, order);
    int col = 0;
    for (auto b : table.blocks()) {
        HSeries factor = HSeries::one(order);
        if (eta) {
            auto it = eta->find(b.two_j);
            if (it == eta->end())
                throw MissingBlockFactor("no block factor for spin " + spin_to_string(b));
            factor = inverse ? it->second.inverse() : it->second;
        }
        for (int k = 0; k < b.dim(); ++k) d.at(col + k, col + k) = factor;
        col += b.dim();
    }
    return d;
}

struct TwistCacheKey {
    int two_j1, two_j2, order, inverse;
    bool operator<(const TwistCacheKey& o) const {
        return std::tie(two_j1, two_j2, order, inverse) < std::tie(o.two_j1, o.two_j2, o.order, o.inverse);
    }
};

std::map<TwistCacheKey, RepMatrix> g_std_twist_cache;
std::shared_mutex g_std_twist_mutex;

struct CompositeCacheKey {
    int j1, j1p, j2, j2p, order, kind, inverse; // kind: 0 = so4, 1 = sl2c
    bool operator<(const CompositeCacheKey& o) const {
        return std::tie(j1, j1p, j2, j2p, order, kind, inverse) <
               std::tie(o.j1, o.j1p, o.j2, o.j2p, o.order, o.kind, o.inverse);
    }
};

std::map<CompositeCacheKey, RepMatrix> g_composite_cache;
std::shared_mutex g_composite_mutex;

RepMatrix build_twist_matrix(SpinLabel j1, SpinLabel j2, int order, const BlockFactors* eta, bool inverse) {
    auto q_table = cg_table(j1, j2, true, order);
    auto c_table = cg_table(j1, j2, false, order);
    const RepMatrix d = block_factor_diag(*q_table, eta, inverse, order);
    if (!inverse) return q_table->embed() * d * c_table->reduce();
    return c_table->embed() * d * q_table->reduce();
}

} // namespace

TwistRep standard_twist_rep(SpinLabel j1, SpinLabel j2, int order, const BlockFactors* eta, bool inverse) {
    TwistRep rep;
    rep.j1 = j1;
    rep.j2 = j2;
    if (eta) {
        rep.block_factors = *eta;
        rep.matrix = build_twist_matrix(j1, j2, order, eta, inverse);
        return rep;
    }
    for (auto b : clebsch_range(j1, j2)) rep.block_factors[b.two_j] = HSeries::one(order);
    const TwistCacheKey key{j1.two_j, j2.two_j, order, inverse ? 1 : 0};
    {
        std::shared_lock lock(g_std_twist_mutex);
        auto it = g_std_twist_cache.find(key);
        if (it != g_std_twist_cache.end()) {
            rep.matrix = it->second;
            return rep;
        }
    }
    RepMatrix m = build_twist_matrix(j1, j2, order, nullptr, inverse);
    {
        std::unique_lock lock(g_std_twist_mutex);
        rep.matrix = g_std_twist_cache.emplace(key, std::move(m)).first->second;
    }
    return rep;
}

BlockFactors coboundary_block_factors(const std::function<HSeries(SpinLabel)>& beta,
                                      SpinLabel j1, SpinLabel j2, int order) {
    const HSeries denom = HSeries::mul(beta(j1), beta(j2)).inverse();
    BlockFactors eta;
    for (auto b : clebsch_range(j1, j2)) eta[b.two_j] = HSeries::mul(beta(b), denom).truncated(order);
    return eta;
}

RepMatrix deformed_coproduct_rep(Gen g, SpinLabel j1, SpinLabel j2, int order) {
    auto q_table = cg_table(j1, j2, true, order);
    TensorBasis sum_basis;
    sum_basis.factors = {SpinLabel(q_table->sum_dim() - 1)};
    RepMatrix blocks(sum_basis, sum_basis, order);
    int col = 0;
    for (auto b : q_table->blocks()) {
        const RepMatrix gb = rep_generator(b, g, false, order);
        for (int r = 0; r < b.dim(); ++r)
            for (int c = 0; c < b.dim(); ++c) blocks.at(col + r, col + c) = gb.at(r, c);
        col += b.dim();
    }
    return q_table->embed() * blocks * q_table->reduce();
}

TwistFamily standard_twist_family(int order, bool inverse) {
    return [order, inverse](SpinLabel a, SpinLabel b) {
        return standard_twist_rep(a, b, order, nullptr, inverse).matrix;
    };
}

RepMatrix coproduct_leg_rep(const TwistFamily& x, CoproductLeg leg,
                            SpinLabel j1, SpinLabel j2, SpinLabel j3, int order) {
    const TensorBasis full({j1, j2, j3});
    if (leg == CoproductLeg::Left) {
        auto table = cg_table(j1, j2, false, order);
        const int sd = table->sum_dim();
        const int d3 = j3.dim();
        TensorBasis mid;
        mid.factors = {SpinLabel(sd - 1), j3};
        RepMatrix y(mid, mid, order);
        int col = 0;
        for (auto b : table->blocks()) {
            const RepMatrix xb = x(b, j3);
            const int db = b.dim();
            for (int r = 0; r < db * d3; ++r)
                for (int c = 0; c < db * d3; ++c) {
                    const int rm = r / d3, rk = r % d3, cm = c / d3, ck = c % d3;
                    y.at((col + rm) * d3 + rk, (col + cm) * d3 + ck) = xb.at(r, c);
                }
            col += db;
        }
        const RepMatrix emb = RepMatrix::kron(table->embed(), RepMatrix::identity(TensorBasis::single(j3), order));
        return emb * y * emb.transposed();
    }
    auto table = cg_table(j2, j3, false, order);
    const int sd = table->sum_dim();
    const int d1 = j1.dim();
    TensorBasis mid;
    mid.factors = {j1, SpinLabel(sd - 1)};
    RepMatrix y(mid, mid, order);
    int col = 0;
    for (auto b : table->blocks()) {
        const RepMatrix xb = x(j1, b);
        const int db = b.dim();
        for (int r = 0; r < d1 * db; ++r)
            for (int c = 0; c < d1 * db; ++c) {
                const int rk = r / db, rm = r % db, ck = c / db, cm = c % db;
                y.at(rk * sd + col + rm, ck * sd + col + cm) = xb.at(r, c);
            }
        col += db;
    }
    const RepMatrix emb = RepMatrix::kron(RepMatrix::identity(TensorBasis::single(j1), order), table->embed());
    return emb * y * emb.transposed();
}

RepMatrix coassociator_rep(SpinLabel j1, SpinLabel j2, SpinLabel j3, int order) {
    const TwistFamily fam = standard_twist_family(order, false);
    const TwistFamily fam_inv = standard_twist_family(order, true);
    const RepMatrix id1 = RepMatrix::identity(TensorBasis::single(j1), order);
    const RepMatrix id3 = RepMatrix::identity(TensorBasis::single(j3), order);
    const RepMatrix a = coproduct_leg_rep(fam_inv, CoproductLeg::Left, j1, j2, j3, order);
    const RepMatrix b = RepMatrix::kron(standard_twist_rep(j1, j2, order, nullptr, true).matrix, id3);
    const RepMatrix c = RepMatrix::kron(id1, standard_twist_rep(j2, j3, order).matrix);
    const RepMatrix d = coproduct_leg_rep(fam, CoproductLeg::Right, j1, j2, j3, order);
    return a * b * c * d;
}

RepMatrix twist_rep_so4(std::pair<SpinLabel, SpinLabel> pair1,
                        std::pair<SpinLabel, SpinLabel> pair2, int order, bool inverse) {
    const CompositeCacheKey key{pair1.first.two_j, pair1.second.two_j, pair2.first.two_j,
                                pair2.second.two_j, order, 0, inverse ? 1 : 0};
    {
        std::shared_lock lock(g_composite_mutex);
        auto it = g_composite_cache.find(key);
        if (it != g_composite_cache.end()) return it->second;
    }
    const RepMatrix f13 = standard_twist_rep(pair1.first, pair2.first, order, nullptr, inverse).matrix;
    const RepMatrix f24 = standard_twist_rep(pair1.second, pair2.second, order, nullptr, inverse).matrix;
    RepMatrix m = pair_product_13_24(f13, f24);
    std::unique_lock lock(g_composite_mutex);
    return g_composite_cache.emplace(key, std::move(m)).first->second;
}

RepMatrix twist_rep_sl2c(std::pair<SpinLabel, SpinLabel> pair1,
                         std::pair<SpinLabel, SpinLabel> pair2, int order, bool inverse) {
    const CompositeCacheKey key{pair1.first.two_j, pair1.second.two_j, pair2.first.two_j,
                                pair2.second.two_j, order, 1, inverse ? 1 : 0};
    {
        std::shared_lock lock(g_composite_mutex);
        auto it = g_composite_cache.find(key);
        if (it != g_composite_cache.end()) return it->second;
    }
    const TensorBasis full({pair1.first, pair1.second, pair2.first, pair2.second});
    const RepMatrix so4 = twist_rep_so4(pair1, pair2, order, inverse);
    RepMatrix m(full, full, order);
    if (!inverse) {
        const RepMatrix r23 = embed_on_adjacent_slots(rmatrix_rep_inverse(pair1.second, pair2.first, order), full, 1);
        m = r23 * so4;
    } else {
        const RepMatrix r23 = embed_on_adjacent_slots(rmatrix_rep(pair1.second, pair2.first, order), full, 1);
        m = so4 * r23;
    }
    std::unique_lock lock(g_composite_mutex);
    return g_composite_cache.emplace(key, std::move(m)).first->second;
}

RMatrixTwistDiagnostic diagnose_rmatrix_twist(SpinLabel j1, SpinLabel j2, int order) {
    const RepMatrix f = standard_twist_rep(j1, j2, order).matrix;
    const RepMatrix f21 = swap_two_legs(standard_twist_rep(j2, j1, order).matrix);
    const RepMatrix r = rmatrix_rep(j1, j2, order);
    const RepMatrix d = f21.inverse() * r * f;

    auto c_table = cg_table(j1, j2, false, order);
    const RepMatrix s = c_table->reduce() * d * c_table->embed();

    RMatrixTwistDiagnostic diag;
    const double c1 = casimir_rep(j1, order)[0];
    const double c2 = casimir_rep(j2, order)[0];
    diag.off_block_dev = 0.0;
    int col = 0;
    for (auto b : c_table->blocks()) {
        RMatrixTwistDiagnostic::Block blk;
        blk.two_j = b.two_j;
        blk.twist_scalar = s.at(col, col);
        const double cj = casimir_rep(b, order)[0];
        blk.casimir_scalar = exp_h((cj - c1 - c2) / 2.0, order);
        blk.fundamental_scalar = exp_h(2.0 * (cj - c1 - c2), order);
        for (int k = 0; k < b.dim(); ++k)
            for (int l = 0; l < b.dim(); ++l)
                if (k != l)
                    diag.off_block_dev = std::max(diag.off_block_dev, s.at(col + k, col + l).max_abs());
                else
                    diag.off_block_dev =
                        std::max(diag.off_block_dev, max_abs_diff(s.at(col + k, col + l), blk.twist_scalar));
        diag.blocks.push_back(std::move(blk));
        col += b.dim();
    }
    // entries outside all diagonal blocks
    std::vector<int> block_of(static_cast<std::size_t>(s.rows()));
    {
        int at = 0;
        for (std::size_t bi = 0; bi < c_table->blocks().size(); ++bi)
            for (int k = 0; k < c_table->blocks()[bi].dim(); ++k) block_of[at++] = static_cast<int>(bi);
    }
    for (int rr = 0; rr < s.rows(); ++rr)
        for (int cc = 0; cc < s.cols(); ++cc)
            if (block_of[rr] != block_of[cc])
                diag.off_block_dev = std::max(diag.off_block_dev, s.at(rr, cc).max_abs());

    const RepMatrix finv = f.inverse();
    diag.killing_residual = max_abs_diff(r, f21 * split_casimir_exp_rep(j1, j2, order) * finv);
    diag.fundamental_residual = max_abs_diff(r, f21 * split_casimir_exp_rep(j1, j2, order, 4.0) * finv);
    return diag;
}

} // namespace qspace
