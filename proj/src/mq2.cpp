#include "qspace/mq2.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>

namespace qspace {

namespace {

void check_mq2_key(int two_j, int two_m, int two_mp, int det_pow) {
    if (two_j < 0 || det_pow < 0 || std::abs(two_m) > two_j || std::abs(two_mp) > two_j ||
        (two_j + two_m) % 2 != 0 || (two_j + two_mp) % 2 != 0)
        throw DimensionMismatch("invalid basis label (2j=" + std::to_string(two_j) + ", 2m=" +
                                std::to_string(two_m) + ", 2m'=" + std::to_string(two_mp) +
                                ", detPow=" + std::to_string(det_pow) + ")");
}

} // namespace

Mq2Poly Mq2Poly::term(int two_j, int two_m, int two_mp, int det_pow, HSeries coeff) {
    Mq2Poly p(coeff.order());
    p.add_term(two_j, two_m, two_mp, det_pow, coeff);
    return p;
}

Mq2Poly Mq2Poly::generator(char name, int order) {
    switch (name) {
    case 'a': return gen_a(order);
    case 'b': return gen_b(order);
    case 'c': return gen_c(order);
    case 'd': return gen_d(order);
    default: throw UsageError(std::string("unknown generator '") + name + "'");
    }
}

Mq2Poly& Mq2Poly::add_term(int two_j, int two_m, int two_mp, int det_pow, const HSeries& coeff) {
    check_mq2_key(two_j, two_m, two_mp, det_pow);
    auto [it, inserted] = terms.try_emplace({two_j, two_m, two_mp, det_pow}, coeff);
    if (!inserted) it->second += coeff;
    return *this;
}

HSeries Mq2Poly::coeff(int two_j, int two_m, int two_mp, int det_pow) const {
    auto it = terms.find({two_j, two_m, two_mp, det_pow});
    if (it == terms.end()) return HSeries::zero(order);
    return it->second;
}

Mq2Poly Mq2Poly::operator-() const {
    Mq2Poly p(order);
    for (const auto& [k, c] : terms) p.terms.emplace(k, -c);
    return p;
}

Mq2Poly& Mq2Poly::operator+=(const Mq2Poly& rhs) {
    order = std::min(order, rhs.order);
    for (const auto& [k, c] : rhs.terms) {
        auto [it, inserted] = terms.try_emplace(k, c);
        if (!inserted) it->second += c;
    }
    return *this;
}

Mq2Poly& Mq2Poly::operator-=(const Mq2Poly& rhs) {
    order = std::min(order, rhs.order);
    for (const auto& [k, c] : rhs.terms) {
        auto [it, inserted] = terms.try_emplace(k, -c);
        if (!inserted) it->second -= c;
    }
    return *this;
}

Mq2Poly Mq2Poly::scaled(const HSeries& s) const {
    Mq2Poly p(std::min(order, s.order()));
    for (const auto& [k, c] : terms) p.terms.emplace(k, HSeries::mul(c, s));
    return p;
}

double Mq2Poly::max_abs() const {
    double m = 0.0;
    for (const auto& [k, c] : terms) m = std::max(m, c.max_abs());
    return m;
}

double max_abs_diff(const Mq2Poly& a, const Mq2Poly& b) {
    double m = 0.0;
    for (const auto& [k, c] : a.terms)
        m = std::max(m, max_abs_diff(c, b.coeff(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k))));
    for (const auto& [k, c] : b.terms)
        m = std::max(m, max_abs_diff(c, a.coeff(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k))));
    return m;
}

MonomialExpansion t_basis_element(SpinLabel j, int two_m, int two_mp, bool deformed, int order) {
    check_mq2_key(j.two_j, two_m, two_mp, 0);
    const int jm = (j.two_j - two_m) / 2;    // j - m
    const int jpm = (j.two_j + two_m) / 2;   // j + m
    const int jpmp = (j.two_j + two_mp) / 2; // j + m'
    const int dm = (two_mp - two_m) / 2;     // m' - m
    const HSeries common = HSeries::mul(qbinom_qm2_v(j.two_j, jpm, order, deformed).sqrt(),
                                        qbinom_qm2_v(j.two_j, jpmp, order, deformed).sqrt().inverse());
    MonomialExpansion out;
    for (int k = std::max(0, dm); k <= std::min(jm, jpmp); ++k) {
        HSeries c = exp_h_v(static_cast<double>(k * (dm - k)), order, deformed);
        c = HSeries::mul(c, qbinom_qm2_v(jm, k, order, deformed));
        c = HSeries::mul(c, qbinom_qm2_v(jpmp, jpmp - k, order, deformed));
        c = HSeries::mul(c, common);
        const std::tuple<int, int, int, int> mono{jm - k, k, k - dm, jpmp - k};
        auto [it, inserted] = out.try_emplace(mono, c);
        if (!inserted) it->second += c;
    }
    return out;
}

Mq2Poly mul_euclid(const Mq2Poly& p, const Mq2Poly& r, bool deformed, int max_two_j) {
    const int order = std::min(p.order, r.order);
    Mq2Poly out(order);
    for (const auto& [k1, c1] : p.terms) {
        if (c1.is_zero()) continue;
        const auto [tj1, tm1, tmp1, dp1] = k1;
        for (const auto& [k2, c2] : r.terms) {
            if (c2.is_zero()) continue;
            const auto [tj2, tm2, tmp2, dp2] = k2;
            if (tj1 + tj2 > max_two_j)
                throw DegreeCapExceeded("product term of spin 2j = " + std::to_string(tj1 + tj2) +
                                        " exceeds the cap 2j <= " + std::to_string(max_two_j));
            auto table = cg_table(SpinLabel(tj1), SpinLabel(tj2), deformed, order);
            const HSeries c12 = HSeries::mul(c1, c2);
            const int tm = tm1 + tm2, tmp = tmp1 + tmp2;
            for (auto bj : table->blocks()) {
                if (std::abs(tm) > bj.two_j || std::abs(tmp) > bj.two_j) continue;
                const HSeries cg1 = table->coeff(bj.two_j, tm, tm1, tm2);
                const HSeries cg2 = table->coeff(bj.two_j, tmp, tmp1, tmp2);
                HSeries c = HSeries::mul(c12, HSeries::mul(cg1, cg2));
                if (c.is_zero()) continue;
                out.add_term(bj.two_j, tm, tmp, dp1 + dp2 + (tj1 + tj2 - bj.two_j) / 2, c);
            }
        }
    }
    return out;
}

namespace {

// Blocks keyed by (2j, detPow) as coefficient vectors on V^j (x) V^j,
// index (m-position * dim + m'-position).
std::map<std::pair<int, int>, std::vector<HSeries>> det_graded_blocks(const Mq2Poly& p, int order) {
    std::map<std::pair<int, int>, std::vector<HSeries>> blocks;
    for (const auto& [k, c] : p.terms) {
        const auto [tj, tm, tmp, dp] = k;
        const SpinLabel j(tj);
        auto& vec = blocks.try_emplace({tj, dp},
                                       std::vector<HSeries>(static_cast<std::size_t>(j.dim()) * j.dim(), HSeries(order)))
                        .first->second;
        vec[weight_index(j, tm) * j.dim() + weight_index(j, tmp)] = c.truncated(order);
    }
    return blocks;
}

// Generic block-pair product: an optional four-slot operator acts on the
// coefficient tensor (slot order j1, j1', j2, j2'), then the deformed or
// classical double-CG contraction is applied.
using SlotOperator = std::function<RepMatrix(SpinLabel, SpinLabel)>;

Mq2Poly twisted_product(const Mq2Poly& p, const Mq2Poly& r, const SlotOperator& op, bool deformed_product,
                        int max_two_j) {
    const int order = std::min(p.order, r.order);
    Mq2Poly out(order);
    const auto p_blocks = det_graded_blocks(p, order);
    const auto r_blocks = det_graded_blocks(r, order);
    for (const auto& [key1, c1] : p_blocks) {
        const SpinLabel j1(key1.first);
        const int d1 = j1.dim();
        for (const auto& [key2, c2] : r_blocks) {
            const SpinLabel j2(key2.first);
            const int d2 = j2.dim();
            if (j1.two_j + j2.two_j > max_two_j)
                throw DegreeCapExceeded("product term of spin 2j = " + std::to_string(j1.two_j + j2.two_j) +
                                        " exceeds the cap 2j <= " + std::to_string(max_two_j));
            std::vector<HSeries> v(static_cast<std::size_t>(d1) * d1 * d2 * d2, HSeries(order));
            for (int i = 0; i < d1 * d1; ++i)
                for (int k = 0; k < d2 * d2; ++k) v[i * d2 * d2 + k] = HSeries::mul(c1[i], c2[k]);
            const std::vector<HSeries> w = op(j1, j2).apply(v);
            auto table = cg_table(j1, j2, deformed_product, order);
            const int det_base = key1.second + key2.second;
            for (int a1 = 0; a1 < d1; ++a1)
                for (int a1p = 0; a1p < d1; ++a1p)
                    for (int a2 = 0; a2 < d2; ++a2)
                        for (int a2p = 0; a2p < d2; ++a2p) {
                            const HSeries& coeff = w[((a1 * d1 + a1p) * d2 + a2) * d2 + a2p];
                            if (coeff.is_zero()) continue;
                            const int tm1 = two_m_at(j1, a1), tmp1 = two_m_at(j1, a1p);
                            const int tm2 = two_m_at(j2, a2), tmp2 = two_m_at(j2, a2p);
                            const int tm = tm1 + tm2, tmp = tmp1 + tmp2;
                            for (auto bj : table->blocks()) {
                                if (std::abs(tm) > bj.two_j || std::abs(tmp) > bj.two_j) continue;
                                HSeries c = HSeries::mul(coeff, HSeries::mul(table->coeff(bj.two_j, tm, tm1, tm2),
                                                                             table->coeff(bj.two_j, tmp, tmp1, tmp2)));
                                if (c.is_zero()) continue;
                                out.add_term(bj.two_j, tm, tmp,
                                             det_base + (j1.two_j + j2.two_j - bj.two_j) / 2, c);
                            }
                        }
        }
    }
    return out;
}

} // namespace

Mq2Poly star_euclid(const Mq2Poly& p, const Mq2Poly& r, int max_two_j) {
    const int order = std::min(p.order, r.order);
    SlotOperator op = [order](SpinLabel j1, SpinLabel j2) {
        return twist_rep_so4({j1, j1}, {j2, j2}, order, true);
    };
    return twisted_product(p, r, op, false, max_two_j);
}

Mq2Poly star_minkowski(const Mq2Poly& p, const Mq2Poly& r, int max_two_j) {
    const int order = std::min(p.order, r.order);
    SlotOperator op = [order](SpinLabel j1, SpinLabel j2) {
        return twist_rep_sl2c({j1, j1}, {j2, j2}, order, true);
    };
    return twisted_product(p, r, op, false, max_two_j);
}

Mq2Poly mul_minkowski(const Mq2Poly& p, const Mq2Poly& r, int max_two_j) {
    const int order = std::min(p.order, r.order);
    SlotOperator op = [order](SpinLabel j1, SpinLabel j2) {
        const TensorBasis full({j1, j1, j2, j2});
        return embed_on_adjacent_slots(rmatrix_rep(j1, j2, order), full, 1);
    };
    return twisted_product(p, r, op, true, max_two_j);
}

HSeries counit_mq2(const Mq2Poly& p) {
    HSeries s(p.order);
    for (const auto& [k, c] : p.terms)
        if (std::get<1>(k) == std::get<2>(k)) s += c;
    return s;
}

namespace {

std::map<std::pair<int, int>, RepMatrix> g_star_block_cache;
std::shared_mutex g_star_block_mutex;

} // namespace

RepMatrix classical_star_block(SpinLabel j, int order) {
    {
        std::shared_lock lock(g_star_block_mutex);
        auto it = g_star_block_cache.find({j.two_j, order});
        if (it != g_star_block_cache.end()) return it->second;
    }
    const TensorBasis basis = TensorBasis::pair(j, j);
    RepMatrix m(basis, basis, order);
    const int d = j.dim();
    for (int a = 0; a < d; ++a)
        for (int ap = 0; ap < d; ++ap) {
            const int tm = two_m_at(j, a), tmp = two_m_at(j, ap);
            // The swap b <-> c sends the monomials of T'_{m m'} to multiples
            // of those of T'_{m' m}; extract the proportionality factor.
            const MonomialExpansion source = t_basis_element(j, tm, tmp, false, order);
            const MonomialExpansion target = t_basis_element(j, tmp, tm, false, order);
            HSeries lambda(order);
            bool have = false;
            for (const auto& [mono, c] : source) {
                const auto [ka, kb, kc, kd] = mono;
                auto it = target.find({ka, kc, kb, kd});
                if (it == target.end() || it->second.is_zero(1e-14))
                    throw DimensionMismatch("hermitian conjugation left the (j,j) block");
                const HSeries ratio = HSeries::mul(c, it->second.inverse());
                if (!have) {
                    lambda = ratio;
                    have = true;
                } else if (max_abs_diff(lambda, ratio) > 1e-9) {
                    throw DimensionMismatch("hermitian conjugation is not diagonal on the T basis");
                }
            }
            m.at(ap * d + a, a * d + ap) = lambda;
        }
    std::unique_lock lock(g_star_block_mutex);
    return g_star_block_cache.emplace(std::make_pair(j.two_j, order), std::move(m)).first->second;
}

Mq2Poly involution_minkowski(const Mq2Poly& p) {
    Mq2Poly out(p.order);
    for (const auto& [k, c] : p.terms) {
        const auto [tj, tm, tmp, dp] = k;
        const SpinLabel j(tj);
        const RepMatrix star = classical_star_block(j, p.order);
        const int d = j.dim();
        const int src = weight_index(j, tm) * d + weight_index(j, tmp);
        for (int row = 0; row < d * d; ++row) {
            const HSeries& s = star.at(row, src);
            if (s.is_zero()) continue;
            const int mu = two_m_at(j, row / d), mup = two_m_at(j, row % d);
            // (sigma^{-1} (x) sigma^{-1}) scales by e^{-h(m + m')}.
            HSeries v = HSeries::mul(s, c);
            v = HSeries::mul(v, exp_h(-(mu + mup) / 2.0, p.order));
            out.add_term(tj, mu, mup, dp, v);
        }
    }
    return out;
}

int peter_weyl_dimension(int degree) {
    int total = 0;
    for (int two_j = degree % 2 == 0 ? 0 : 1; two_j <= degree; two_j += 2)
        if ((degree - two_j) % 2 == 0) total += (two_j + 1) * (two_j + 1);
    return total;
}

std::vector<RelationEntry> generator_relations(Mq2Product kind, int order) {
    const std::array<char, 4> names{'a', 'b', 'c', 'd'};
    auto product = [&](const Mq2Poly& x, const Mq2Poly& y) {
        return kind == Mq2Product::Minkowski ? mul_minkowski(x, y) : mul_euclid(x, y, true);
    };
    std::vector<RelationEntry> out;
    for (char ln : names)
        for (char rn : names) {
            const Mq2Poly x = Mq2Poly::generator(ln, order);
            const Mq2Poly y = Mq2Poly::generator(rn, order);
            RelationEntry e;
            e.left = std::string(1, ln);
            e.right = std::string(1, rn);
            e.product = product(x, y);
            e.commutator = e.product - product(y, x);
            out.push_back(std::move(e));
        }
    return out;
}

} // namespace qspace
