#include "qspace/qplane.hpp"

#include <algorithm>
#include <cmath>

namespace qspace {

namespace {

void check_plane_key(int two_j, int two_m) {
    if (two_j < 0 || std::abs(two_m) > two_j || (two_j + two_m) % 2 != 0)
        throw DimensionMismatch("invalid plane basis label (2j=" + std::to_string(two_j) +
                                ", 2m=" + std::to_string(two_m) + ")");
}

} // namespace

PlanePoly PlanePoly::term(int two_j, int two_m, HSeries coeff) {
    PlanePoly p(coeff.order());
    p.add_term(two_j, two_m, coeff);
    return p;
}

PlanePoly& PlanePoly::add_term(int two_j, int two_m, const HSeries& coeff) {
    check_plane_key(two_j, two_m);
    auto [it, inserted] = terms.try_emplace({two_j, two_m}, coeff);
    if (!inserted) it->second += coeff;
    return *this;
}

HSeries PlanePoly::coeff(int two_j, int two_m) const {
    auto it = terms.find({two_j, two_m});
    if (it == terms.end()) return HSeries::zero(order);
    return it->second;
}

PlanePoly PlanePoly::operator-() const {
    PlanePoly p(order);
    for (const auto& [k, c] : terms) p.terms.emplace(k, -c);
    return p;
}

PlanePoly& PlanePoly::operator+=(const PlanePoly& rhs) {
    order = std::min(order, rhs.order);
    for (const auto& [k, c] : rhs.terms) add_term(k.first, k.second, c);
    return *this;
}

PlanePoly& PlanePoly::operator-=(const PlanePoly& rhs) {
    order = std::min(order, rhs.order);
    for (const auto& [k, c] : rhs.terms) add_term(k.first, k.second, -c);
    return *this;
}

PlanePoly PlanePoly::scaled(const HSeries& s) const {
    PlanePoly p(std::min(order, s.order()));
    for (const auto& [k, c] : terms) p.terms.emplace(k, HSeries::mul(c, s));
    return p;
}

double PlanePoly::max_abs() const {
    double m = 0.0;
    for (const auto& [k, c] : terms) m = std::max(m, c.max_abs());
    return m;
}

int PlanePoly::max_two_j() const {
    int m = 0;
    for (const auto& [k, c] : terms)
        if (!c.is_zero()) m = std::max(m, k.first);
    return m;
}

double max_abs_diff(const PlanePoly& a, const PlanePoly& b) {
    double m = 0.0;
    for (const auto& [k, c] : a.terms) m = std::max(m, max_abs_diff(c, b.coeff(k.first, k.second)));
    for (const auto& [k, c] : b.terms) m = std::max(m, max_abs_diff(c, a.coeff(k.first, k.second)));
    return m;
}

MonomialPoly& MonomialPoly::add_term(int k, int l, const HSeries& coeff) {
    if (k < 0 || l < 0) throw DimensionMismatch("negative monomial exponent");
    auto [it, inserted] = terms.try_emplace({k, l}, coeff);
    if (!inserted) it->second += coeff;
    return *this;
}

double max_abs_diff(const MonomialPoly& a, const MonomialPoly& b) {
    double m = 0.0;
    auto get = [](const MonomialPoly& p, std::pair<int, int> key) {
        auto it = p.terms.find(key);
        return it == p.terms.end() ? HSeries::zero(p.order) : it->second;
    };
    for (const auto& [k, c] : a.terms) m = std::max(m, max_abs_diff(c, get(b, k)));
    for (const auto& [k, c] : b.terms) m = std::max(m, max_abs_diff(c, get(a, k)));
    return m;
}

PlanePoly to_irreducible(const MonomialPoly& p, bool deformed) {
    PlanePoly out(p.order);
    for (const auto& [kl, c] : p.terms) {
        const int k = kl.first, l = kl.second;
        // x^k y^l sits in the slot 2j = k+l, 2m = l-k.
        const HSeries scale = qbinom_qm2_v(k + l, l, p.order, deformed).sqrt().inverse();
        out.add_term(k + l, l - k, HSeries::mul(c, scale));
    }
    return out;
}

MonomialPoly to_monomial(const PlanePoly& p, bool deformed) {
    MonomialPoly out(p.order);
    for (const auto& [jm, c] : p.terms) {
        const int two_j = jm.first, two_m = jm.second;
        const int k = (two_j - two_m) / 2, l = (two_j + two_m) / 2;
        const HSeries scale = qbinom_qm2_v(two_j, l, p.order, deformed).sqrt();
        out.add_term(k, l, HSeries::mul(c, scale));
    }
    return out;
}

PlanePoly mul_plane(const PlanePoly& p, const PlanePoly& r, bool deformed, int max_two_j) {
    const int order = std::min(p.order, r.order);
    PlanePoly out(order);
    for (const auto& [k1, c1] : p.terms) {
        if (c1.is_zero()) continue;
        for (const auto& [k2, c2] : r.terms) {
            if (c2.is_zero()) continue;
            const int two_j = k1.first + k2.first;
            if (two_j > max_two_j)
                throw DegreeCapExceeded("product term of degree " + std::to_string(two_j) +
                                        " exceeds the cap 2j <= " + std::to_string(max_two_j));
            auto table = cg_table(SpinLabel(k1.first), SpinLabel(k2.first), deformed, order);
            const HSeries cg = table->coeff(two_j, k1.second + k2.second, k1.second, k2.second);
            out.add_term(two_j, k1.second + k2.second, HSeries::mul(HSeries::mul(c1, c2), cg));
        }
    }
    return out;
}

namespace {

// Star product of two single blocks: twist the coefficient pair, then
// multiply classically.
void star_block(PlanePoly& out, int two_j1, const std::vector<HSeries>& c1, int two_j2,
                const std::vector<HSeries>& c2, const RepMatrix& finv, int order) {
    const SpinLabel j1(two_j1), j2(two_j2);
    const int d1 = j1.dim(), d2 = j2.dim();
    std::vector<HSeries> v(static_cast<std::size_t>(d1) * d2, HSeries(order));
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) v[a * d2 + b] = HSeries::mul(c1[a], c2[b]);
    const std::vector<HSeries> w = finv.apply(v);
    auto table = cg_table(j1, j2, false, order);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) {
            const HSeries& coeff = w[a * d2 + b];
            if (coeff.is_zero()) continue;
            const int two_m1 = two_m_at(j1, a), two_m2 = two_m_at(j2, b);
            const HSeries cg = table->coeff(two_j1 + two_j2, two_m1 + two_m2, two_m1, two_m2);
            out.add_term(two_j1 + two_j2, two_m1 + two_m2, HSeries::mul(coeff, cg));
        }
}

std::map<int, std::vector<HSeries>> graded_blocks(const PlanePoly& p, int order) {
    std::map<int, std::vector<HSeries>> blocks;
    for (const auto& [k, c] : p.terms) {
        auto& vec = blocks.try_emplace(k.first, std::vector<HSeries>(SpinLabel(k.first).dim(), HSeries(order)))
                        .first->second;
        vec[weight_index(SpinLabel(k.first), k.second)] = c.truncated(order);
    }
    return blocks;
}

} // namespace

PlanePoly star_plane_with_twist(const PlanePoly& p, const PlanePoly& r, const TwistFamily& inverse_twist,
                                int max_two_j) {
    const int order = std::min(p.order, r.order);
    PlanePoly out(order);
    const auto p_blocks = graded_blocks(p, order);
    const auto r_blocks = graded_blocks(r, order);
    for (const auto& [tj1, c1] : p_blocks)
        for (const auto& [tj2, c2] : r_blocks) {
            if (tj1 + tj2 > max_two_j)
                throw DegreeCapExceeded("product term of degree " + std::to_string(tj1 + tj2) +
                                        " exceeds the cap 2j <= " + std::to_string(max_two_j));
            star_block(out, tj1, c1, tj2, c2, inverse_twist(SpinLabel(tj1), SpinLabel(tj2)), order);
        }
    return out;
}

PlanePoly star_plane(const PlanePoly& p, const PlanePoly& r, int max_two_j) {
    const int order = std::min(p.order, r.order);
    return star_plane_with_twist(p, r, standard_twist_family(order, true), max_two_j);
}

PlanePoly act_plane(const std::vector<Gen>& word, const PlanePoly& p, bool deformed) {
    PlanePoly cur = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        PlanePoly next(cur.order);
        for (const auto& [tj, vec] : graded_blocks(cur, cur.order)) {
            const SpinLabel j(tj);
            const auto acted = rep_generator(j, *it, deformed, cur.order).apply(vec);
            for (int k = 0; k < j.dim(); ++k)
                if (!acted[k].is_zero()) next.add_term(tj, two_m_at(j, k), acted[k]);
        }
        cur = std::move(next);
    }
    return cur;
}

PlanePoly star_involution(const PlanePoly& p, const BlockMap& classical_star) {
    PlanePoly out(p.order);
    for (const auto& [tj, vec] : graded_blocks(p, p.order)) {
        const SpinLabel j(tj);
        auto it = classical_star.find(tj);
        if (it == classical_star.end())
            throw MissingBlockFactor("no classical star block for spin " + spin_to_string(j));
        auto starred = it->second.apply(vec);
        for (int k = 0; k < j.dim(); ++k) {
            if (starred[k].is_zero()) continue;
            const int two_m = two_m_at(j, k);
            // sigma^{-1} acts diagonally as e^{-hm}.
            out.add_term(tj, two_m, HSeries::mul(exp_h(-two_m / 2.0, p.order), starred[k]));
        }
    }
    return out;
}

} // namespace qspace
