#pragma once

#include <map>
#include <utility>

#include "qspace/twist.hpp"

namespace qspace {

/// Default cap on the top spin (2j) a product may create.
inline constexpr int kDefaultMaxTwoJ = 12;

/// Quantum-plane element in the irreducible basis T^j_m, stored as
/// (2j, 2m) -> coefficient. The (j,.) component has polynomial degree 2j.
struct PlanePoly {
    int order = 1;
    std::map<std::pair<int, int>, HSeries> terms;

    PlanePoly() = default;
    explicit PlanePoly(int ord) : order(ord) {}

    static PlanePoly unit(int order) { return term(0, 0, HSeries::one(order)); }
    static PlanePoly term(int two_j, int two_m, HSeries coeff);

    /// Generators x = T^{1/2}_{-1/2} and y = T^{1/2}_{+1/2}.
    static PlanePoly gen_x(int order) { return term(1, -1, HSeries::one(order)); }
    static PlanePoly gen_y(int order) { return term(1, 1, HSeries::one(order)); }

    PlanePoly& add_term(int two_j, int two_m, const HSeries& coeff);
    HSeries coeff(int two_j, int two_m) const;

    PlanePoly operator-() const;
    PlanePoly& operator+=(const PlanePoly& rhs);
    PlanePoly& operator-=(const PlanePoly& rhs);
    friend PlanePoly operator+(PlanePoly a, const PlanePoly& b) { return a += b; }
    friend PlanePoly operator-(PlanePoly a, const PlanePoly& b) { return a -= b; }

    PlanePoly scaled(const HSeries& s) const;
    double max_abs() const;
    int max_two_j() const;
};

double max_abs_diff(const PlanePoly& a, const PlanePoly& b);

/// Element in the monomial basis x^k y^l.
struct MonomialPoly {
    int order = 1;
    std::map<std::pair<int, int>, HSeries> terms; // (k, l) -> coefficient

    MonomialPoly() = default;
    explicit MonomialPoly(int ord) : order(ord) {}
    MonomialPoly& add_term(int k, int l, const HSeries& coeff);
};

double max_abs_diff(const MonomialPoly& a, const MonomialPoly& b);

/// Basis changes between the monomial and irreducible bases. Diagonal per
/// (j, m) slot: T^j_m = [2j over j+m]_{q^-2}^{1/2} x^{j-m} y^{j+m} in the
/// deformed basis, with the plain binomial classically.
PlanePoly to_irreducible(const MonomialPoly& p, bool deformed);
MonomialPoly to_monomial(const PlanePoly& p, bool deformed);

/// Graded product: T^{j1}_{m1} T^{j2}_{m2} = CG(j1 j2 j1+j2; m1 m2 m1+m2)
/// T^{j1+j2}_{m1+m2} with the deformed or classical coefficient.
PlanePoly mul_plane(const PlanePoly& p, const PlanePoly& r, bool deformed, int max_two_j = kDefaultMaxTwoJ);

/// Twist-induced star product: the inverse twist acts on each graded
/// coefficient pair, then the classical product is taken. With the
/// standard twist this reproduces mul_plane(deformed).
PlanePoly star_plane(const PlanePoly& p, const PlanePoly& r, int max_two_j = kDefaultMaxTwoJ);

/// Star product with a caller-supplied inverse-twist family (gauge
/// variants). The family must return the twist inverse on each pair.
PlanePoly star_plane_with_twist(const PlanePoly& p, const PlanePoly& r, const TwistFamily& inverse_twist,
                                int max_two_j = kDefaultMaxTwoJ);

/// Action of a generator word, rightmost letter first, blockwise through
/// the spin-j representation matrices.
PlanePoly act_plane(const std::vector<Gen>& word, const PlanePoly& p, bool deformed);

/// Conjugate-linear degree-preserving map given blockwise: 2j -> matrix on
/// the weight basis of V^j (coefficients are real, so conjugation is the
/// identity on them).
using BlockMap = std::map<int, RepMatrix>;

/// sigma-deformed involution combinator: applies the supplied classical
/// star blockwise, then acts with the inverse of the group-like element
/// e^{hH/2}, scaling the (j, m) slot by e^{-hm}.
PlanePoly star_involution(const PlanePoly& p, const BlockMap& classical_star);

} // namespace qspace
