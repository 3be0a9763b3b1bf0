#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>

#include "qspace/qplane.hpp"

namespace qspace {

/// Element of quantum Euclidean 4-space / quantum Minkowski space in the
/// det-graded irreducible basis: (2j, 2m, 2m', detPow) -> coefficient.
/// The quantum determinant is a formal central grading variable; the
/// polynomial degree of a term is 2j + 2 detPow.
struct Mq2Poly {
    using Key = std::tuple<int, int, int, int>;

    int order = 1;
    std::map<Key, HSeries> terms;

    Mq2Poly() = default;
    explicit Mq2Poly(int ord) : order(ord) {}

    static Mq2Poly unit(int order) { return term(0, 0, 0, 0, HSeries::one(order)); }
    static Mq2Poly term(int two_j, int two_m, int two_mp, int det_pow, HSeries coeff);

    /// Generator matrix (a b; c d) = (X_{mm'}): a = X_{--}, b = X_{-+},
    /// c = X_{+-}, d = X_{++}.
    static Mq2Poly gen_a(int order) { return term(1, -1, -1, 0, HSeries::one(order)); }
    static Mq2Poly gen_b(int order) { return term(1, -1, 1, 0, HSeries::one(order)); }
    static Mq2Poly gen_c(int order) { return term(1, 1, -1, 0, HSeries::one(order)); }
    static Mq2Poly gen_d(int order) { return term(1, 1, 1, 0, HSeries::one(order)); }
    static Mq2Poly det_q(int order) { return term(0, 0, 0, 1, HSeries::one(order)); }
    static Mq2Poly generator(char name, int order);

    Mq2Poly& add_term(int two_j, int two_m, int two_mp, int det_pow, const HSeries& coeff);
    HSeries coeff(int two_j, int two_m, int two_mp, int det_pow) const;

    Mq2Poly operator-() const;
    Mq2Poly& operator+=(const Mq2Poly& rhs);
    Mq2Poly& operator-=(const Mq2Poly& rhs);
    friend Mq2Poly operator+(Mq2Poly a, const Mq2Poly& b) { return a += b; }
    friend Mq2Poly operator-(Mq2Poly a, const Mq2Poly& b) { return a -= b; }

    Mq2Poly scaled(const HSeries& s) const;
    double max_abs() const;
};

double max_abs_diff(const Mq2Poly& a, const Mq2Poly& b);

/// Monomial expansion in the generators: (ka, kb, kc, kd) -> coefficient.
using MonomialExpansion = std::map<std::tuple<int, int, int, int>, HSeries>;

/// Expansion of the irreducible basis vector T^{(j,j)}_{mm'} into ordered
/// a^i b^j c^k d^l monomials:
///   sum_k q^{k(m'-m-k)} [j-m over k]_{q^-2} [j+m' over j+m'-k]_{q^-2}
///         [2j over j+m]_{q^-2}^{1/2} [2j over j+m']_{q^-2}^{-1/2}
///         a^{j-m-k} b^k c^{m-m'+k} d^{j+m'-k}.
MonomialExpansion t_basis_element(SpinLabel j, int two_m, int two_mp, bool deformed, int order);

/// Graded product from the double Clebsch-Gordan contraction:
/// T1 T2 = sum_j CG(j1 j2 j; m1 m2 m) CG(j1 j2 j; m1' m2' m')
///         det^{j1+j2-j} T^{(j,j)}_{mm'}.
Mq2Poly mul_euclid(const Mq2Poly& p, const Mq2Poly& r, bool deformed, int max_two_j = kDefaultMaxTwoJ);

/// Star products: the inverse composite twist acts on the four tensor
/// slots of each block pair, then the untwisted product is taken.
Mq2Poly star_euclid(const Mq2Poly& p, const Mq2Poly& r, int max_two_j = kDefaultMaxTwoJ);
Mq2Poly star_minkowski(const Mq2Poly& p, const Mq2Poly& r, int max_two_j = kDefaultMaxTwoJ);

/// Minkowski product: the slot-(2,3) R-matrix acts first, then the
/// deformed product.
Mq2Poly mul_minkowski(const Mq2Poly& p, const Mq2Poly& r, int max_two_j = kDefaultMaxTwoJ);

/// Counit: sum of the coefficients of the terms with m = m'.
HSeries counit_mq2(const Mq2Poly& p);

/// Classical involution block: matrix of the hermitian generator
/// conjugation (a -> a, d -> d, b <-> c) on the classical T' basis of the
/// (j,j) block, computed by re-expanding the swapped monomials.
RepMatrix classical_star_block(SpinLabel j, int order);

/// Deformed involution: classical star blockwise, then the inverse of
/// sigma (x) sigma, scaling the (j, m, m') slot by e^{-h(m+m')}.
Mq2Poly involution_minkowski(const Mq2Poly& p);

/// Dimension of the degree-n slice spanned by {det^k T^{(j,j)}_{mm'}},
/// i.e. sum of (2j+1)^2 over 2j + 2k = n.
int peter_weyl_dimension(int degree);

/// Computed generator relation report: products and commutators of all
/// ordered generator pairs under the chosen product.
struct RelationEntry {
    std::string left, right;
    Mq2Poly product;
    Mq2Poly commutator;
};

enum class Mq2Product { EuclidDeformed, Minkowski };

std::vector<RelationEntry> generator_relations(Mq2Product kind, int order);

} // namespace qspace
