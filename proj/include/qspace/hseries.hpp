#pragma once

#include <cstddef>
#include <vector>

#include "qspace/errors.hpp"

namespace qspace {

/// Truncated formal power series in the deformation parameter h.
///
/// A series of order N stores the real coefficients of h^0 .. h^{N-1}.
/// All arithmetic is truncated: mixed-order operands are cut down to the
/// smaller order, excess terms are dropped silently. Everything else in
/// the library is built on top of this scalar.
class HSeries {
public:
    HSeries() = default;

    /// Zero series of the given order.
    explicit HSeries(int order) : c_(static_cast<std::size_t>(check_order(order)), 0.0) {}

    /// Constant series.
    HSeries(double value, int order) : HSeries(order) { c_[0] = value; }

    static HSeries zero(int order) { return HSeries(order); }
    static HSeries one(int order) { return HSeries(1.0, order); }

    /// Series with the given coefficients, order = coeffs.size().
    static HSeries from_coeffs(std::vector<double> coeffs);

    int order() const { return static_cast<int>(c_.size()); }
    double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& coeffs() const { return c_; }

    bool is_zero(double tol = 0.0) const;

    /// Largest |coefficient|.
    double max_abs() const;

    HSeries truncated(int order) const;

    HSeries operator-() const;
    HSeries& operator+=(const HSeries& rhs);
    HSeries& operator-=(const HSeries& rhs);
    HSeries& operator*=(double s);

    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
    friend HSeries operator*(HSeries a, double s) { return a *= s; }
    friend HSeries operator*(double s, HSeries a) { return a *= s; }
    friend HSeries operator*(const HSeries& a, const HSeries& b) { return mul(a, b); }

    /// Cauchy product truncated at min(order(a), order(b)).
    static HSeries mul(const HSeries& a, const HSeries& b);

    /// this += a * b, without allocating a temporary.
    void add_mul(const HSeries& a, const HSeries& b);

    /// Multiplicative inverse; requires a nonzero constant term.
    HSeries inverse() const;

    /// Square root with positive branch; requires a positive constant term.
    HSeries sqrt() const;

private:
    static int check_order(int order) {
        if (order < 1) throw Error("series order must be >= 1");
        return order;
    }

    std::vector<double> c_;
};

/// Absolute coefficient-wise distance on the common order.
double max_abs_diff(const HSeries& a, const HSeries& b);

/// True when all coefficients agree within tol on the common order.
bool close(const HSeries& a, const HSeries& b, double tol);

/// Taylor series of exp(a*h).
HSeries exp_h(double a, int order);

/// Symmetric quantum integer [n] = (e^{hn} - e^{-hn}) / (e^h - e^{-h}),
/// computed as the finite sum e^{h(n-1)} + e^{h(n-3)} + ... + e^{-h(n-1)}
/// so that the h->0 limit needs no division.
HSeries qnum(int n, int order);

/// Quantum factorial [n]! = [1][2]...[n]; n must be >= 0.
HSeries qfact(int n, int order);

/// q-binomial coefficient in base q^{-2}:
///   [n over k]_{q^-2} = q^{k(k-n)} [n]! / ([n-k]! [k]!),  q = e^h.
/// Zero when k < 0 or k > n.
HSeries qbinom_qm2(int n, int k, int order);

/// Classical/deformed dispatch helpers. The classical variants run the
/// same code paths with the q-factors frozen at h = 0, which keeps the
/// zeroth-order lane of every deformed computation bit-identical to its
/// classical counterpart.
HSeries qnum_v(int n, int order, bool deformed);
HSeries qfact_v(int n, int order, bool deformed);
HSeries qbinom_qm2_v(int n, int k, int order, bool deformed);
HSeries exp_h_v(double a, int order, bool deformed);

} // namespace qspace
