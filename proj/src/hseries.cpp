#include "qspace/hseries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qspace {

HSeries HSeries::from_coeffs(std::vector<double> coeffs) {
    if (coeffs.empty()) throw Error("series needs at least one coefficient");
    HSeries s;
    s.c_ = std::move(coeffs);
    return s;
}

bool HSeries::is_zero(double tol) const {
    for (double v : c_)
        if (std::abs(v) > tol) return false;
    return true;
}

double HSeries::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

HSeries HSeries::truncated(int order) const {
    check_order(order);
    HSeries r(order);
    const int n = std::min(order, this->order());
    for (int k = 0; k < n; ++k) r.c_[k] = c_[k];
    return r;
}

HSeries HSeries::operator-() const {
    HSeries r = *this;
    for (double& v : r.c_) v = -v;
    return r;
}

HSeries& HSeries::operator+=(const HSeries& rhs) {
    if (rhs.order() < order()) c_.resize(static_cast<std::size_t>(rhs.order()));
    for (int k = 0; k < order(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

HSeries& HSeries::operator-=(const HSeries& rhs) {
    if (rhs.order() < order()) c_.resize(static_cast<std::size_t>(rhs.order()));
    for (int k = 0; k < order(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

HSeries& HSeries::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

HSeries HSeries::mul(const HSeries& a, const HSeries& b) {
    const int n = std::min(a.order(), b.order());
    HSeries r(n);
    for (int i = 0; i < n; ++i) {
        const double ai = a.c_[i];
        if (ai == 0.0) continue;
        for (int j = 0; i + j < n; ++j) r.c_[i + j] += ai * b.c_[j];
    }
    return r;
}

void HSeries::add_mul(const HSeries& a, const HSeries& b) {
    const int n = std::min(order(), std::min(a.order(), b.order()));
    for (int i = 0; i < n; ++i) {
        const double ai = a.c_[i];
        if (ai == 0.0) continue;
        for (int j = 0; i + j < n; ++j) c_[i + j] += ai * b.c_[j];
    }
}

HSeries HSeries::inverse() const {
    if (c_[0] == 0.0) throw NotInvertible();
    const int n = order();
    HSeries r(n);
    const double inv0 = 1.0 / c_[0];
    r.c_[0] = inv0;
    // a * r = 1 solved coefficient by coefficient.
    for (int k = 1; k < n; ++k) {
        double acc = 0.0;
        for (int i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
        r.c_[k] = -inv0 * acc;
    }
    return r;
}

HSeries HSeries::sqrt() const {
    if (c_[0] <= 0.0) throw NoRealSqrt();
    const int n = order();
    HSeries r(n);
    r.c_[0] = std::sqrt(c_[0]);
    const double half_inv0 = 0.5 / r.c_[0];
    // (r * r)_k = a_k solved coefficient by coefficient.
    for (int k = 1; k < n; ++k) {
        double acc = 0.0;
        for (int i = 1; i < k; ++i) acc += r.c_[i] * r.c_[k - i];
        r.c_[k] = half_inv0 * (c_[k] - acc);
    }
    return r;
}

double max_abs_diff(const HSeries& a, const HSeries& b) {
    const int n = std::min(a.order(), b.order());
    double m = 0.0;
    for (int k = 0; k < n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

bool close(const HSeries& a, const HSeries& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

HSeries exp_h(double a, int order) {
    HSeries r(order);
    double term = 1.0;
    r[0] = term;
    for (int k = 1; k < order; ++k) {
        term *= a / static_cast<double>(k);
        r[k] = term;
    }
    return r;
}

HSeries qnum(int n, int order) {
    if (n < 0) return -qnum(-n, order);
    HSeries r(order);
    for (int i = 0; i < n; ++i) r += exp_h(static_cast<double>(n - 1 - 2 * i), order);
    return r;
}

HSeries qfact(int n, int order) {
    if (n < 0) throw NegativeFactorial();
    HSeries r = HSeries::one(order);
    for (int k = 2; k <= n; ++k) r = r * qnum(k, order);
    return r;
}

HSeries qbinom_qm2(int n, int k, int order) {
    if (k < 0 || k > n) return HSeries::zero(order);
    HSeries r = exp_h(static_cast<double>(k * (k - n)), order);
    r = r * qfact(n, order);
    r = r * qfact(n - k, order).inverse();
    r = r * qfact(k, order).inverse();
    return r;
}

HSeries qnum_v(int n, int order, bool deformed) {
    if (deformed) return qnum(n, order);
    if (n < 0) return -qnum_v(-n, order, false);
    // Same summation as the deformed case with every exponential frozen at 1.
    HSeries r(order);
    for (int i = 0; i < n; ++i) r += HSeries::one(order);
    return r;
}

HSeries qfact_v(int n, int order, bool deformed) {
    if (n < 0) throw NegativeFactorial();
    HSeries r = HSeries::one(order);
    for (int k = 2; k <= n; ++k) r = r * qnum_v(k, order, deformed);
    return r;
}

HSeries qbinom_qm2_v(int n, int k, int order, bool deformed) {
    if (deformed) return qbinom_qm2(n, k, order);
    if (k < 0 || k > n) return HSeries::zero(order);
    HSeries r = HSeries::one(order);
    r = r * qfact_v(n, order, false);
    r = r * qfact_v(n - k, order, false).inverse();
    r = r * qfact_v(k, order, false).inverse();
    return r;
}

HSeries exp_h_v(double a, int order, bool deformed) {
    return deformed ? exp_h(a, order) : HSeries::one(order);
}

} // namespace qspace
