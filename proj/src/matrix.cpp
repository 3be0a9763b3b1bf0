#include "qspace/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qspace {

RepMatrix RepMatrix::identity(const TensorBasis& basis, int order) {
    RepMatrix m(basis, basis, order);
    for (int i = 0; i < m.rows_; ++i) m.at(i, i) = HSeries::one(order);
    return m;
}

RepMatrix RepMatrix::operator-() const {
    RepMatrix r = *this;
    for (auto& e : r.a_) e = -e;
    return r;
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix addition with mismatched shapes");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

RepMatrix& RepMatrix::operator-=(const RepMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix subtraction with mismatched shapes");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

RepMatrix& RepMatrix::operator*=(const HSeries& s) {
    for (auto& e : a_) e = HSeries::mul(e, s);
    return *this;
}

RepMatrix RepMatrix::mul(const RepMatrix& a, const RepMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product with mismatched shapes");
    RepMatrix r(a.row_basis_, b.col_basis_, std::min(a.order_, b.order_));
    r.rows_ = a.rows_;
    r.cols_ = b.cols_;
    r.a_.assign(static_cast<std::size_t>(r.rows_) * r.cols_, HSeries(r.order_));
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const HSeries& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j).add_mul(aik, b.at(k, j));
        }
    return r;
}

std::vector<HSeries> RepMatrix::apply(const std::vector<HSeries>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector product with mismatched shapes");
    std::vector<HSeries> r(static_cast<std::size_t>(rows_), HSeries(order_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i].add_mul(at(i, j), v[j]);
    return r;
}

RepMatrix RepMatrix::transposed() const {
    RepMatrix r(col_basis_, row_basis_, order_);
    r.rows_ = cols_;
    r.cols_ = rows_;
    r.a_.assign(a_.size(), HSeries(order_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RepMatrix RepMatrix::kron(const RepMatrix& a, const RepMatrix& b) {
    TensorBasis row = a.row_basis_;
    TensorBasis col = a.col_basis_;
    row.factors.insert(row.factors.end(), b.row_basis_.factors.begin(), b.row_basis_.factors.end());
    col.factors.insert(col.factors.end(), b.col_basis_.factors.begin(), b.col_basis_.factors.end());
    RepMatrix r(row, col, std::min(a.order_, b.order_));
    r.rows_ = a.rows_ * b.rows_;
    r.cols_ = a.cols_ * b.cols_;
    r.a_.assign(static_cast<std::size_t>(r.rows_) * r.cols_, HSeries(r.order_));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            const HSeries& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + k, j * b.cols_ + l).add_mul(aij, b.at(k, l));
        }
    return r;
}

RepMatrix RepMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("only square matrices can be inverted");
    const int n = rows_;
    RepMatrix work = *this;
    RepMatrix inv = RepMatrix::identity(col_basis_, order_);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = col; r < n; ++r) {
            const double v = std::abs(work.at(r, col)[0]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (piv < 0 || best == 0.0) throw NotInvertible("matrix is not invertible over the series ring");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(piv, j), work.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const HSeries pinv = work.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            work.at(col, j) = HSeries::mul(work.at(col, j), pinv);
            inv.at(col, j) = HSeries::mul(inv.at(col, j), pinv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const HSeries f = work.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= HSeries::mul(f, work.at(col, j));
                inv.at(r, j) -= HSeries::mul(f, inv.at(col, j));
            }
        }
    }
    return inv;
}

std::vector<double> RepMatrix::constant_term() const {
    std::vector<double> out(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) out[i] = a_[i][0];
    return out;
}

double RepMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : a_) m = std::max(m, e.max_abs());
    return m;
}

double max_abs_diff(const RepMatrix& a, const RepMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix comparison with mismatched shapes");
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, max_abs_diff(a.at(i, j), b.at(i, j)));
    return m;
}

bool close(const RepMatrix& a, const RepMatrix& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

double max_abs_diff_identity(const RepMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("identity comparison needs a square matrix");
    double d = 0.0;
    const HSeries one = HSeries::one(m.order());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            d = std::max(d, i == j ? max_abs_diff(m.at(i, j), one) : m.at(i, j).max_abs());
    return d;
}

RepMatrix swap_two_legs(const RepMatrix& m) {
    if (m.row_basis().factors.size() != 2 || m.col_basis().factors.size() != 2)
        throw DimensionMismatch("leg swap needs a two-factor basis");
    const SpinLabel ja = m.row_basis().factors[0], jb = m.row_basis().factors[1];
    TensorBasis swapped = TensorBasis::pair(jb, ja);
    RepMatrix r(swapped, swapped, m.order());
    const int da = ja.dim(), db = jb.dim();
    for (int ia = 0; ia < da; ++ia)
        for (int ib = 0; ib < db; ++ib)
            for (int ja_ = 0; ja_ < da; ++ja_)
                for (int jb_ = 0; jb_ < db; ++jb_)
                    r.at(ib * da + ia, jb_ * da + ja_) = m.at(ia * db + ib, ja_ * db + jb_);
    return r;
}

RepMatrix embed_on_adjacent_slots(const RepMatrix& m, const TensorBasis& basis, int lo) {
    const int k = static_cast<int>(m.row_basis().factors.size());
    for (int f = 0; f < k; ++f)
        if (basis.factors[lo + f] != m.row_basis().factors[f])
            throw DimensionMismatch("embedded operator does not match the slot spins");
    const TensorBasis left(std::vector<SpinLabel>(basis.factors.begin(), basis.factors.begin() + lo));
    const TensorBasis right(std::vector<SpinLabel>(basis.factors.begin() + lo + k, basis.factors.end()));
    return RepMatrix::kron(RepMatrix::kron(RepMatrix::identity(left, m.order()), m),
                           RepMatrix::identity(right, m.order()));
}

RepMatrix pair_product_13_24(const RepMatrix& a, const RepMatrix& b) {
    const SpinLabel j1 = a.row_basis().factors[0], j3 = a.row_basis().factors[1];
    const SpinLabel j2 = b.row_basis().factors[0], j4 = b.row_basis().factors[1];
    TensorBasis full({j1, j2, j3, j4});
    RepMatrix r(full, full, std::min(a.order(), b.order()));
    const int d1 = j1.dim(), d2 = j2.dim(), d3 = j3.dim(), d4 = j4.dim();
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i3 = 0; i3 < d3; ++i3)
            for (int k1 = 0; k1 < d1; ++k1)
                for (int k3 = 0; k3 < d3; ++k3) {
                    const HSeries& a_e = a.at(i1 * d3 + i3, k1 * d3 + k3);
                    if (a_e.is_zero()) continue;
                    for (int i2 = 0; i2 < d2; ++i2)
                        for (int i4 = 0; i4 < d4; ++i4)
                            for (int k2 = 0; k2 < d2; ++k2)
                                for (int k4 = 0; k4 < d4; ++k4) {
                                    const HSeries& b_e = b.at(i2 * d4 + i4, k2 * d4 + k4);
                                    if (b_e.is_zero()) continue;
                                    const int row = ((i1 * d2 + i2) * d3 + i3) * d4 + i4;
                                    const int col = ((k1 * d2 + k2) * d3 + k3) * d4 + k4;
                                    r.at(row, col).add_mul(a_e, b_e);
                                }
                }
    return r;
}

} // namespace qspace
