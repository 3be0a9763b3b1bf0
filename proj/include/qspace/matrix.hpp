#pragma once

#include <vector>

#include "qspace/hseries.hpp"
#include "qspace/spin.hpp"

namespace qspace {

/// Dense matrix of truncated h-series with weight-basis bookkeeping.
///
/// Row/column bases record which ordered tensor-product weight basis the
/// matrix acts on. All entries share one working order.
class RepMatrix {
public:
    RepMatrix() = default;

    RepMatrix(TensorBasis row_basis, TensorBasis col_basis, int order)
        : rows_(row_basis.dim()), cols_(col_basis.dim()), order_(order),
          row_basis_(std::move(row_basis)), col_basis_(std::move(col_basis)),
          a_(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), HSeries(order)) {}

    static RepMatrix zero(const TensorBasis& basis, int order) { return RepMatrix(basis, basis, order); }
    static RepMatrix identity(const TensorBasis& basis, int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }
    const TensorBasis& row_basis() const { return row_basis_; }
    const TensorBasis& col_basis() const { return col_basis_; }

    const HSeries& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    HSeries& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    RepMatrix operator-() const;
    RepMatrix& operator+=(const RepMatrix& rhs);
    RepMatrix& operator-=(const RepMatrix& rhs);
    RepMatrix& operator*=(const HSeries& s);
    friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
    friend RepMatrix operator-(RepMatrix a, const RepMatrix& b) { return a -= b; }
    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) { return mul(a, b); }

    static RepMatrix mul(const RepMatrix& a, const RepMatrix& b);

    /// Matrix-vector product.
    std::vector<HSeries> apply(const std::vector<HSeries>& v) const;

    RepMatrix transposed() const;

    /// Kronecker product; bases concatenate, first factor major.
    static RepMatrix kron(const RepMatrix& a, const RepMatrix& b);

    /// Gauss-Jordan inverse over the series ring. Pivots must have nonzero
    /// constant terms (pivoting by constant-term magnitude).
    RepMatrix inverse() const;

    /// h^0 slice.
    std::vector<double> constant_term() const;

    double max_abs() const;

private:
    int rows_ = 0, cols_ = 0, order_ = 1;
    TensorBasis row_basis_, col_basis_;
    std::vector<HSeries> a_;
};

double max_abs_diff(const RepMatrix& a, const RepMatrix& b);
bool close(const RepMatrix& a, const RepMatrix& b, double tol);

/// Distance from the identity matrix.
double max_abs_diff_identity(const RepMatrix& m);

/// Reinterpret a matrix on Va (x) Vb as one on Vb (x) Va by swapping the
/// two tensor legs on both sides.
RepMatrix swap_two_legs(const RepMatrix& m);

/// M acting on tensor slots [lo, lo+k) of the given basis, extended by the
/// identity on all other slots. M's bases must match those slots.
RepMatrix embed_on_adjacent_slots(const RepMatrix& m, const TensorBasis& basis, int lo);

/// Matrix of A_{13} B_{24} on a four-slot basis, where A acts on slots
/// (1,3) and B on slots (2,4). Built entrywise; no large products needed.
RepMatrix pair_product_13_24(const RepMatrix& a, const RepMatrix& b);

} // namespace qspace
