#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "qspace/matrix.hpp"
#include "qspace/repr.hpp"

namespace qspace {

/// Clebsch-Gordan table of a fixed (j1, j2), deformed or classical.
///
/// Entries are the coefficients of the orthogonal basis change between the
/// ordered tensor basis of V^{j1} (x) V^{j2} and the direct sum of the
/// irreducible spin-j blocks, j = |j1-j2| .. j1+j2. Blocks are built from
/// the highest weight down: the top vector of each block is the kernel of
/// the tensor raising operator inside its weight space, orthonormalized
/// against the blocks already found, with the sign fixed so the
/// coefficient with m1 = j1 at m = j is positive at h = 0; lower weights
/// follow by applying the tensor lowering operator and dividing out the
/// ladder normalization.
class CGTable {
public:
    CGTable(SpinLabel j1, SpinLabel j2, bool deformed, int order);

    SpinLabel j1() const { return j1_; }
    SpinLabel j2() const { return j2_; }
    bool deformed() const { return deformed_; }
    int order() const { return order_; }

    /// Coefficient <j1 m1; j2 m2 | j m>; zero unless m = m1 + m2.
    HSeries coeff(int two_j, int two_m, int two_m1, int two_m2) const;

    /// Column-block order of the direct-sum side: ascending j, then
    /// ascending m within each block.
    const std::vector<SpinLabel>& blocks() const { return blocks_; }
    int sum_dim() const;
    int block_column(int two_j, int two_m) const;

    /// Embedding matrix: tensor basis x direct-sum basis, column (j,m)
    /// holding the coefficients of |j,m>.
    const RepMatrix& embed() const { return embed_; }

    /// Projection onto the direct sum; the transpose of embed().
    const RepMatrix& reduce() const { return reduce_; }

    /// Sparse view keyed by (2j, 2m, 2m1, 2m2); zero entries absent.
    const std::map<std::tuple<int, int, int, int>, HSeries>& entries() const { return entries_; }

private:
    SpinLabel j1_, j2_;
    bool deformed_;
    int order_;
    std::vector<SpinLabel> blocks_;
    RepMatrix embed_, reduce_;
    std::map<std::tuple<int, int, int, int>, HSeries> entries_;
};

/// Shared, thread-safe table cache keyed by (j1, j2, deformed, order).
std::shared_ptr<const CGTable> cg_table(SpinLabel j1, SpinLabel j2, bool deformed, int order);

enum class CGDirection { Reduce, Embed };

/// Apply the basis change to a coefficient vector: Reduce maps tensor
/// coordinates to block coordinates, Embed maps back.
std::vector<HSeries> cg_apply(const CGTable& table, CGDirection direction, const std::vector<HSeries>& v);

} // namespace qspace
