#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qspace/cg.hpp"

namespace qspace {

/// Per-block scale factors eta(j), keyed by 2j.
using BlockFactors = std::map<int, HSeries>;

/// Representation of a counital twist on V^{j1} (x) V^{j2}. Every such
/// representation is a contraction of the deformed and classical
/// Clebsch-Gordan tables weighted by invertible block factors:
///   F^{m1 m2}_{m1' m2'} = sum_{j,m} eta(j) CGq(j1 j2 j; m1 m2 m) CG(j1 j2 j; m1' m2' m).
struct TwistRep {
    SpinLabel j1, j2;
    RepMatrix matrix;
    BlockFactors block_factors;
};

/// Standard twist (eta = 1) or a gauge variant with explicit block
/// factors. The inverse flag swaps the deformed and classical tables and
/// inverts the factors. Standard twists are cached.
TwistRep standard_twist_rep(SpinLabel j1, SpinLabel j2, int order,
                            const BlockFactors* eta = nullptr, bool inverse = false);

/// Block factors of a central 2-coboundary gauge: eta(j) = beta(j) /
/// (beta(j1) beta(j2)).
BlockFactors coboundary_block_factors(const std::function<HSeries(SpinLabel)>& beta,
                                      SpinLabel j1, SpinLabel j2, int order);

/// Matrix of the twisted coproduct of a generator on V^{j1} (x) V^{j2}:
/// the classical block action conjugated with the deformed tables,
///   sum_j embed_q . rho^j(g) . reduce_q.
RepMatrix deformed_coproduct_rep(Gen g, SpinLabel j1, SpinLabel j2, int order);

/// A family of two-leg operator representations indexed by spin pairs.
using TwistFamily = std::function<RepMatrix(SpinLabel, SpinLabel)>;

enum class CoproductLeg { Left, Right };

/// Evaluate (Delta (x) id)(X) (Left) or (id (x) Delta)(X) (Right) on
/// V^{j1} (x) V^{j2} (x) V^{j3}. The coproducted pair of slots is reduced
/// classically into irreducible blocks, X acts pairwise on (j, j3) or
/// (j1, j) per block, and the result is transformed back.
RepMatrix coproduct_leg_rep(const TwistFamily& x, CoproductLeg leg,
                            SpinLabel j1, SpinLabel j2, SpinLabel j3, int order);

/// Standard twist as a family, plain or inverse.
TwistFamily standard_twist_family(int order, bool inverse);

/// Coassociator of the standard twist on a triple product:
///   Phi = (Delta (x) id)(F^{-1}) (F^{-1} (x) 1) (1 (x) F) (id (x) Delta)(F).
RepMatrix coassociator_rep(SpinLabel j1, SpinLabel j2, SpinLabel j3, int order);

/// Composite twist of the product symmetry on
/// (V^{j1} (x) V^{j1'}) (x) (V^{j2} (x) V^{j2'}), slot order (1,2,3,4) =
/// (j1, j1', j2, j2'): F_{13} F'_{24} built from two standard twists.
RepMatrix twist_rep_so4(std::pair<SpinLabel, SpinLabel> pair1,
                        std::pair<SpinLabel, SpinLabel> pair2, int order, bool inverse = false);

/// The boosted variant R^{-1}_{23} F_{13} F'_{24}; its inverse is
/// (F_{13} F'_{24})^{-1} R_{23}.
RepMatrix twist_rep_sl2c(std::pair<SpinLabel, SpinLabel> pair1,
                         std::pair<SpinLabel, SpinLabel> pair2, int order, bool inverse = false);

/// Diagnostic decomposition R = F_21 . D . F^{-1} with D block-scalar in
/// the classical Clebsch-Gordan blocks. Reports the block scalars of D
/// next to the split-Casimir exponentials exp(h (c_j - c_{j1} - c_{j2})/2)
/// and the residual of replacing D by that exponential.
struct RMatrixTwistDiagnostic {
    struct Block {
        int two_j;
        HSeries twist_scalar;       // block scalar extracted from D
        HSeries casimir_scalar;     // exp(h (c_j - c_{j1} - c_{j2})/2), Killing normalization
        HSeries fundamental_scalar; // the same with C normalized by the fundamental trace (4x)
    };
    std::vector<Block> blocks;
    double off_block_dev;        // non-scalar residue of D in block coordinates
    double killing_residual;     // max |R - F_21 e^{h t} F^{-1}|, Killing-normalized C
    double fundamental_residual; // the same with the fundamental-trace normalization
};

RMatrixTwistDiagnostic diagnose_rmatrix_twist(SpinLabel j1, SpinLabel j2, int order);

} // namespace qspace
