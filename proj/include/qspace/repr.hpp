#pragma once

#include <string>
#include <vector>

#include "qspace/matrix.hpp"

namespace qspace {

/// Cartan-Weyl generators of su(2): [H,E] = 2E, [H,F] = -2F.
enum class Gen { E, F, H };

Gen gen_from_char(char c);
char gen_to_char(Gen g);
std::vector<Gen> word_from_string(const std::string& s);

/// Spin-j weight-basis matrix of a generator.
///
/// Deformed case ([E,F] = [H] with q = e^h):
///   E|j,m> = e^{h(m+1)} sqrt([j+m+1][j-m]) |j,m+1>
///   F|j,m> = e^{-h m}   sqrt([j+m][j-m+1]) |j,m-1>
///   H|j,m> = 2m |j,m>
/// Classical case: the same ladder at h = 0, extended to constant series.
RepMatrix rep_generator(SpinLabel j, Gen g, bool deformed, int order);

/// Diagonal matrix of exp(t*h*H): entries e^{2 t h m}.
RepMatrix exp_h_rep(SpinLabel j, double t, bool deformed, int order);

/// Matrix of a product of generators, leftmost factor applied last.
RepMatrix rep_word(const std::vector<Gen>& word, SpinLabel j, bool deformed, int order);

/// Matrix of the antipode of a generator word: the word is reversed and
/// the antipode applied letterwise. Classical: S(g) = -g. Deformed:
/// S(E) = -E e^{-hH}, S(F) = -e^{hH} F, S(H) = -H.
RepMatrix rep_antipode(const std::vector<Gen>& word, SpinLabel j, bool deformed, int order);

/// Weight-reversing conjugator W with rho(S(g)) = W rho(g)^T W^{-1} for all
/// generators: W|j,m> = (-1)^{j-m} e^{h(j-m)} |j,-m> (deformed), and the
/// same with the exponential dropped classically. Applying it legwise to a
/// tensor-operator matrix gives the legwise antipode of that operator.
RepMatrix antipode_conjugator(SpinLabel j, bool deformed, int order);

/// Legwise antipode of an operator matrix on V^{j1} (x) V^{j2}:
/// (W1 (x) W2) M^T (W1 (x) W2)^{-1}.
RepMatrix legwise_antipode(const RepMatrix& m, bool deformed);

/// Matrix of the coproduct of a generator on the ordered tensor basis.
/// Deformed coproduct: D(E) = E (x) e^{hH} + 1 (x) E,
///                     D(F) = F (x) 1 + e^{-hH} (x) F,
///                     D(H) = H (x) 1 + 1 (x) H.
/// Classical coproduct is primitive for all three.
RepMatrix rep_tensor_coproduct(Gen g, SpinLabel j1, SpinLabel j2, bool deformed, int order);

/// Opposite (leg-swapped) deformed coproduct, used by the
/// quasitriangularity checks.
RepMatrix rep_tensor_coproduct_op(Gen g, SpinLabel j1, SpinLabel j2, int order);

/// (rho_h^{j1} (x) rho_h^{j2}) of the universal R-matrix
///   R = e^{h(H (x) H)/2} sum_n e^{h n(n-1)/2} (e^h - e^{-h})^n / [n]!  E^n (x) F^n,
/// with the sum cut at n = min(2j1, 2j2) where the ladder operators vanish.
RepMatrix rmatrix_rep(SpinLabel j1, SpinLabel j2, int order);

/// Inverse of rmatrix_rep (Gauss over the series ring; R = 1 + O(h)).
RepMatrix rmatrix_rep_inverse(SpinLabel j1, SpinLabel j2, int order);

/// Scalar of the Killing-normalized quadratic Casimir C = g_i g_j K^{ij}
/// on V^j, computed from the classical generator matrices. For su(2):
/// C = H^2/8 + (EF + FE)/4.
HSeries casimir_rep(SpinLabel j, int order);

/// Matrix of e^{scale * h t}, t = (Delta(C) - C (x) 1 - 1 (x) C)/2 the split
/// Casimir, on V^{j1} (x) V^{j2}. Diagnostic companion of rmatrix_rep;
/// scale = 4 corresponds to normalizing C by the fundamental trace form
/// instead of the Killing form.
RepMatrix split_casimir_exp_rep(SpinLabel j1, SpinLabel j2, int order, double scale = 1.0);

/// Diagonal matrix of the group-like element e^{hH/2}: entries e^{hm}.
RepMatrix sigma_rep(SpinLabel j, int order);

} // namespace qspace
