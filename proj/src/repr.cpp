#include "qspace/repr.hpp"

#include <algorithm>

namespace qspace {

Gen gen_from_char(char c) {
    switch (c) {
    case 'E': case 'e': return Gen::E;
    case 'F': case 'f': return Gen::F;
    case 'H': case 'h': return Gen::H;
    default: throw UsageError(std::string("unknown generator '") + c + "'");
    }
}

char gen_to_char(Gen g) {
    switch (g) {
    case Gen::E: return 'E';
    case Gen::F: return 'F';
    default: return 'H';
    }
}

std::vector<Gen> word_from_string(const std::string& s) {
    std::vector<Gen> w;
    w.reserve(s.size());
    for (char c : s) w.push_back(gen_from_char(c));
    return w;
}

namespace {

// sqrt([a][b]) with the zero factors short-circuited, so that ladder
// endpoints produce exact zero entries instead of sqrt(0) series.
HSeries ladder_coeff(int qa, int qb, bool deformed, int order) {
    if (qa <= 0 || qb <= 0) return HSeries::zero(order);
    return HSeries::mul(qnum_v(qa, order, deformed), qnum_v(qb, order, deformed)).sqrt();
}

} // namespace

RepMatrix rep_generator(SpinLabel j, Gen g, bool deformed, int order) {
    const TensorBasis basis = TensorBasis::single(j);
    RepMatrix m(basis, basis, order);
    const int d = j.dim();
    for (int k = 0; k < d; ++k) {
        const int two_m = two_m_at(j, k);
        switch (g) {
        case Gen::H:
            m.at(k, k) = HSeries(static_cast<double>(two_m), order);
            break;
        case Gen::E: {
            if (k + 1 >= d) break;
            // [j+m+1], [j-m] as plain integers: (2j+2m)/2 + 1 and (2j-2m)/2.
            HSeries c = ladder_coeff((j.two_j + two_m) / 2 + 1, (j.two_j - two_m) / 2, deformed, order);
            m.at(k + 1, k) = HSeries::mul(exp_h_v((two_m + 2) / 2.0, order, deformed), c);
            break;
        }
        case Gen::F: {
            if (k == 0) break;
            HSeries c = ladder_coeff((j.two_j + two_m) / 2, (j.two_j - two_m) / 2 + 1, deformed, order);
            m.at(k - 1, k) = HSeries::mul(exp_h_v(-two_m / 2.0, order, deformed), c);
            break;
        }
        }
    }
    return m;
}

RepMatrix exp_h_rep(SpinLabel j, double t, bool deformed, int order) {
    const TensorBasis basis = TensorBasis::single(j);
    RepMatrix m(basis, basis, order);
    for (int k = 0; k < j.dim(); ++k)
        m.at(k, k) = exp_h_v(t * two_m_at(j, k), order, deformed);
    return m;
}

RepMatrix rep_word(const std::vector<Gen>& word, SpinLabel j, bool deformed, int order) {
    RepMatrix m = RepMatrix::identity(TensorBasis::single(j), order);
    for (Gen g : word) m = m * rep_generator(j, g, deformed, order);
    return m;
}

namespace {

RepMatrix rep_antipode_letter(Gen g, SpinLabel j, bool deformed, int order) {
    if (!deformed) return -rep_generator(j, g, false, order);
    switch (g) {
    case Gen::E: return -(rep_generator(j, Gen::E, true, order) * exp_h_rep(j, -1.0, true, order));
    case Gen::F: return -(exp_h_rep(j, 1.0, true, order) * rep_generator(j, Gen::F, true, order));
    default: return -rep_generator(j, Gen::H, true, order);
    }
}

} // namespace

RepMatrix rep_antipode(const std::vector<Gen>& word, SpinLabel j, bool deformed, int order) {
    RepMatrix m = RepMatrix::identity(TensorBasis::single(j), order);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        m = m * rep_antipode_letter(*it, j, deformed, order);
    return m;
}

RepMatrix antipode_conjugator(SpinLabel j, bool deformed, int order) {
    const TensorBasis basis = TensorBasis::single(j);
    RepMatrix w(basis, basis, order);
    for (int k = 0; k < j.dim(); ++k) {
        const int two_m = two_m_at(j, k);
        const int jm = (j.two_j - two_m) / 2; // j - m
        HSeries e = exp_h_v(static_cast<double>(jm), order, deformed);
        if (jm % 2 != 0) e *= -1.0;
        w.at(weight_index(j, -two_m), k) = e;
    }
    return w;
}

RepMatrix legwise_antipode(const RepMatrix& m, bool deformed) {
    const auto& f = m.row_basis().factors;
    if (f.size() != 2 || m.col_basis().factors != f)
        throw DimensionMismatch("legwise antipode needs a square two-factor operator");
    RepMatrix w = RepMatrix::kron(antipode_conjugator(f[0], deformed, m.order()),
                                  antipode_conjugator(f[1], deformed, m.order()));
    return w * m.transposed() * w.inverse();
}

RepMatrix rep_tensor_coproduct(Gen g, SpinLabel j1, SpinLabel j2, bool deformed, int order) {
    const RepMatrix id1 = RepMatrix::identity(TensorBasis::single(j1), order);
    const RepMatrix id2 = RepMatrix::identity(TensorBasis::single(j2), order);
    const RepMatrix g1 = rep_generator(j1, g, deformed, order);
    const RepMatrix g2 = rep_generator(j2, g, deformed, order);
    if (!deformed || g == Gen::H)
        return RepMatrix::kron(g1, id2) + RepMatrix::kron(id1, g2);
    if (g == Gen::E)
        return RepMatrix::kron(g1, exp_h_rep(j2, 1.0, true, order)) + RepMatrix::kron(id1, g2);
    return RepMatrix::kron(g1, id2) + RepMatrix::kron(exp_h_rep(j1, -1.0, true, order), g2);
}

RepMatrix rep_tensor_coproduct_op(Gen g, SpinLabel j1, SpinLabel j2, int order) {
    const RepMatrix id1 = RepMatrix::identity(TensorBasis::single(j1), order);
    const RepMatrix id2 = RepMatrix::identity(TensorBasis::single(j2), order);
    const RepMatrix g1 = rep_generator(j1, g, true, order);
    const RepMatrix g2 = rep_generator(j2, g, true, order);
    switch (g) {
    case Gen::E:
        return RepMatrix::kron(exp_h_rep(j1, 1.0, true, order), g2) + RepMatrix::kron(g1, id2);
    case Gen::F:
        return RepMatrix::kron(id1, g2) + RepMatrix::kron(g1, exp_h_rep(j2, -1.0, true, order));
    default:
        return RepMatrix::kron(g1, id2) + RepMatrix::kron(id1, g2);
    }
}

RepMatrix rmatrix_rep(SpinLabel j1, SpinLabel j2, int order) {
    const TensorBasis basis = TensorBasis::pair(j1, j2);
    RepMatrix sum(basis, basis, order);
    const RepMatrix e1 = rep_generator(j1, Gen::E, true, order);
    const RepMatrix f2 = rep_generator(j2, Gen::F, true, order);
    RepMatrix epow = RepMatrix::identity(TensorBasis::single(j1), order);
    RepMatrix fpow = RepMatrix::identity(TensorBasis::single(j2), order);
    const HSeries lambda = exp_h(1.0, order) - exp_h(-1.0, order); // q - q^{-1}
    HSeries coeff = HSeries::one(order);
    const int nmax = std::min(j1.two_j, j2.two_j);
    for (int n = 0;; ++n) {
        RepMatrix term = RepMatrix::kron(epow, fpow);
        term *= coeff;
        sum += term;
        if (n == nmax) break;
        epow = epow * e1;
        fpow = fpow * f2;
        // e^{h n(n-1)/2} (q - q^{-1})^n / [n]! stepped up by one n.
        coeff = HSeries::mul(coeff, exp_h(static_cast<double>(n), order));
        coeff = HSeries::mul(coeff, lambda);
        coeff = HSeries::mul(coeff, qnum(n + 1, order).inverse());
    }
    // Prefactor e^{h (H (x) H)/2} acts diagonally as e^{2 h m1 m2}.
    RepMatrix r(basis, basis, order);
    const int d2 = j2.dim();
    for (int k1 = 0; k1 < j1.dim(); ++k1)
        for (int k2 = 0; k2 < d2; ++k2) {
            const HSeries pre = exp_h(two_m_at(j1, k1) * two_m_at(j2, k2) / 2.0, order);
            const int row = k1 * d2 + k2;
            for (int c = 0; c < sum.cols(); ++c) r.at(row, c) = HSeries::mul(pre, sum.at(row, c));
        }
    return r;
}

RepMatrix rmatrix_rep_inverse(SpinLabel j1, SpinLabel j2, int order) {
    return rmatrix_rep(j1, j2, order).inverse();
}

HSeries casimir_rep(SpinLabel j, int order) {
    const RepMatrix e = rep_generator(j, Gen::E, false, order);
    const RepMatrix f = rep_generator(j, Gen::F, false, order);
    const RepMatrix h = rep_generator(j, Gen::H, false, order);
    RepMatrix c = h * h;
    c *= HSeries(0.125, order);
    RepMatrix ef = e * f + f * e;
    ef *= HSeries(0.25, order);
    c += ef;
    return c.at(0, 0);
}

RepMatrix split_casimir_exp_rep(SpinLabel j1, SpinLabel j2, int order, double scale) {
    // t = (H (x) H)/8 + (E (x) F + F (x) E)/4 from the inverse Killing form.
    const RepMatrix e1 = rep_generator(j1, Gen::E, false, order);
    const RepMatrix f1 = rep_generator(j1, Gen::F, false, order);
    const RepMatrix h1 = rep_generator(j1, Gen::H, false, order);
    const RepMatrix e2 = rep_generator(j2, Gen::E, false, order);
    const RepMatrix f2 = rep_generator(j2, Gen::F, false, order);
    const RepMatrix h2 = rep_generator(j2, Gen::H, false, order);
    RepMatrix t = RepMatrix::kron(h1, h2);
    t *= HSeries(0.125 * scale, order);
    RepMatrix mix = RepMatrix::kron(e1, f2) + RepMatrix::kron(f1, e2);
    mix *= HSeries(0.25 * scale, order);
    t += mix;
    // exp(h t): the h factor shifts each power up one order, so the series
    // terminates at the working order.
    RepMatrix result = RepMatrix::identity(t.row_basis(), order);
    RepMatrix power = result;
    for (int k = 1; k < order; ++k) {
        power = power * t;
        power *= HSeries(1.0 / static_cast<double>(k), order);
        RepMatrix shifted(power.row_basis(), power.col_basis(), order);
        for (int r = 0; r < power.rows(); ++r)
            for (int c = 0; c < power.cols(); ++c) {
                const HSeries& src = power.at(r, c);
                HSeries& dst = shifted.at(r, c);
                for (int i = 0; i + k < order; ++i) dst[i + k] = src[i];
            }
        result += shifted;
    }
    return result;
}

RepMatrix sigma_rep(SpinLabel j, int order) {
    return exp_h_rep(j, 0.5, true, order);
}

} // namespace qspace
