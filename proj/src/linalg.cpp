#include "crm/linalg.hpp"

#include <stdexcept>

namespace crm {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(CMatrix& M, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < cols && row < static_cast<int>(M.size()); ++c) {
        int p = -1;
        for (int r = row; r < static_cast<int>(M.size()); ++r)
            if (!M[r][c].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(M[row], M[p]);
        Complex inv = Complex(1) / M[row][c];
        for (int k = c; k < cols; ++k) M[row][k] *= inv;
        for (int r = 0; r < static_cast<int>(M.size()); ++r) {
            if (r == row || M[r][c].is_zero()) continue;
            Complex f = M[r][c];
            for (int k = c; k < cols; ++k) M[r][k] -= f * M[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(CMatrix M) {
    if (M.empty()) return 0;
    return static_cast<int>(echelon(M, static_cast<int>(M[0].size())).size());
}

std::vector<CVector> nullspace(CMatrix M, int cols) {
    auto piv = echelon(M, cols);
    std::vector<bool> isPivot(cols, false);
    for (int c : piv) isPivot[c] = true;
    std::vector<CVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        CVector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -M[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<CVector> solve(CMatrix M, CVector b) {
    int n = static_cast<int>(M.size());
    for (int r = 0; r < n; ++r) M[r].push_back(b[r]);
    auto piv = echelon(M, n);
    if (static_cast<int>(piv.size()) != n) return std::nullopt;
    CVector x(n);
    for (int r = 0; r < n; ++r) x[r] = M[r][n];
    return x;
}

CVector Congruence::column(int k) const {
    CVector v;
    for (const auto& row : basis) v.push_back(row[k]);
    return v;
}

int Congruence::rank() const {
    int r = 0;
    for (const auto& d : diag)
        if (sgn(d) != 0) ++r;
    return r;
}

bool Congruence::psd() const {
    return !negative_pivot().has_value();
}

std::optional<int> Congruence::negative_pivot() const {
    for (std::size_t k = 0; k < diag.size(); ++k)
        if (sgn(diag[k]) < 0) return static_cast<int>(k);
    return std::nullopt;
}

Congruence diagonalize_hermitian(const CMatrix& H0) {
    int n = static_cast<int>(H0.size());
    CMatrix H = H0;
    CMatrix B(n, CVector(n));
    for (int k = 0; k < n; ++k) B[k][k] = 1;
    // Column ops on B mirror the congruence applied to H.
    auto addCol = [&](int dst, int src, const Complex& x) {
        // b_dst += x b_src ; H <- E^* H E
        for (int r = 0; r < n; ++r) B[r][dst] += x * B[r][src];
        for (int r = 0; r < n; ++r) H[r][dst] += x * H[r][src];
        for (int c = 0; c < n; ++c) H[dst][c] += x.conj() * H[src][c];
    };
    std::vector<Rational> d(n);
    for (int p = 0; p < n; ++p) {
        if (H[p][p].is_zero()) {
            int q = -1;
            for (int k = p + 1; k < n; ++k)
                if (!H[p][k].is_zero()) {
                    q = k;
                    break;
                }
            if (q >= 0) {
                if (!H[q][q].is_zero()) {
                    // Bring the nonzero diagonal into slot p.
                    addCol(p, q, Complex(1));
                    if (H[p][p].is_zero()) addCol(p, q, Complex(1));
                } else {
                    addCol(p, q, H[q][p]);
                }
            }
        }
        if (H[p][p].is_zero()) {
            d[p] = 0;
            continue;
        }
        if (!H[p][p].is_real()) throw std::logic_error("diagonalize_hermitian: non-Hermitian input");
        Rational piv = H[p][p].re;
        d[p] = piv;
        for (int r = p + 1; r < n; ++r) {
            if (H[p][r].is_zero()) continue;
            addCol(r, p, -(H[p][r] / Complex(piv)));
        }
    }
    return {B, d};
}

Complex hermitian_form(const CMatrix& H, const CVector& a) {
    Complex s;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) s += a[i].conj() * H[i][j] * a[j];
    return s;
}

}  // namespace crm
