#pragma once

#include "crm/complex.hpp"

#include <optional>
#include <vector>

namespace crm {

using CVector = std::vector<Complex>;
using CMatrix = std::vector<CVector>;

int rank(CMatrix M);
// Basis of {x : M x = 0}.
std::vector<CVector> nullspace(CMatrix M, int cols);
// Unique solution of M x = b; nullopt if M is singular.
std::optional<CVector> solve(CMatrix M, CVector b);

// Congruence B^* H B = diag(d) with B invertible, for Hermitian H.
struct Congruence {
    CMatrix basis;  // column k is basis[.][k]
    std::vector<Rational> diag;

    CVector column(int k) const;
    int rank() const;
    bool psd() const;
    // Index of the first negative pivot, if any.
    std::optional<int> negative_pivot() const;
};

Congruence diagonalize_hermitian(const CMatrix& H);

// sum_{i,j} conj(a_i) H_ij a_j
Complex hermitian_form(const CMatrix& H, const CVector& a);

}  // namespace crm
