#pragma once

#include "crm/poly.hpp"

#include <vector>

namespace crm {

// Complex vector field sum_k hol[k] d/dz_k + anti[k] d/dzbar_k with polynomial
// coefficients. Type (1,0) fields have anti == 0; conjugates are formed on demand.
struct VField {
    std::vector<Poly> hol;
    std::vector<Poly> anti;

    VField() = default;
    explicit VField(int n);
    static VField type10(std::vector<Poly> coefficients);
    int n() const { return static_cast<int>(hol.size()); }
    bool is_type10() const;
    VField conj() const;
    // Derivation applied to f.
    Poly apply(const Poly& f) const;
    // Same, keeping only terms of degree <= maxDegree.
    Poly apply_truncated(const Poly& f, int maxDegree) const;
    VField truncated(int maxDegree) const;
    friend bool operator==(const VField& a, const VField& b) { return a.hol == b.hol && a.anti == b.anti; }
};

VField bracket(const VField& X, const VField& Y);

// The (1,0) part of dr applied to Z: sum_k Z.hol[k] * dr/dz_k.
Poly contract_dr(const Poly& r, const VField& Z);

// Levi pairing sum_{a,b} r_{z_a zbar_b} X^a conj(Y^b) of two (1,0) fields.
Poly levi_pairing(const Poly& r, const VField& X, const VField& Y);

std::string to_string(const VField& X);

}  // namespace crm
