#pragma once

#include "crm/herm_poly.hpp"

#include <vector>

namespace crm {

// Holomorphic polynomial change z -> c(z), graded by a declared weight.
class CoordChange {
public:
    CoordChange() = default;
    CoordChange(std::vector<Poly> maps, Weight mu);

    static CoordChange identity(int n, const Weight& mu);
    // z_j -> sum_k M[j][k] z_k restricted to the listed indices; others fixed.
    static CoordChange linear_block(int n, const Weight& mu, const std::vector<int>& idx,
                                    const std::vector<std::vector<Complex>>& M);

    int n() const { return static_cast<int>(maps_.size()); }
    const std::vector<Poly>& maps() const { return maps_; }
    const Weight& weight() const { return mu_; }
    bool is_identity() const;

    // Throws InputError listing the first violated grading condition.
    void validate() const;
    bool respects_weight() const;

    Poly apply(const Poly& p) const;
    HermPoly apply(const HermPoly& p) const;

    friend bool operator==(const CoordChange& a, const CoordChange& b) { return a.maps_ == b.maps_; }

private:
    std::vector<Poly> maps_;
    Weight mu_;
};

// apply(compose(second, first), p) == apply(second, apply(first, p)).
CoordChange compose(const CoordChange& second, const CoordChange& first);

HermPoly substitute(const HermPoly& p, const CoordChange& c);

}  // namespace crm
