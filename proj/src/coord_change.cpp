#include "crm/coord_change.hpp"

#include "crm/errors.hpp"
#include "crm/linalg.hpp"

namespace crm {

CoordChange::CoordChange(std::vector<Poly> maps, Weight mu) : maps_(std::move(maps)), mu_(std::move(mu)) {
    for (const auto& q : maps_) {
        if (q.n() != n()) throw DimensionError("coordinate map has wrong dimension");
        if (!q.is_holomorphic()) throw InputError("coordinate change must be holomorphic");
    }
    if (mu_.n() != n()) throw DimensionError("coordinate change weight has wrong dimension");
}

CoordChange CoordChange::identity(int n, const Weight& mu) {
    std::vector<Poly> maps;
    for (int j = 0; j < n; ++j) maps.push_back(Poly::z(n, j));
    return {std::move(maps), mu};
}

CoordChange CoordChange::linear_block(int n, const Weight& mu, const std::vector<int>& idx,
                                      const std::vector<std::vector<Complex>>& M) {
    CoordChange c = identity(n, mu);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        Poly q(n);
        for (std::size_t b = 0; b < idx.size(); ++b) q += Poly::z(n, idx[b]) * M[a][b];
        c.maps_[idx[a]] = q;
    }
    return c;
}

bool CoordChange::is_identity() const {
    for (int j = 0; j < n(); ++j)
        if (maps_[j] != Poly::z(n(), j)) return false;
    return true;
}

void CoordChange::validate() const {
    for (int j = 0; j < n(); ++j) {
        for (const auto& [m, c] : maps_[j].terms()) {
            Rational w = weighted_order(m, mu_);
            if (w < mu_[j])
                throw InputError("coordinate map for z" + std::to_string(j + 1) + " has a term below its weight");
            if (w == mu_[j] && sgn(mu_[j]) > 0 && m.total_degree() > 1) {
                for (int k = 0; k < n(); ++k)
                    if (m.alpha(k) && mu_[k] == mu_[j])
                        throw InputError("nonlinear term in an equal-weight variable for z" + std::to_string(j + 1));
            }
        }
    }
    // Equal-weight blocks of the linear part must be invertible.
    std::vector<bool> done(n(), false);
    for (int j = 0; j < n(); ++j) {
        if (done[j]) continue;
        std::vector<int> block;
        for (int k = j; k < n(); ++k)
            if (mu_[k] == mu_[j]) block.push_back(k);
        CMatrix B(block.size(), std::vector<Complex>(block.size()));
        for (std::size_t a = 0; a < block.size(); ++a) {
            done[block[a]] = true;
            for (std::size_t b = 0; b < block.size(); ++b) {
                MultiIndexPair lin(n());
                lin.alpha(block[b]) = 1;
                B[a][b] = maps_[block[a]].coeff(lin);
            }
        }
        if (rank(B) != static_cast<int>(block.size()))
            throw InputError("coordinate change has a singular equal-weight block at z" + std::to_string(j + 1));
    }
}

bool CoordChange::respects_weight() const {
    try {
        validate();
        return true;
    } catch (const InputError&) {
        return false;
    }
}

Poly CoordChange::apply(const Poly& p) const {
    if (p.n() != n()) throw DimensionError("coordinate change and polynomial dimensions differ");
    return p.substitute(maps_);
}

HermPoly CoordChange::apply(const HermPoly& p) const {
    return trusted_herm(apply(p.poly()));
}

CoordChange compose(const CoordChange& second, const CoordChange& first) {
    if (second.n() != first.n()) throw DimensionError("composed changes differ in dimension");
    std::vector<Poly> maps;
    for (const auto& q : first.maps()) maps.push_back(q.substitute(second.maps()));
    return {std::move(maps), first.weight()};
}

HermPoly substitute(const HermPoly& p, const CoordChange& c) {
    return c.apply(p);
}

}  // namespace crm
