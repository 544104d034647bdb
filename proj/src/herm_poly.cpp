#include "crm/herm_poly.hpp"

#include "crm/errors.hpp"

#include <cassert>

namespace crm {

HermPoly::HermPoly(Poly p) : p_(std::move(p)) {
    if (!p_.is_real()) throw NotRealError("polynomial is not real-valued (Hermitian symmetry fails): " + to_string(p_));
}

HermPoly trusted_herm(Poly p) {
    assert(p.is_real());
    return HermPoly(std::move(p), HermPoly::Trusted{});
}

HermPoly operator*(const HermPoly& a, const HermPoly& b) {
    return trusted_herm(a.p_ * b.p_);
}

HermPoly operator*(const Rational& c, const HermPoly& a) {
    return trusted_herm(a.p_ * Complex(c));
}

HermPoly operator-(const HermPoly& a) {
    return trusted_herm(-a.p_);
}

std::string to_string(const HermPoly& p) {
    return to_string(p.poly());
}

Rational weighted_order(const MultiIndexPair& m, const Weight& mu) {
    if (m.n() != mu.n()) throw DimensionError("weight and monomial dimensions differ");
    Rational s = 0;
    for (int j = 0; j < m.n(); ++j)
        if (m.degree_in(j)) s += m.degree_in(j) * mu[j];
    return s;
}

std::map<Rational, HermPoly> grade(const HermPoly& p, const Weight& mu) {
    std::map<Rational, Poly> parts;
    for (const auto& [m, c] : p.terms()) {
        auto [it, _] = parts.try_emplace(weighted_order(m, mu), Poly(p.n()));
        it->second.add_term(m, c);
    }
    std::map<Rational, HermPoly> out;
    // Conjugate monomials share their weight, so each part stays real.
    for (auto& [w, q] : parts) out.emplace(w, trusted_herm(std::move(q)));
    return out;
}

HermPoly leading_model(const HermPoly& p, const Weight& mu) {
    return trusted_herm(p.poly().filter(
        [&](const MultiIndexPair& m, const Complex&) { return weighted_order(m, mu) == 1; }));
}

HermPoly tail(const HermPoly& p, const Weight& mu) {
    return trusted_herm(p.poly().filter(
        [&](const MultiIndexPair& m, const Complex&) { return weighted_order(m, mu) > 1; }));
}

Complex model_z1_coefficient(const HermPoly& r) {
    if (r.n() < 1) throw InputError("empty dimension");
    MultiIndexPair z1(r.n());
    z1.alpha(0) = 1;
    for (const auto& [m, c] : r.terms()) {
        if (m.degree_in(0) == 0) continue;
        if (m.total_degree() != 1)
            throw InputError("z1 must enter the model only through a linear real part; offending term in " +
                             to_string(r));
    }
    Complex a = r.coeff(z1);
    if (a.is_zero()) throw InputError("model has no z1-linear part");
    return a;
}

HermPoly model_part(const HermPoly& r) {
    model_z1_coefficient(r);
    return trusted_herm(r.poly().filter([](const MultiIndexPair& m, const Complex&) { return m.degree_in(0) == 0; }));
}

HermPoly make_model(const HermPoly& f) {
    Poly r = f.poly();
    r -= Poly::z(f.n(), 0);
    r -= Poly::zbar(f.n(), 0);
    return trusted_herm(std::move(r));
}

HarmonicElimination eliminate_harmonic(const HermPoly& r) {
    Complex a = model_z1_coefficient(r);
    Poly hol(r.n());
    Poly kept(r.n());
    for (const auto& [m, c] : r.terms()) {
        if (m.degree_in(0) == 0 && m.pure() && !m.constant()) {
            if (m.holomorphic()) hol.add_term(m, c);
        } else {
            kept.add_term(m, c);
        }
    }
    // a(z1 + h) + conj(a)(zbar1 + conj h) cancels 2Re(hol) when a h = -hol.
    Poly h = hol * (Complex(-1) / a);
    return {trusted_herm(std::move(kept)), std::move(h)};
}

bool revlex_less(const MultiIndexPair& a, const MultiIndexPair& b, int lo, int hi) {
    for (int j = hi; j >= lo; --j) {
        if (a.degree_in(j) != b.degree_in(j)) return a.degree_in(j) < b.degree_in(j);
    }
    return false;
}

std::optional<MultiIndexPair> revlex_max_balanced(const HermPoly& p, int lo, int hi) {
    std::optional<MultiIndexPair> best;
    for (const auto& [m, c] : p.terms()) {
        if (!m.balanced() || m.constant() || !m.supported_in(lo, hi)) continue;
        if (!best || revlex_less(*best, m, lo, hi)) best = m;
    }
    return best;
}

}  // namespace crm
