#pragma once

#include "crm/poly.hpp"
#include "crm/weight.hpp"

#include <map>
#include <optional>
#include <utility>

namespace crm {

// Real-valued polynomial: C_{beta,alpha} = conj(C_{alpha,beta}) for every term.
class HermPoly {
public:
    HermPoly() = default;
    explicit HermPoly(int n) : p_(n) {}
    // Throws NotRealError unless p is Hermitian.
    explicit HermPoly(Poly p);

    int n() const { return p_.n(); }
    const Poly& poly() const { return p_; }
    const Poly::TermMap& terms() const { return p_.terms(); }
    bool is_zero() const { return p_.is_zero(); }
    std::size_t size() const { return p_.size(); }
    Complex coeff(const MultiIndexPair& m) const { return p_.coeff(m); }

    HermPoly& operator+=(const HermPoly& o) { p_ += o.p_; return *this; }
    HermPoly& operator-=(const HermPoly& o) { p_ -= o.p_; return *this; }
    friend HermPoly operator+(HermPoly a, const HermPoly& b) { return a += b; }
    friend HermPoly operator-(HermPoly a, const HermPoly& b) { return a -= b; }
    friend HermPoly operator*(const HermPoly& a, const HermPoly& b);
    friend HermPoly operator*(const Rational& c, const HermPoly& a);
    friend HermPoly operator-(const HermPoly& a);
    friend bool operator==(const HermPoly& a, const HermPoly& b) { return a.p_ == b.p_; }
    friend bool operator!=(const HermPoly& a, const HermPoly& b) { return !(a == b); }

private:
    struct Trusted {};
    HermPoly(Poly p, Trusted) : p_(std::move(p)) {}
    Poly p_;

    friend HermPoly trusted_herm(Poly p);
};

// For internal results that are real by construction; still asserted in debug builds.
HermPoly trusted_herm(Poly p);

std::string to_string(const HermPoly& p);

// (alpha + beta | mu); slots with mu_i = 0 contribute 0.
Rational weighted_order(const MultiIndexPair& m, const Weight& mu);

// Terms partitioned by exact weighted order.
std::map<Rational, HermPoly> grade(const HermPoly& p, const Weight& mu);
HermPoly leading_model(const HermPoly& p, const Weight& mu);  // weight exactly 1
HermPoly tail(const HermPoly& p, const Weight& mu);           // weight > 1

struct HarmonicElimination {
    HermPoly reduced;  // -2Re z1 + f with f free of pure monomials
    Poly h;            // holomorphic, in z_2..z_n
};

// Absorbs pure terms of f into z1 via z1 -> z1 + h. Requires r = -2Re z1 + f(z').
HarmonicElimination eliminate_harmonic(const HermPoly& r);

// Balanced monomial supported on z_lo..z_hi (0-based) whose degree sequence is
// maximal comparing the last variable first.
std::optional<MultiIndexPair> revlex_max_balanced(const HermPoly& p, int lo, int hi);
// Order used above: true if a < b in reverse lexicographic comparison over [lo, hi].
bool revlex_less(const MultiIndexPair& a, const MultiIndexPair& b, int lo, int hi);

// The z1 part: returns the coefficient a with r = a z1 + conj(a) zbar1 + f(z'), throwing
// InputError if z1 enters otherwise or a = 0.
Complex model_z1_coefficient(const HermPoly& r);
// f(z') of a model, i.e. r minus its z1-linear part.
HermPoly model_part(const HermPoly& r);
// -2Re z1 + f.
HermPoly make_model(const HermPoly& f);

}  // namespace crm
