#pragma once

#include "crm/complex.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crm {

// Exponents of z^alpha zbar^beta, stored flat as [alpha_1..alpha_n, beta_1..beta_n].
// Variable indices are 0-based internally; z1 is index 0.
class MultiIndexPair {
public:
    MultiIndexPair() = default;
    explicit MultiIndexPair(int n) : e_(2 * static_cast<std::size_t>(n), 0) {}
    MultiIndexPair(const std::vector<int>& alpha, const std::vector<int>& beta);

    int n() const { return static_cast<int>(e_.size() / 2); }
    int alpha(int j) const { return e_[j]; }
    int beta(int j) const { return e_[n() + j]; }
    int& alpha(int j) { return e_[j]; }
    int& beta(int j) { return e_[n() + j]; }
    std::vector<int> alpha_vec() const;
    std::vector<int> beta_vec() const;
    const std::vector<int>& flat() const { return e_; }

    int total_degree() const;
    int degree_in(int j) const { return alpha(j) + beta(j); }
    bool balanced() const;
    bool pure() const;  // alpha = 0 or beta = 0
    bool holomorphic() const;
    bool constant() const { return total_degree() == 0; }
    MultiIndexPair conj() const;
    // True if every variable with nonzero exponent lies in [lo, hi].
    bool supported_in(int lo, int hi) const;

    friend MultiIndexPair operator+(const MultiIndexPair& a, const MultiIndexPair& b);
    friend bool operator==(const MultiIndexPair& a, const MultiIndexPair& b) { return a.e_ == b.e_; }

private:
    std::vector<int> e_;
};

// Graded, then lexicographic on the flat exponent vector.
struct GradedLex {
    bool operator()(const MultiIndexPair& a, const MultiIndexPair& b) const;
};

// General polynomial in z, zbar with complex rational coefficients.
class Poly {
public:
    using TermMap = std::map<MultiIndexPair, Complex, GradedLex>;

    Poly() = default;
    explicit Poly(int n) : n_(n) {}

    static Poly constant(int n, const Complex& c);
    static Poly z(int n, int j);
    static Poly zbar(int n, int j);
    static Poly monomial(const MultiIndexPair& m, const Complex& c);

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Complex coeff(const MultiIndexPair& m) const;
    Complex constant_term() const;

    void add_term(const MultiIndexPair& m, const Complex& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Complex& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Complex& c) { return a *= c; }
    friend Poly operator*(const Complex& c, Poly a) { return a *= c; }
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;
    Poly conj() const;
    bool is_real() const;
    bool is_holomorphic() const;
    Poly real_part() const;  // (p + conj p)/2
    Poly imag_part() const;  // (p - conj p)/(2i)

    // Wirtinger derivatives.
    Poly dz(int j) const;
    Poly dzbar(int j) const;
    Poly deriv_multi(const std::vector<int>& alpha, const std::vector<int>& beta) const;

    int total_degree() const;  // -1 for zero
    int degree_in(int j) const;
    Poly truncate(int maxDegree) const;
    Poly filter(const std::function<bool(const MultiIndexPair&, const Complex&)>& keep) const;
    // Sets z_j = 0 for every j outside [lo, hi].
    Poly restrict_to(int lo, int hi) const;

    Complex eval(const std::vector<Complex>& z) const;

    // Replace z_j by images[j] and zbar_j by conj(images[j]).
    Poly substitute(const std::vector<Poly>& images) const;
    // Replace z_j by zImages[j] and zbar_j by zbarImages[j] independently.
    Poly substitute(const std::vector<Poly>& zImages, const std::vector<Poly>& zbarImages) const;

private:
    int n_ = 0;
    TermMap terms_;
};

void check_same_dim(const Poly& a, const Poly& b);

// Re-parseable text.
std::string to_string(const Poly& p);

}  // namespace crm
