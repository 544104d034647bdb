#pragma once

#include "crm/rational.hpp"

#include <string>
#include <vector>

namespace crm {

struct InverseWeight;

// mu_1 = 1 > mu_2 >= ... >= mu_n >= 0.
struct Weight {
    std::vector<Rational> mu;

    Weight() = default;
    explicit Weight(std::vector<Rational> m) : mu(std::move(m)) {}

    int n() const { return static_cast<int>(mu.size()); }
    const Rational& operator[](int j) const { return mu[j]; }
    // Throws InputError when the ordering invariant fails.
    void validate() const;
    InverseWeight inverse() const;
    friend bool operator==(const Weight& a, const Weight& b) { return a.mu == b.mu; }
};

struct InverseWeight {
    std::vector<ExtRational> lambda;

    InverseWeight() = default;
    explicit InverseWeight(std::vector<ExtRational> l) : lambda(std::move(l)) {}
    static InverseWeight finite(const std::vector<Rational>& l);

    int n() const { return static_cast<int>(lambda.size()); }
    const ExtRational& operator[](int j) const { return lambda[j]; }
    void validate() const;
    Weight inverse() const;
    bool all_finite() const;

    friend bool operator==(const InverseWeight& a, const InverseWeight& b) { return a.lambda == b.lambda; }
    friend bool operator!=(const InverseWeight& a, const InverseWeight& b) { return !(a == b); }
    // Lexicographic.
    friend bool operator<(const InverseWeight& a, const InverseWeight& b);
};

// "(1, 8, 12)", infinite slots as "inf".
std::string to_string(const InverseWeight& l);
std::string to_string(const Weight& w);

}  // namespace crm
