#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace crm {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" or "p", always canonical; no decimal point ever.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", "-p/q" and finite decimals like "0.25".
Rational parse_rational(const std::string& s);

Integer floor_of(const Rational& q);
Rational pow(const Rational& q, unsigned e);
Integer factorial(unsigned k);

// Extended nonnegative rational: a value or +inf.
struct ExtRational {
    bool inf = false;
    Rational value;

    static ExtRational infinity() { return {true, 0}; }
    static ExtRational of(const Rational& q) { return {false, q}; }

    bool is_inf() const { return inf; }
    // 0 <-> inf under inversion.
    ExtRational inverse() const;
    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.inf == b.inf && (a.inf || a.value == b.value);
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.value < b.value;
    }
};

std::string to_string(const ExtRational& x);
ExtRational parse_ext_rational(const std::string& s);

}  // namespace crm
