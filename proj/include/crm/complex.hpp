#pragma once

#include "crm/rational.hpp"

#include <string>

namespace crm {

// Exact complex rational.
struct Complex {
    Rational re{0};
    Rational im{0};

    Complex() = default;
    Complex(Rational r) : re(std::move(r)) {}
    Complex(long r) : re(r) {}
    Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return {0, 1}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    Complex conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

// Re-parseable: "3/2", "-i", "(1/2+3*i)".
std::string to_string(const Complex& c);

}  // namespace crm
