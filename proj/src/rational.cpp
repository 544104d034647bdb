#include "crm/rational.hpp"

#include "crm/complex.hpp"
#include "crm/errors.hpp"

#include <cctype>

namespace crm {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string intPart = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !intPart.empty() && intPart[0] == '-';
        if (neg || (!intPart.empty() && intPart[0] == '+')) intPart = intPart.substr(1);
        if (intPart.empty()) intPart = "0";
        for (char c : intPart + frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad decimal '" + s + "'");
        Integer den = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
        Rational q(Integer(intPart + frac), den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InputError("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational pow(const Rational& q, unsigned e) {
    Rational r = 1;
    for (unsigned k = 0; k < e; ++k) r *= q;
    return r;
}

Integer factorial(unsigned k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

ExtRational ExtRational::inverse() const {
    if (inf) return of(0);
    if (sgn(value) == 0) return infinity();
    return of(1 / value);
}

std::string to_string(const ExtRational& x) {
    return x.inf ? "inf" : to_string(x.value);
}

ExtRational parse_ext_rational(const std::string& s) {
    if (s == "inf" || s == "+inf" || s == "Infinity") return ExtRational::infinity();
    return ExtRational::of(parse_rational(s));
}

Complex& Complex::operator/=(const Complex& o) {
    Rational d = o.norm2();
    if (sgn(d) == 0) throw std::domain_error("complex division by zero");
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

std::string to_string(const Complex& c) {
    if (c.is_real()) return to_string(c.re);
    std::string imPart;
    if (c.im == 1)
        imPart = "i";
    else if (c.im == -1)
        imPart = "-i";
    else
        imPart = to_string(c.im) + "*i";
    if (sgn(c.re) == 0) return imPart;
    std::string s = "(" + to_string(c.re);
    s += (sgn(c.im) > 0 ? "+" : "") + imPart + ")";
    return s;
}

}  // namespace crm
