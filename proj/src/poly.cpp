#include "crm/poly.hpp"

#include "crm/errors.hpp"

#include <algorithm>
#include <numeric>

namespace crm {

MultiIndexPair::MultiIndexPair(const std::vector<int>& alpha, const std::vector<int>& beta) {
    if (alpha.size() != beta.size()) throw DimensionError("alpha and beta lengths differ");
    e_ = alpha;
    e_.insert(e_.end(), beta.begin(), beta.end());
    for (int v : e_)
        if (v < 0) throw InputError("negative exponent");
}

std::vector<int> MultiIndexPair::alpha_vec() const {
    return {e_.begin(), e_.begin() + n()};
}

std::vector<int> MultiIndexPair::beta_vec() const {
    return {e_.begin() + n(), e_.end()};
}

int MultiIndexPair::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool MultiIndexPair::balanced() const {
    for (int j = 0; j < n(); ++j)
        if (alpha(j) != beta(j)) return false;
    return true;
}

bool MultiIndexPair::pure() const {
    bool a0 = true, b0 = true;
    for (int j = 0; j < n(); ++j) {
        a0 = a0 && alpha(j) == 0;
        b0 = b0 && beta(j) == 0;
    }
    return a0 || b0;
}

bool MultiIndexPair::holomorphic() const {
    for (int j = 0; j < n(); ++j)
        if (beta(j) != 0) return false;
    return true;
}

MultiIndexPair MultiIndexPair::conj() const {
    MultiIndexPair r(n());
    for (int j = 0; j < n(); ++j) {
        r.alpha(j) = beta(j);
        r.beta(j) = alpha(j);
    }
    return r;
}

bool MultiIndexPair::supported_in(int lo, int hi) const {
    for (int j = 0; j < n(); ++j)
        if ((j < lo || j > hi) && degree_in(j) != 0) return false;
    return true;
}

MultiIndexPair operator+(const MultiIndexPair& a, const MultiIndexPair& b) {
    MultiIndexPair r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
}

bool GradedLex::operator()(const MultiIndexPair& a, const MultiIndexPair& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.flat() < b.flat();
}

void check_same_dim(const Poly& a, const Poly& b) {
    if (a.n() != b.n())
        throw DimensionError("dimension mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

Poly Poly::constant(int n, const Complex& c) {
    Poly p(n);
    p.add_term(MultiIndexPair(n), c);
    return p;
}

Poly Poly::z(int n, int j) {
    MultiIndexPair m(n);
    m.alpha(j) = 1;
    return monomial(m, 1);
}

Poly Poly::zbar(int n, int j) {
    MultiIndexPair m(n);
    m.beta(j) = 1;
    return monomial(m, 1);
}

Poly Poly::monomial(const MultiIndexPair& m, const Complex& c) {
    Poly p(m.n());
    p.add_term(m, c);
    return p;
}

Complex Poly::coeff(const MultiIndexPair& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex() : it->second;
}

Complex Poly::constant_term() const {
    return coeff(MultiIndexPair(n_));
}

void Poly::add_term(const MultiIndexPair& m, const Complex& c) {
    if (m.n() != n_) throw DimensionError("monomial dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_dim(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_dim(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Complex& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_dim(a, b);
    Poly r(a.n());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(n_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::conj() const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj(), c.conj());
    return r;
}

bool Poly::is_real() const {
    for (const auto& [m, c] : terms_) {
        auto it = terms_.find(m.conj());
        if (it == terms_.end() || it->second != c.conj()) return false;
    }
    return true;
}

bool Poly::is_holomorphic() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.holomorphic(); });
}

Poly Poly::real_part() const {
    return (*this + conj()) * Complex(Rational(1, 2));
}

Poly Poly::imag_part() const {
    return (*this - conj()) * Complex(0, Rational(-1, 2));
}

Poly Poly::dz(int j) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) {
        if (m.alpha(j) == 0) continue;
        MultiIndexPair d = m;
        d.alpha(j) -= 1;
        r.terms_.emplace(d, c * Complex(m.alpha(j)));
    }
    return r;
}

Poly Poly::dzbar(int j) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) {
        if (m.beta(j) == 0) continue;
        MultiIndexPair d = m;
        d.beta(j) -= 1;
        r.terms_.emplace(d, c * Complex(m.beta(j)));
    }
    return r;
}

Poly Poly::deriv_multi(const std::vector<int>& alpha, const std::vector<int>& beta) const {
    if (static_cast<int>(alpha.size()) != n_ || static_cast<int>(beta.size()) != n_)
        throw DimensionError("derivative multi-index has wrong length");
    Poly r = *this;
    for (int j = 0; j < n_; ++j) {
        for (int k = 0; k < alpha[j]; ++k) r = r.dz(j);
        for (int k = 0; k < beta[j]; ++k) r = r.dzbar(j);
    }
    return r;
}

int Poly::total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
}

int Poly::degree_in(int j) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree_in(j));
    return d;
}

Poly Poly::truncate(int maxDegree) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() > maxDegree) break;  // graded order
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

Poly Poly::filter(const std::function<bool(const MultiIndexPair&, const Complex&)>& keep) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_)
        if (keep(m, c)) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Poly Poly::restrict_to(int lo, int hi) const {
    return filter([&](const MultiIndexPair& m, const Complex&) { return m.supported_in(lo, hi); });
}

Complex Poly::eval(const std::vector<Complex>& z) const {
    if (static_cast<int>(z.size()) != n_) throw DimensionError("evaluation point has wrong dimension");
    std::vector<std::vector<Complex>> zp(n_), zbp(n_);
    auto power = [](std::vector<Complex>& cache, const Complex& base, int e) -> const Complex& {
        if (cache.empty()) cache.push_back(Complex(1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Complex sum;
    for (const auto& [m, c] : terms_) {
        Complex t = c;
        for (int j = 0; j < n_; ++j) {
            if (m.alpha(j)) t *= power(zp[j], z[j], m.alpha(j));
            if (m.beta(j)) t *= power(zbp[j], z[j].conj(), m.beta(j));
        }
        sum += t;
    }
    return sum;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    std::vector<Poly> bars;
    bars.reserve(images.size());
    for (const auto& q : images) bars.push_back(q.conj());
    return substitute(images, bars);
}

Poly Poly::substitute(const std::vector<Poly>& zImages, const std::vector<Poly>& zbarImages) const {
    if (static_cast<int>(zImages.size()) != n_ || static_cast<int>(zbarImages.size()) != n_)
        throw DimensionError("substitution needs one image per variable");
    int m = zImages.empty() ? n_ : zImages[0].n();
    std::vector<std::vector<Poly>> zp(n_), zbp(n_);
    auto power = [m](std::vector<Poly>& cache, const Poly& base, int e) -> const Poly& {
        if (cache.empty()) cache.push_back(Poly::constant(m, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Poly r(m);
    for (const auto& [mono, c] : terms_) {
        Poly t = Poly::constant(m, c);
        for (int j = 0; j < n_; ++j) {
            if (mono.alpha(j)) t = t * power(zp[j], zImages[j], mono.alpha(j));
            if (mono.beta(j)) t = t * power(zbp[j], zbarImages[j], mono.beta(j));
        }
        r += t;
    }
    return r;
}

namespace {

std::string monomial_string(const MultiIndexPair& m) {
    std::string s;
    auto factor = [&](const std::string& var, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (int j = 0; j < m.n(); ++j) {
        factor("z" + std::to_string(j + 1), m.alpha(j));
        factor("zb" + std::to_string(j + 1), m.beta(j));
    }
    return s;
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string mono = monomial_string(m);
        bool negReal = c.is_real() && sgn(c.re) < 0;
        Complex mag = negReal ? -c : c;
        std::string coef = to_string(mag);
        std::string body;
        if (mono.empty())
            body = coef;
        else if (mag == Complex(1))
            body = mono;
        else
            body = coef + "*" + mono;
        if (first)
            s = (negReal ? "-" : "") + body;
        else
            s += (negReal ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

}  // namespace crm
