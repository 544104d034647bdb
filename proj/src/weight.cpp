#include "crm/weight.hpp"

#include "crm/errors.hpp"

namespace crm {

void Weight::validate() const {
    if (mu.empty()) throw InputError("empty weight");
    if (mu[0] != 1) throw InputError("weight must start with mu_1 = 1");
    for (int j = 1; j < n(); ++j) {
        if (sgn(mu[j]) < 0) throw InputError("negative weight entry");
        if (mu[j] > mu[j - 1]) throw InputError("weight entries must be nonincreasing");
    }
    if (n() >= 2 && mu[1] >= 1) throw InputError("weight needs mu_1 > mu_2");
}

InverseWeight Weight::inverse() const {
    InverseWeight l;
    for (const auto& m : mu) l.lambda.push_back(ExtRational::of(m).inverse());
    return l;
}

InverseWeight InverseWeight::finite(const std::vector<Rational>& l) {
    InverseWeight w;
    for (const auto& x : l) w.lambda.push_back(ExtRational::of(x));
    return w;
}

void InverseWeight::validate() const {
    inverse().validate();
}

Weight InverseWeight::inverse() const {
    Weight w;
    for (const auto& x : lambda) {
        if (!x.inf && sgn(x.value) <= 0) throw InputError("inverse weight entries must be positive");
        w.mu.push_back(x.inverse().value);
    }
    return w;
}

bool InverseWeight::all_finite() const {
    for (const auto& x : lambda)
        if (x.inf) return false;
    return true;
}

bool operator<(const InverseWeight& a, const InverseWeight& b) {
    std::size_t k = std::min(a.lambda.size(), b.lambda.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (a.lambda[i] < b.lambda[i]) return true;
        if (b.lambda[i] < a.lambda[i]) return false;
    }
    return a.lambda.size() < b.lambda.size();
}

std::string to_string(const InverseWeight& l) {
    std::string s = "(";
    for (int j = 0; j < l.n(); ++j) s += (j ? ", " : "") + to_string(l[j]);
    return s + ")";
}

std::string to_string(const Weight& w) {
    std::string s = "(";
    for (int j = 0; j < w.n(); ++j) s += (j ? ", " : "") + to_string(w[j]);
    return s + ")";
}

}  // namespace crm
