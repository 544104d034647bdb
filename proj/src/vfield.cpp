#include "crm/vfield.hpp"

#include "crm/errors.hpp"

namespace crm {

VField::VField(int n) : hol(n, Poly(n)), anti(n, Poly(n)) {}

VField VField::type10(std::vector<Poly> coefficients) {
    VField X(static_cast<int>(coefficients.size()));
    X.hol = std::move(coefficients);
    return X;
}

bool VField::is_type10() const {
    for (const auto& a : anti)
        if (!a.is_zero()) return false;
    return true;
}

VField VField::conj() const {
    VField X(n());
    for (int k = 0; k < n(); ++k) {
        X.hol[k] = anti[k].conj();
        X.anti[k] = hol[k].conj();
    }
    return X;
}

Poly VField::apply(const Poly& f) const {
    if (f.n() != n()) throw DimensionError("vector field and function dimensions differ");
    Poly out(n());
    for (int k = 0; k < n(); ++k) {
        if (!hol[k].is_zero()) {
            Poly d = f.dz(k);
            if (!d.is_zero()) out += hol[k] * d;
        }
        if (!anti[k].is_zero()) {
            Poly d = f.dzbar(k);
            if (!d.is_zero()) out += anti[k] * d;
        }
    }
    return out;
}

Poly VField::apply_truncated(const Poly& f, int maxDegree) const {
    if (maxDegree < 0) return Poly(n());
    Poly g = f.truncate(maxDegree + 1);
    Poly out(n());
    for (int k = 0; k < n(); ++k) {
        if (!hol[k].is_zero()) {
            Poly d = g.dz(k);
            if (!d.is_zero()) out += (hol[k].truncate(maxDegree) * d).truncate(maxDegree);
        }
        if (!anti[k].is_zero()) {
            Poly d = g.dzbar(k);
            if (!d.is_zero()) out += (anti[k].truncate(maxDegree) * d).truncate(maxDegree);
        }
    }
    return out;
}

VField VField::truncated(int maxDegree) const {
    VField X(n());
    for (int k = 0; k < n(); ++k) {
        X.hol[k] = hol[k].truncate(maxDegree);
        X.anti[k] = anti[k].truncate(maxDegree);
    }
    return X;
}

VField bracket(const VField& X, const VField& Y) {
    if (X.n() != Y.n()) throw DimensionError("bracket of fields of different dimension");
    VField Z(X.n());
    for (int k = 0; k < X.n(); ++k) {
        Z.hol[k] = X.apply(Y.hol[k]) - Y.apply(X.hol[k]);
        Z.anti[k] = X.apply(Y.anti[k]) - Y.apply(X.anti[k]);
    }
    return Z;
}

Poly contract_dr(const Poly& r, const VField& Z) {
    Poly out(r.n());
    for (int k = 0; k < Z.n(); ++k)
        if (!Z.hol[k].is_zero()) out += Z.hol[k] * r.dz(k);
    return out;
}

Poly levi_pairing(const Poly& r, const VField& X, const VField& Y) {
    Poly out(r.n());
    for (int a = 0; a < X.n(); ++a) {
        if (X.hol[a].is_zero()) continue;
        Poly ra = r.dz(a);
        for (int b = 0; b < Y.n(); ++b) {
            if (Y.hol[b].is_zero()) continue;
            Poly rab = ra.dzbar(b);
            if (!rab.is_zero()) out += rab * X.hol[a] * Y.hol[b].conj();
        }
    }
    return out;
}

std::string to_string(const VField& X) {
    std::string s;
    auto part = [&](const Poly& c, const std::string& d) {
        if (c.is_zero()) return;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*" + d;
    };
    for (int k = 0; k < X.n(); ++k) {
        part(X.hol[k], "d/dz" + std::to_string(k + 1));
        part(X.anti[k], "d/dzb" + std::to_string(k + 1));
    }
    return s.empty() ? "0" : s;
}

}  // namespace crm
