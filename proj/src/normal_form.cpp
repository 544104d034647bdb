#include "crm/normal_form.hpp"

#include "crm/errors.hpp"
#include "crm/levi.hpp"
#include "crm/weights.hpp"

#include <algorithm>

namespace crm {

namespace {

int block_end(const Weight& mu, int slot) {
    int s = slot;
    while (s + 1 < mu.n() && mu[s + 1] == mu[slot]) ++s;
    return s;
}

std::vector<Poly> identity_maps(int n) {
    std::vector<Poly> m;
    for (int j = 0; j < n; ++j) m.push_back(Poly::z(n, j));
    return m;
}

std::string var(int j) { return "z" + std::to_string(j + 1); }

// z_k -> z_k + dir_k z_slot for k in (slot, end].
std::vector<Poly> mixing(int n, int slot, int end, const std::vector<Complex>& dir) {
    auto maps = identity_maps(n);
    for (int k = slot + 1; k <= end; ++k) maps[k] += Poly::z(n, slot) * dir[k - slot - 1];
    return maps;
}

// Generic linear change inside the block making q nonzero on z_lo..z_slot.
// Directions (1, t, t^2, ...) over a grid of complex rationals t, then a
// Kronecker-spaced fallback that cannot vanish identically.
std::vector<Poly> find_mixing(const Poly& q, int lo, int slot, int end) {
    int n = q.n();
    int width = end - slot;
    int D = std::max(q.total_degree(), 1);
    auto attempt = [&](const Complex& t, int spacing) -> std::optional<std::vector<Poly>> {
        std::vector<Complex> dir;
        long e = 1;
        for (int k = 0; k < width; ++k) {
            Complex c(1);
            for (long i = 0; i < e; ++i) c *= t;
            dir.push_back(c);
            e = spacing == 1 ? e + 1 : e * spacing;
        }
        auto maps = mixing(n, slot, end, dir);
        if (!q.substitute(maps).restrict_to(lo, slot).is_zero()) return maps;
        return std::nullopt;
    };
    for (int spacing : {1, D + 1}) {
        int bound = 2 * D * (spacing == 1 ? width : 1) + 2;
        for (int sum = 1; sum <= bound; ++sum)
            for (int b = 0; b <= sum; ++b)
                if (auto m = attempt(Complex(Rational(sum - b), Rational(b)), spacing)) return *m;
    }
    throw StepFailure("no linear change inside the block of " + var(slot) + " exposes the remaining terms");
}

struct Certified {
    std::optional<MultiIndexPair> monomial;
    Complex C;
    std::vector<std::string> problems;
};

// Iterated one-variable extraction: top degree in z_l, then its z_l-balanced part,
// from z_slot down to z2, checking the coefficient estimate at the unit point.
Certified certify_balanced(const Poly& top, int slot) {
    Certified out;
    int n = top.n();
    Poly cur = top;
    for (int l = slot; l >= 1; --l) {
        int d = cur.degree_in(l);
        if (d <= 0) continue;
        cur = cur.filter([&](const MultiIndexPair& m, const Complex&) { return m.degree_in(l) == d; });
        if (d % 2 != 0) {
            out.problems.push_back("top degree " + std::to_string(d) + " in " + var(l) + " is odd");
            return out;
        }
        std::vector<Poly> unit;
        for (int k = 0; k < n; ++k) unit.push_back(k == l ? Poly::z(n, k) : Poly::constant(n, Complex(1)));
        Poly one = cur.dz(l).dzbar(l).substitute(unit);
        if (!one.is_zero()) {
            auto rep = one_var_coeff_check(trusted_herm(one), true);
            if (!rep.c0_positive || !rep.all_satisfied)
                out.problems.push_back("coefficient estimate fails for " + to_string(one) + " in " + var(l));
        }
        cur = cur.filter([&](const MultiIndexPair& m, const Complex&) { return m.alpha(l) == d / 2 && m.beta(l) == d / 2; });
        if (cur.is_zero()) {
            out.problems.push_back("no " + var(l) + "-balanced part at degree " + std::to_string(d));
            return out;
        }
    }
    if (cur.size() != 1) {
        out.problems.push_back("extraction did not isolate a single monomial");
        return out;
    }
    const auto& [m, c] = *cur.terms().begin();
    if (!c.is_real() || sgn(c.re) <= 0) {
        out.problems.push_back("balanced coefficient " + to_string(c) + " is not positive");
        return out;
    }
    out.monomial = m;
    out.C = c;
    return out;
}

void complain(bool assertPsc, const std::string& msg, const std::string& witness, std::vector<std::string>& warnings) {
    if (assertPsc) throw PscContradiction(msg, witness);
    warnings.push_back(msg);
}

}  // namespace

FirstStep step_first(const HermPoly& p, const Weight& mu, bool assertPsc) {
    int n = p.n();
    if (mu.n() != n) throw DimensionError("weight and polynomial dimensions differ");
    if (n < 2) throw InputError("need at least two variables");
    int end = block_end(mu, 1);
    if (p.poly().restrict_to(1, end).is_zero())
        throw DegenerateSlot("p vanishes on the equal-weight block " + var(1) + ".." + var(end), 1);
    FirstStep out;
    auto maps = identity_maps(n);
    if (p.poly().restrict_to(1, 1).is_zero()) maps = find_mixing(p.poly(), 1, 1, end);
    out.change = CoordChange(maps, mu);
    out.p = out.change.apply(p);
    out.p2 = trusted_herm(out.p.poly().restrict_to(1, 1));

    Rational half = 1 / (2 * mu[1]);
    std::string witness = to_string(out.p2);
    if (half.get_den() != 1) {
        std::string msg = "restriction " + witness + " has degree " + to_string(1 / mu[1]) + ", not even";
        if (assertPsc) throw PscContradiction(msg, witness);
        throw StepFailure(msg);
    }
    out.k22 = static_cast<int>(half.get_num().get_si());
    MultiIndexPair bal(n);
    bal.alpha(1) = bal.beta(1) = out.k22;
    out.C20 = out.p2.coeff(bal).re;
    if (sgn(out.C20) <= 0) complain(assertPsc, "leading balanced coefficient of " + witness + " is not positive", witness, out.warnings);
    Rational bound = out.k22 * out.k22 * out.C20 * out.C20;
    for (const auto& [m, c] : out.p2.terms()) {
        if (m == bal) continue;
        if (!(c.norm2() < bound))
            complain(assertPsc, "coefficient " + to_string(c) + " of " + witness + " is not dominated by k22*C20", witness,
                     out.warnings);
    }
    return out;
}

InductiveStep step_inductive(const HermPoly& p, const Weight& mu, int slot, bool assertPsc) {
    int n = p.n();
    if (mu.n() != n) throw DimensionError("weight and polynomial dimensions differ");
    if (slot < 2 || slot >= n) throw InputError("inductive step needs a slot from z3 on");
    auto remainder = [&](const Poly& f) {
        return f.filter([&](const MultiIndexPair& m, const Complex&) { return !m.supported_in(1, slot - 1); });
    };
    Poly q = remainder(p.poly());
    int end = block_end(mu, slot);
    if (q.restrict_to(1, end).is_zero())
        throw DegenerateSlot("remainder vanishes on z2.." + var(end) + " (nondegeneracy fails at " + var(slot) + ")", slot);
    InductiveStep out;
    auto maps = identity_maps(n);
    if (q.restrict_to(1, slot).is_zero()) maps = find_mixing(q, 1, slot, end);
    out.change = CoordChange(maps, mu);
    out.p = out.change.apply(p);
    Poly pm = remainder(out.p.poly()).restrict_to(1, slot);
    out.pm = trusted_herm(pm);
    int d = pm.degree_in(slot);
    Poly top = pm.filter([&](const MultiIndexPair& m, const Complex&) { return m.degree_in(slot) == d; });
    auto cert = certify_balanced(top, slot);
    if (cert.monomial) {
        out.monomial = *cert.monomial;
        out.C = cert.C.re;
    } else {
        std::string msg;
        for (const auto& s : cert.problems) msg += (msg.empty() ? "" : "; ") + s;
        complain(assertPsc, "slot " + var(slot) + ": " + msg, to_string(top), out.warnings);
        auto best = revlex_max_balanced(out.p, 1, slot);
        if (!best || best->degree_in(slot) == 0)
            throw StepFailure("no balanced monomial involving " + var(slot) + " is available");
        out.monomial = *best;
        out.C = out.p.coeff(*best).re;
    }
    for (int l = 1; l <= slot; ++l) out.row.push_back(out.monomial.alpha(l));
    return out;
}

MultiIndexPair NormalForm::row_monomial(std::size_t i) const {
    MultiIndexPair m(weight.n());
    for (std::size_t l = 0; l < K[i].size(); ++l) m.alpha(static_cast<int>(l) + 1) = m.beta(static_cast<int>(l) + 1) = K[i][l];
    return m;
}

NormalForm normalize(const HermPoly& r, const Weight& mu, bool assertPsc, int maxDescent) {
    int n = r.n();
    if (mu.n() != n) throw DimensionError("weight and polynomial dimensions differ");
    mu.validate();
    NormalForm nf;
    Complex a = model_z1_coefficient(r);
    auto total = identity_maps(n);
    if (a != Complex(-1)) total[0] = Poly::z(n, 0) * (Complex(-1) / a);
    HermPoly cur = normalize_model_shape(r);

    auto advance = [&](const std::vector<Poly>& step) {
        std::vector<Poly> next;
        for (const auto& q : total) next.push_back(q.substitute(step));
        total = std::move(next);
        cur = trusted_herm(cur.poly().substitute(step));
    };

    Weight w = mu;
    nf.descent.push_back(w);
    for (int iter = 0; iter < maxDescent; ++iter) {
        HermPoly model = model_truncate(cur, w);
        auto he = eliminate_harmonic(model);
        if (!he.h.is_zero()) {
            auto shift = identity_maps(n);
            shift[0] = Poly::z(n, 0) + he.h;
            advance(shift);
            nf.trace.push_back("absorbed pure terms into z1");
        }
        HermPoly p = model_part(model_truncate(cur, w));
        std::vector<std::vector<int>> K;
        std::vector<Rational> A;
        std::vector<std::string> warnings;
        try {
            auto fs = step_first(p, w, assertPsc);
            if (!fs.change.is_identity()) {
                advance(fs.change.maps());
                nf.trace.push_back("first step: linear change inside the leading block");
            }
            p = fs.p;
            K.push_back({fs.k22});
            A.push_back(fs.C20);
            warnings.insert(warnings.end(), fs.warnings.begin(), fs.warnings.end());
            for (int slot = 2; slot < n; ++slot) {
                bool left = false;
                for (const auto& [m, c] : p.terms())
                    if (!m.supported_in(1, slot - 1)) left = true;
                if (!left) {
                    nf.trace.push_back("no terms left from " + var(slot) + " on");
                    break;
                }
                auto st = step_inductive(p, w, slot, assertPsc);
                if (!st.change.is_identity()) {
                    advance(st.change.maps());
                    nf.trace.push_back("step " + var(slot) + ": linear change inside its block");
                }
                p = st.p;
                K.push_back(st.row);
                A.push_back(st.C);
                warnings.insert(warnings.end(), st.warnings.begin(), st.warnings.end());
            }
        } catch (const DegenerateSlot& e) {
            Weight lowered = greedy_from(model_part(cur), w, e.slot());
            nf.trace.push_back(std::string(e.what()));
            if (!(lowered.mu < w.mu))
                throw StepFailure(std::string(e.what()) + "; the weight cannot be lowered further");
            lowered.validate();
            nf.trace.push_back("lowered weight to " + to_string(lowered));
            w = lowered;
            nf.descent.push_back(w);
            continue;
        }
        nf.K = std::move(K);
        nf.A = std::move(A);
        nf.warnings = std::move(warnings);
        nf.p = p;
        nf.weight = w;
        if (!(w == mu)) nf.loweredWeight = w;
        nf.transform = CoordChange(total, w);
        nf.transform_graded = nf.transform.respects_weight();
        Poly residual = p.poly();
        for (std::size_t i = 0; i < nf.K.size(); ++i) residual -= Poly::monomial(nf.row_monomial(i), Complex(nf.A[i]));
        nf.residual = trusted_herm(residual);
        return nf;
    }
    throw StepFailure("weight descent did not settle within " + std::to_string(maxDescent) + " rounds");
}

NormalFormCheck verify_normal_form(const NormalForm& nf, const HermPoly& r, const Weight& mu) {
    NormalFormCheck out;
    auto fail = [&](const std::string& s) {
        out.ok = false;
        out.violations.push_back(s);
    };
    int n = nf.p.n();
    const Weight& w = nf.weight;
    if (w.n() != n || r.n() != n || mu.n() != n) {
        fail("dimension mismatch");
        return out;
    }
    if (!(w == mu) && !(w.mu < mu.mu)) fail("final weight is neither the input weight nor lexicographically lower");
    if (nf.A.size() != nf.K.size()) fail("row count differs from coefficient count");
    Poly squares(n);
    for (std::size_t i = 0; i < nf.K.size() && i < nf.A.size(); ++i) {
        int slot = static_cast<int>(i) + 1;
        const auto& row = nf.K[i];
        std::string tag = "row " + var(slot) + ": ";
        if (static_cast<int>(row.size()) != slot || row.back() <= 0) {
            fail(tag + "malformed exponent row");
            continue;
        }
        MultiIndexPair m = nf.row_monomial(i);
        // (i) presence with the recorded coefficient
        if (nf.p.coeff(m) != Complex(nf.A[i])) fail(tag + "balanced term absent or coefficient differs from A");
        if (sgn(nf.A[i]) <= 0) fail(tag + "A is not positive");
        // (ii) weighted homogeneity of the row
        Rational s = 0;
        for (int l = 0; l < slot; ++l) s += 2 * row[l] * w[l + 1];
        if (s != 1) fail(tag + "sum of 2k*mu is " + to_string(s) + ", not 1");
        // (iii) degree cap on the part supported in z2..z_slot
        int deg = nf.p.poly().restrict_to(1, slot).degree_in(slot);
        if (deg > 2 * row.back()) fail(tag + "degree " + std::to_string(deg) + " in " + var(slot) + " exceeds 2k");
        // (iv) reverse lexicographic maximality
        auto best = revlex_max_balanced(nf.p, 1, slot);
        if (!best || !(*best == m)) fail(tag + "balanced term is not revlex-maximal");
        squares.add_term(m, Complex(nf.A[i]));
    }
    // (v) reconstruction
    if (squares + nf.residual.poly() != nf.p.poly()) fail("squares plus residual do not reproduce p");
    if (nf.transform.n() != n) {
        fail("transform dimension mismatch");
    } else {
        try {
            HermPoly moved = model_truncate(nf.transform.apply(r), w);
            if (moved != make_model(nf.p)) fail("transform applied to r does not reproduce the model");
        } catch (const InputError& e) {
            fail(std::string("transform applied to r is not a model of the final weight: ") + e.what());
        }
    }
    return out;
}

Json to_json(const NormalForm& nf) {
    Json j;
    j["weight"] = to_json(nf.weight);
    j["inverse_weight"] = to_json(nf.weight.inverse());
    if (nf.loweredWeight) j["lowered_weight"] = to_json(*nf.loweredWeight);
    Json d = Json::array();
    for (const auto& w : nf.descent) d.push_back(to_json(w));
    j["descent"] = d;
    j["K"] = nf.K;
    Json A = Json::array();
    for (const auto& a : nf.A) A.push_back(to_string(a));
    j["A"] = A;
    Json rows = Json::array();
    for (std::size_t i = 0; i < nf.K.size(); ++i) rows.push_back(to_string(Poly::monomial(nf.row_monomial(i), Complex(nf.A[i]))));
    j["squares"] = rows;
    j["transform"] = to_json(nf.transform);
    j["transform_graded"] = nf.transform_graded;
    j["p"] = to_json(nf.p);
    j["p_text"] = to_string(nf.p);
    j["residual"] = to_json(nf.residual);
    j["residual_text"] = to_string(nf.residual);
    j["trace"] = nf.trace;
    j["warnings"] = nf.warnings;
    return j;
}

}  // namespace crm
