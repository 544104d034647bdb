// Acceptance runner. One line per criterion, nonzero exit if any fails.

#include "crm/boundary_system.hpp"
#include "crm/cli.hpp"
#include "crm/errors.hpp"
#include "crm/levi.hpp"
#include "crm/normal_form.hpp"
#include "crm/parse.hpp"
#include "crm/weights.hpp"
#include "random_poly.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace crm;
using crm::testing::Gen;

namespace {

const char* kTorsionModel =
    "-2Re(z1) + |z2|^6 + |z2|^2|z3|^6 + |z2|^4|z3|^2|z4|^2 + |z2|^2|z3|^4|z4|^4"
    " + 2*(1/10)*Re(|z2|^2 z3^2 zb3^3 |z4|^2) + |z3|^8|z4|^2";

std::optional<InverseWeight> commutator_of(const HermPoly& r) {
    try {
        return build_boundary_system(r).commutator;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Poly zpow(int n, int j, int e) { return Poly::z(n, j).pow(e); }
Poly abs2(const Poly& f) { return f * f.conj(); }

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail = what;
            ok = false;
        }
    }
};

// t tbar coefficient of p(z + t a); does not go through the Hessian code
Complex levi_on_line(const HermPoly& p, const std::vector<Complex>& z, const CVector& a) {
    int n = p.n();
    std::vector<Poly> img(n, Poly(n + 1));
    for (int j = 1; j < n; ++j) img[j] = Poly::constant(n + 1, z[j - 1]) + Poly::z(n + 1, n) * a[j - 1];
    MultiIndexPair tt(n + 1);
    tt.alpha(n) = 1;
    tt.beta(n) = 1;
    return p.poly().substitute(img).coeff(tt);
}

Outcome ac1() {
    Outcome o;
    int n = 3;
    for (int p : {2, 3})
        for (int q : {2, 3})
            for (const char* eps : {"1/2", "9/10"}) {
                Complex e(parse_rational(eps));
                Poly lhs = abs2(zpow(n, 1, p) + zpow(n, 2, q) * e) + abs2(zpow(n, 2, q)) * (Complex(1) - e * e);
                Poly mixed = zpow(n, 1, p) * zpow(n, 2, q).conj();
                Poly rhs = abs2(zpow(n, 1, p)) + abs2(zpow(n, 2, q)) + (mixed + mixed.conj()) * e;
                o.require((lhs - rhs).is_zero(), "nonzero difference at p=" + std::to_string(p) + " q=" +
                                                     std::to_string(q) + " eps=" + eps);
            }
    if (o.ok) o.detail = "8 cases, zero difference";
    return o;
}

Outcome ac2() {
    Outcome o;
    HermPoly r = parse_poly("-2Re(z1) + |z2|^8 + |z2|^4|z3|^6", 3);
    Multitype mt = multitype_search(r, 4, commutator_of);
    o.require(mt.value == InverseWeight::finite({1, 8, 12}), "multitype " + to_string(mt.value));
    NormalForm nf = normalize(r, mt.value.inverse());
    o.require(nf.K == std::vector<std::vector<int>>{{4}, {2, 3}}, "K differs");
    o.require(nf.A == std::vector<Rational>{1, 1}, "A differs");
    o.require(nf.residual.poly().is_zero(), "residual " + to_string(nf.residual));
    o.require(verify_normal_form(nf, r, mt.value.inverse()).ok, "verify_normal_form false");
    if (o.ok) o.detail = to_string(mt.value) + ", K = [[4],[2,3]], A = [1,1]";
    return o;
}

Outcome ac3() {
    Outcome o;
    HermPoly r = parse_poly("Re(z1) + (Re(z2) + |z3|^2)^2", 3);
    Multitype mt = multitype_search(r, 4, commutator_of);
    o.require(mt.value == InverseWeight::finite({1, 2, 4}), "search " + to_string(mt.value));
    o.require(is_distinguished(r, mt.value), "weight not distinguished");
    BoundarySystem bs = build_boundary_system(r);
    InverseWeight expect({ExtRational::of(1), ExtRational::of(2), ExtRational::infinity()});
    o.require(bs.commutator == expect, "commutator " + to_string(bs.commutator));
    o.require(mt.value < bs.commutator, "no strict gap");
    if (o.ok) o.detail = to_string(mt.value) + " < " + to_string(bs.commutator);
    return o;
}

Outcome ac4() {
    Outcome o;
    HermPoly r = parse_poly(kTorsionModel, 4);
    PositivityVerdict v = psd_verdict(model_part(r));
    std::vector<std::vector<std::string>> systems;
    int dim = -1;
    if (v.cs)
        for (const auto& mp : v.cs->pairings) {
            dim = mp.kernel_intersection_dim;
            for (const auto& sys : mp.kernel_systems) {
                std::vector<std::string> rows;
                for (const auto& row : sys) rows.push_back(kernel_row_string(row));
                std::sort(rows.begin(), rows.end());
                systems.push_back(rows);
            }
        }
    std::sort(systems.begin(), systems.end());
    std::vector<std::vector<std::string>> expect = {{"2a2 + a3 + a4 = 0", "4a3 + a4 = 0"},
                                                    {"a2 + 2a3 + 2a4 = 0", "a2 + 3a3 = 0"}};
    bool kernels = systems == expect && dim == 0;

    BoundarySystem bs = build_boundary_system(r);
    HermPoly model = r;
    try {
        FirstBlockResult fb = normalize_first_block(bs, r);
        bs = fb.bs;
        model = fb.model;
    } catch (const InputError&) {
    }
    TorsionReport t = detect_torsion(bs, model);
    MultiIndexPair z4z4(4);
    z4z4.alpha(3) = 1;
    z4z4.beta(3) = 1;
    Complex c2 = t.obstruction.coeff(z4z4);
    bool torsion = t.applicable && t.torsion && !t.linear.is_zero() && !c2.is_zero() &&
                   t.obstruction == Poly::monomial(z4z4, c2);

    o.require(v.kind == VerdictKind::CertifiedPSD, "verdict " + to_string(v.kind) + " instead of CertifiedPSD");
    o.require(kernels, "kernel systems differ");
    o.require(torsion, "no c2|z4|^2 obstruction");
    std::ostringstream d;
    d << "verdict " << to_string(v.kind) << "; kernels " << (kernels ? "match, trivial intersection" : "differ")
      << "; f = " << to_string(t.linear) << " z" << t.slot + 1 << " + " << to_string(t.obstruction);
    o.detail = (o.ok ? "" : o.detail + " | ") + d.str();
    return o;
}

Outcome ac5() {
    Outcome o;
    HermPoly r = parse_poly("-2Re(z1) + |z2|^4 + |z2|^2|z3|^2 + (|z2|^2 + |z3|^2)|z4|^2", 4);
    Weight mu({1, Rational(1, 4), Rational(1, 4), Rational(1, 4)});
    NormalForm nf = normalize(r, mu);
    std::vector<Poly> rows;
    for (std::size_t i = 0; i < nf.K.size(); ++i) rows.push_back(Poly::monomial(nf.row_monomial(i), Complex(1)));
    std::vector<Poly> expect = {parse_expression("|z2|^4", 4), parse_expression("|z2|^2|z3|^2", 4),
                                parse_expression("|z3|^2|z4|^2", 4)};
    o.require(rows == expect, "rows differ");
    o.require(rows.empty() || rows.back() != parse_expression("|z2|^2|z4|^2", 4), "last row is |z2|^2|z4|^2");
    o.require(verify_normal_form(nf, r, mu).ok, "verify_normal_form false");
    std::string listed;
    for (const auto& p : rows) listed += (listed.empty() ? "" : ", ") + to_string(p);
    o.detail = o.ok ? listed : o.detail + " | " + listed;
    return o;
}

Outcome ac6() {
    Outcome o;
    auto small = enumerate_multitypes(2, 4);
    o.require(small == std::vector<InverseWeight>{InverseWeight::finite({1, 2}), InverseWeight::finite({1, 4})},
              "n=2 m=4 set differs");
    o.require(counting_bound(2, 4) == 2, "counting_bound(2,4) != 2");
    auto all = enumerate_multitypes(3, 6);
    Integer bound = counting_bound(3, 6);
    o.require(bound == 36, "counting_bound(3,6) = " + bound.get_str());
    o.require(all.size() <= bound, "too many weights");
    for (const auto& l : small) o.require(is_admissible(l).admissible, "inadmissible " + to_string(l));
    for (const auto& l : all) o.require(is_admissible(l).admissible, "inadmissible " + to_string(l));
    if (o.ok) o.detail = "n=3 m=6: " + std::to_string(all.size()) + " <= " + bound.get_str();
    return o;
}

HermPoly square_sum(Gen& g, int m) {
    Poly P(2);
    for (int t = 0; t < 2; ++t) {
        Poly Q(2);
        for (int j = 0; j <= m; ++j) {
            MultiIndexPair mono(2);
            mono.alpha(1) = j;
            mono.beta(1) = m - j;
            if (g.uniform(0, 2)) Q.add_term(mono, g.complex());
        }
        P += Q * Q.conj();
    }
    return trusted_herm(P);
}

Outcome ac7() {
    Outcome o;
    Gen g(7007);
    int done = 0, failures = 0;
    while (done < 200) {
        HermPoly P = square_sum(g, g.uniform(1, 6));
        if (P.is_zero()) continue;
        ++done;
        auto rep = one_var_coeff_check(P, true);
        if (!rep.c0_positive || !rep.all_satisfied) ++failures;
    }
    o.require(failures == 0, std::to_string(failures) + " failures");
    if (o.ok) o.detail = "200 instances, 0 failures";
    return o;
}

Outcome ac8() {
    Outcome o;
    HermPoly p = parse_poly("2Re(z2^2 zb3^3)", 3);
    PositivityVerdict v = psd_verdict(p);
    o.require(v.kind == VerdictKind::Refuted, "verdict " + to_string(v.kind));
    if (v.witness_point && v.witness_direction) {
        Complex val = levi_on_line(p, *v.witness_point, *v.witness_direction);
        o.require(val.is_real() && sgn(val.re) < 0, "witness value " + to_string(val));
        o.require(val == Complex(v.witness_value), "reported value disagrees with the line oracle");
    } else {
        o.require(false, "no witness");
    }
    std::ostringstream out, err;
    int code = run_cli({"normalize", "--expr", "-2Re(z1) + 2Re(z2^2 zb3^3)", "--assert-psc"}, out, err);
    o.require(code == kContradiction, "normalize --assert-psc exit " + std::to_string(code));
    if (o.ok) o.detail = "Levi value " + to_string(v.witness_value) + ", exit " + std::to_string(code);
    return o;
}

Outcome ac9() {
    Outcome o;
    Gen g(9009);
    int instances = 0;
    for (int i = 0; i < 8; ++i) {
        // |z2 + h(z3)|^4 + |z3|^8 with h a nonzero weighted-homogeneous tail
        Rational c = g.rational();
        if (sgn(c) == 0) c = 1;
        Poly h = Poly::z(3, 2).pow(2) * Complex(c, g.rational());
        Poly inner = Poly::z(3, 1) + h;
        HermPoly r = trusted_herm(Poly::z(3, 0) * Complex(-1) + Poly::zbar(3, 0) * Complex(-1) + abs2(inner).pow(2) +
                                  abs2(Poly::z(3, 2)).pow(4));
        BoundarySystem bs = build_boundary_system(r);
        if (bs.higher.empty()) {
            o.require(false, "no boundary function");
            continue;
        }
        FirstBlockResult fb = normalize_first_block(bs, r);
        Poly re2 = parse_expression("Re(z2)", 3);
        o.require(!fb.bs.higher.empty() && fb.bs.higher[0].r.poly() == re2, "normalized r2 is not Re z2");
        BoundarySystem again = build_boundary_system(fb.model);
        o.require(!again.higher.empty() && again.higher[0].r.poly() == re2, "rebuild does not reproduce Re z2");
        ++instances;
    }
    if (o.ok) o.detail = std::to_string(instances) + " generated models";
    return o;
}

Outcome ac10() {
    Outcome o;
    constexpr int kN = 500;
    Gen g(1010);
    for (int i = 0; i < kN; ++i) {
        int n = g.uniform(1, 4);
        Poly a = g.poly(n, 4, 3), b = g.poly(n, 4, 3), c = g.poly(n, 3, 2);
        o.require(a + b == b + a && a * b == b * a, "commutativity");
        o.require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
        o.require(a * (b + c) == a * b + a * c, "distributivity");
        o.require((a * b).conj() == a.conj() * b.conj(), "conjugation");
    }
    for (int i = 0; i < kN; ++i) {
        int n = g.uniform(1, 4);
        HermPoly a = g.herm(n, 4, 3), b = g.herm(n, 4, 3);
        o.require((a + b).poly().is_real() && (a * b).poly().is_real() && (g.rational() * a).poly().is_real(),
                  "Hermitian closure");
    }
    for (int i = 0; i < kN; ++i) {
        int n = g.uniform(1, 3);
        Poly p = g.poly(n, 3, 3);
        std::vector<Poly> first, second, composed;
        for (int j = 0; j < n; ++j) {
            first.push_back(g.holomorphic(n, 2, 2));
            second.push_back(g.holomorphic(n, 2, 2));
        }
        for (int j = 0; j < n; ++j) composed.push_back(first[j].substitute(second));
        o.require(p.substitute(first).substitute(second) == p.substitute(composed), "substitution functoriality");
    }
    for (int i = 0; i < kN; ++i) {
        int n = g.uniform(2, 4);
        std::vector<Rational> mu{1};
        for (int j = 1; j < n; ++j) mu.push_back(Rational(1, g.uniform(2, 8)));
        std::sort(mu.begin() + 1, mu.end(), [](const Rational& x, const Rational& y) { return x > y; });
        Weight w(mu);
        HermPoly p = g.herm(n, 5, 6);
        HermPoly sum(n);
        for (const auto& [order, part] : grade(p, w)) sum += part;
        o.require(sum == p, "grading reconstruction");
    }
    for (int i = 0; i < kN; ++i) {
        int n = g.uniform(2, 4);
        HermPoly f = g.herm(n, 5, 4, 1);
        f = trusted_herm(f.poly().filter([](const MultiIndexPair& m, const Complex&) { return !m.constant(); }));
        auto once = eliminate_harmonic(make_model(f));
        auto twice = eliminate_harmonic(once.reduced);
        o.require(twice.reduced == once.reduced && twice.h.is_zero(), "eliminate_harmonic idempotence");
    }
    if (o.ok) o.detail = "5 suites x 500 instances";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget;  // seconds
    };
    std::vector<Criterion> criteria = {
        {"AC1 square completion", ac1, 1},         {"AC2 eqq multitype and normal form", ac2, 1},
        {"AC3 Bloom gap", ac3, 5},                 {"AC4 torsion example", ac4, 10},
        {"AC5 revlex square selection", ac5, 1},   {"AC6 counting", ac6, 10},
        {"AC7 one-variable coefficient bounds", ac7, 30},
        {"AC8 non-pseudoconvex refutation", ac8, 5},
        {"AC9 first block fixpoint", ac9, 10},     {"AC10 algebra properties", ac10, 60},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget) {
            o.ok = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.budget)) + " s budget)";
        }
        if (!o.ok) ++failed;
        std::printf("%s %s [%.2f s]: %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
