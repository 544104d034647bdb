#include "crm/errors.hpp"
#include "crm/levi.hpp"
#include "crm/parse.hpp"
#include "random_poly.hpp"

#include <doctest.h>

using namespace crm;
using crm::testing::Gen;

namespace {

const char* kTorsionModel =
    "|z2|^6 + |z2|^2|z3|^6 + |z2|^4|z3|^2|z4|^2 + |z2|^2|z3|^4|z4|^4"
    " + 2*(1/10)*Re(|z2|^2 z3^2 zb3^3 |z4|^2) + |z3|^8|z4|^2";

// Levi form value at z in direction a (both over z2..zn) read off as the t tbar
// coefficient of p(z + t a), independent of the Hessian code.
Complex levi_oracle(const HermPoly& p, const std::vector<Complex>& z, const CVector& a) {
    int n = p.n();
    std::vector<Poly> img(n, Poly(n + 1));
    for (int j = 1; j < n; ++j) img[j] = Poly::constant(n + 1, z[j - 1]) + Poly::z(n + 1, n) * a[j - 1];
    Poly line = p.poly().substitute(img);
    MultiIndexPair tt(n + 1);
    tt.alpha(n) = 1;
    tt.beta(n) = 1;
    return line.coeff(tt);
}

Complex levi_from_hessian(const HermPoly& p, const std::vector<Complex>& z, const CVector& a) {
    std::vector<Complex> full{Complex(0)};
    full.insert(full.end(), z.begin(), z.end());
    CMatrix H = hessian_at(complex_hessian(p), full);
    Complex s;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = 0; k < a.size(); ++k) s += H[j][k] * a[j] * a[k].conj();
    return s;
}

HermPoly homogeneous_square_sum(Gen& g, int m) {
    // |Q1|^2 + |Q2|^2 with Q_i homogeneous of degree m in (z, zbar), one variable z2
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

}  // namespace

TEST_CASE("complex Hessian examples") {
    auto H = complex_hessian(parse_poly("|z2|^2", 2));
    CHECK(H[1][1] == Poly::constant(2, 1));
    CHECK(H[0][0].is_zero());
    CHECK(H[0][1].is_zero());
    auto H4 = complex_hessian(parse_poly("|z2|^4", 2));
    CHECK(H4[1][1] == parse_expression("4|z2|^2", 2));
    auto Hm = complex_hessian(parse_poly("2Re(z2^2 zb3^3)", 3));
    CHECK(Hm[1][2] == parse_expression("6 z2 zb3^2", 3));
    CHECK(Hm[2][1] == parse_expression("6 zb2 z3^2", 3));
}

TEST_CASE("complex Hessian is Hermitian and agrees with the line-restriction oracle") {
    Gen g(301);
    for (int i = 0; i < 100; ++i) {
        int n = g.uniform(2, 4);
        HermPoly p = g.herm(n, 4, 4, 1);
        auto H = complex_hessian(p);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) REQUIRE(H[j][k] == H[k][j].conj());
        std::vector<Complex> z;
        CVector a;
        for (int j = 1; j < n; ++j) {
            z.push_back(g.complex());
            a.push_back(g.complex());
        }
        REQUIRE(levi_oracle(p, z, a) == levi_from_hessian(p, z, a));
    }
}

TEST_CASE("psd verdict tiers") {
    auto sos = psd_verdict(parse_poly("|z2|^2 + |z3|^2", 3));
    CHECK(sos.kind == VerdictKind::CertifiedPSD);
    CHECK(sos.tier == 1);
    CHECK(replay_verdict(parse_poly("|z2|^2 + |z3|^2", 3), sos));
    HermPoly sq = parse_poly("|z2^2 + 1/2 z3^3|^2 + 3/4|z3|^6", 3);
    auto v = psd_verdict(sq);
    CHECK(v.kind == VerdictKind::CertifiedPSD);
    CHECK(replay_verdict(sq, v));
}

TEST_CASE("non-pseudoconvex example is refuted with an exact witness") {
    HermPoly p = parse_poly("2Re(z2^2 zb3^3)", 3);
    auto v = psd_verdict(p);
    REQUIRE(v.kind == VerdictKind::Refuted);
    REQUIRE(v.witness_point);
    REQUIRE(v.witness_direction);
    CHECK(sgn(v.witness_value) < 0);
    Complex oracle = levi_oracle(p, *v.witness_point, *v.witness_direction);
    CHECK(oracle.is_real());
    CHECK(oracle.re == v.witness_value);
    CHECK(replay_verdict(p, v));
    // a forged witness does not replay
    auto forged = v;
    forged.witness_value = -1;
    CHECK_FALSE(replay_verdict(p, forged));
}

TEST_CASE("every refutation witness is negative under the oracle") {
    Gen g(302);
    int refuted = 0;
    for (int i = 0; i < 40; ++i) {
        HermPoly p = g.herm(3, 3, 4, 1);
        PsdOptions opts;
        opts.samples = 256;
        auto v = psd_verdict(p, opts);
        if (v.kind != VerdictKind::Refuted) continue;
        ++refuted;
        Complex val = levi_oracle(p, *v.witness_point, *v.witness_direction);
        CHECK(sgn(val.re) < 0);
        CHECK(val.re == v.witness_value);
    }
    CHECK(refuted > 0);
}

TEST_CASE("Cauchy-Schwarz pairing on the torsion example") {
    HermPoly p = parse_poly(kTorsionModel, 4);
    auto cs = cauchy_schwarz_pairing(p);
    CHECK(cs.found);
    REQUIRE(cs.pairings.size() == 1);
    const auto& mp = cs.pairings[0];
    std::vector<std::vector<std::string>> systems;
    for (const auto& sys : mp.kernel_systems) {
        std::vector<std::string> rows;
        for (const auto& row : sys) rows.push_back(kernel_row_string(row));
        std::sort(rows.begin(), rows.end());
        systems.push_back(rows);
    }
    std::sort(systems.begin(), systems.end());
    CHECK(systems == std::vector<std::vector<std::string>>{{"2a2 + a3 + a4 = 0", "4a3 + a4 = 0"},
                                                           {"a2 + 2a3 + 2a4 = 0", "a2 + 3a3 = 0"}});
    CHECK(mp.kernel_intersection_dim == 0);
    CHECK(cs.kernel_intersections_trivial());
    REQUIRE(mp.splittings.size() == 2);
    CHECK(mp.splittings[0].fraction == Rational(1, 2));
    CHECK(mp.splittings[1].fraction == Rational(1, 2));
    // The splittings are not aligned with the mixed pair, so no sound Levi bound follows.
    CHECK_FALSE(cs.levi_sound);
}

TEST_CASE("torsion example is not plurisubharmonic") {
    HermPoly p = parse_poly(kTorsionModel, 4);
    auto v = psd_verdict(p);
    CHECK(v.kind == VerdictKind::Refuted);
    REQUIRE(v.witness_point);
    CHECK(sgn(levi_oracle(p, *v.witness_point, *v.witness_direction).re) < 0);
    CHECK(replay_verdict(p, v));
    // An independent point: z = (1/100, -1, 100) with a determinant test on the Hessian.
    std::vector<Complex> z{Complex(Rational(1, 100)), Complex(-1), Complex(100)};
    std::vector<Complex> full{Complex(0)};
    full.insert(full.end(), z.begin(), z.end());
    CMatrix H = hessian_at(complex_hessian(p), full);
    CHECK(!diagonalize_hermitian(H).psd());
}

TEST_CASE("Cauchy-Schwarz edge cases") {
    auto none = cauchy_schwarz_pairing(parse_poly("|z2|^4 + |z3|^2", 3));
    CHECK(none.found);
    CHECK(none.pairings.empty());
    auto bare = cauchy_schwarz_pairing(parse_poly("2Re(z2^2 zb3^3)", 3));
    CHECK_FALSE(bare.found);
    // aligned splitting: 2Re(z2 zb3) against |z2|^2 + |z3|^2 with coefficient 1/2
    HermPoly aligned = parse_poly("|z2|^2 + |z3|^2 + 1/2 * 2Re(z2 zb3)", 3);
    auto cs = cauchy_schwarz_pairing(aligned);
    CHECK(cs.found);
    CHECK(cs.levi_sound);
}

TEST_CASE("one-variable coefficient bounds") {
    auto r1 = one_var_coeff_check(parse_poly("|z2|^4", 2), true);
    CHECK(r1.c0 == 1);
    CHECK(r1.all_satisfied);
    auto r2 = one_var_coeff_check(parse_poly("|z2|^4 + Re(z2^3 zb2)", 2), false);
    CHECK(r2.c0 == 1);
    CHECK(r2.bounds[0].abs_squared == Rational(1, 4));
    CHECK(r2.all_satisfied);
    CHECK_FALSE(r2.negative_point);
    auto r3 = one_var_coeff_check(parse_poly("2Re(z2^2)", 2), false);
    CHECK(r3.c0 == 0);
    CHECK_FALSE(r3.all_satisfied);
    CHECK_THROWS_AS(one_var_coeff_check(parse_poly("|z2|^2 + |z2|^4", 2), true), InputError);
    CHECK_THROWS_AS(one_var_coeff_check(parse_poly("|z2|^2 + |z3|^2", 3), true), InputError);
}

TEST_CASE("coefficient bounds hold on nonnegative homogeneous polynomials") {
    Gen g(303);
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        HermPoly P = homogeneous_square_sum(g, g.uniform(1, 6));
        if (P.is_zero()) continue;
        auto rep = one_var_coeff_check(P, true);
        if (!rep.c0_positive || !rep.all_satisfied) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("M-dominant coefficients") {
    auto one = m_dominant_coefficients(parse_poly("|z2|^4", 2), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].balanced());
    auto tie = m_dominant_coefficients(parse_poly("|z2|^4 + 2Re(z2^3 zb2)", 2), 1);
    CHECK(tie.size() == 3);
    auto dom = m_dominant_coefficients(parse_poly("4|z2|^4 + 2Re(z2^3 zb2)", 2), 1);
    REQUIRE(dom.size() == 1);
    CHECK(dom[0].balanced());
}

TEST_CASE("Newton split flags the extremal parts") {
    auto parts = newton_split_check(parse_poly("|z2|^2 + |z3|^2 + Re(z2 zb3)", 3), {-1, 0, 1});
    REQUIRE(parts.size() == 3);
    for (const auto& s : parts) {
        bool extremal = s.p == 2 || s.q == 2;
        CHECK(s.flagged == extremal);
    }
    auto single = newton_split_check(parse_poly("|z2|^2|z3|^2", 3), {-1, 0, 1});
    REQUIRE(single.size() == 1);
    CHECK(single[0].flagged);
    CHECK_THROWS_AS(newton_split_check(parse_poly("|z2|^2", 3), {0, 0, 0}), InputError);
}

TEST_CASE("flagged extremal parts of nonnegative polynomials are nonnegative") {
    Gen g(304);
    for (int i = 0; i < 60; ++i) {
        Poly P(3);
        for (int t = 0; t < 3; ++t) {
            Poly q = g.holomorphic(3, 3, 2, 1).filter([](const MultiIndexPair& m, const Complex&) {
                return m.total_degree() == 2;
            });
            P += q * q.conj();
        }
        HermPoly hp = trusted_herm(P);
        if (hp.is_zero()) continue;
        for (const auto& s : newton_split_check(hp, {-1, 0, 1})) {
            if (!s.flagged) continue;
            // a flagged part is a limit of scaled copies of P, so it takes no negative values
            for (const auto& z : sample_points(2, 64, 7)) {
                std::vector<Complex> full{Complex(0), z[0], z[1]};
                CHECK(sgn(s.part.poly().eval(full).re) >= 0);
            }
        }
    }
}

TEST_CASE("model truncation") {
    Weight w({1, Rational(1, 4)});
    CHECK(model_truncate(parse_poly("-2Re(z1) + |z2|^4 + |z2|^6", 2), w) == parse_poly("-2Re(z1) + |z2|^4", 2));
    HermPoly homog = parse_poly("-2Re(z1) + |z2|^4", 2);
    CHECK(model_truncate(homog, w) == homog);
    CHECK_THROWS_AS(model_truncate(parse_poly("-2Re(z1) + |z2|^2", 2), w), InputError);
}

TEST_CASE("model truncation keeps positivity on scaled samples") {
    Gen g(305);
    Weight w({1, Rational(1, 4), Rational(1, 4)});
    for (int i = 0; i < 20; ++i) {
        Poly q = g.holomorphic(3, 3, 2, 1).filter([](const MultiIndexPair& m, const Complex&) {
            return m.total_degree() == 2;
        });
        Poly extra = g.holomorphic(3, 2, 3, 1).filter([](const MultiIndexPair& m, const Complex&) {
            return m.total_degree() == 3;
        });
        Poly f = q * q.conj() + extra * extra.conj();
        if (f.is_zero()) continue;
        HermPoly r = make_model(trusted_herm(f));
        HermPoly r0 = model_truncate(r, w);
        PsdOptions opts;
        opts.samples = 128;
        CHECK(psd_verdict(model_part(r0), opts).kind != VerdictKind::Refuted);
    }
}

TEST_CASE("exact square root bound") {
    CHECK(sqrt_upper(Rational(9, 4)) == Rational(3, 2));
    Rational two = sqrt_upper(2);
    CHECK(two * two >= 2);
    CHECK(two < Rational(1415, 1000));
}

TEST_CASE("sampling is deterministic") {
    CHECK(sample_points(3, 50, 9) == sample_points(3, 50, 9));
    CHECK(sample_points(3, 5000, 9) != sample_points(3, 5000, 10));
}

TEST_CASE("verdict JSON carries the certificate") {
    auto v = psd_verdict(parse_poly("2Re(z2^2 zb3^3)", 3));
    Json j = to_json(v);
    CHECK(j["kind"] == "Refuted");
    CHECK(j.contains("witness_point"));
    auto c = psd_verdict(parse_poly("|z2|^2 + |z3|^2", 3));
    CHECK(to_json(c).contains("gram"));
}
