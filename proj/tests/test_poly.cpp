#include "crm/coord_change.hpp"
#include "crm/errors.hpp"
#include "crm/herm_poly.hpp"
#include "crm/json_io.hpp"
#include "crm/parse.hpp"
#include "random_poly.hpp"

#include <doctest.h>

using namespace crm;
using crm::testing::Gen;

namespace {
constexpr int kInstances = 500;
Poly zp(int n, int j, int e) { return Poly::z(n, j).pow(e); }
Poly abs2(const Poly& f) { return f * f.conj(); }
}  // namespace

TEST_CASE("ring laws on random polynomials") {
    Gen g(101);
    for (int i = 0; i < kInstances; ++i) {
        int n = g.uniform(1, 4);
        Poly a = g.poly(n, 4, 3), b = g.poly(n, 4, 3), c = g.poly(n, 3, 2);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * Poly::constant(n, 1) == a);
        REQUIRE((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("Hermitian closure") {
    Gen g(102);
    for (int i = 0; i < kInstances; ++i) {
        int n = g.uniform(1, 4);
        HermPoly a = g.herm(n, 4, 3), b = g.herm(n, 4, 3);
        Rational s = g.rational();
        CHECK((a + b).poly().is_real());
        CHECK((a * b).poly().is_real());
        CHECK((s * a).poly().is_real());
        CHECK((-a).poly().is_real());
        Poly raw = g.poly(n, 3, 3);
        CHECK(raw.real_part().is_real());
        CHECK(raw.imag_part().is_real());
        CHECK(raw.real_part() + raw.imag_part() * Complex::i() == raw);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    Poly p = Poly::z(2, 1);
    CHECK_THROWS_AS(HermPoly{p}, NotRealError);
}

TEST_CASE("substitution is functorial") {
    Gen g(103);
    for (int i = 0; i < kInstances; ++i) {
        int n = g.uniform(1, 3);
        Poly p = g.poly(n, 3, 3);
        std::vector<Poly> first, second, composed, identity;
        for (int j = 0; j < n; ++j) {
            first.push_back(g.holomorphic(n, 2, 2));
            second.push_back(g.holomorphic(n, 2, 2));
            identity.push_back(Poly::z(n, j));
        }
        for (int j = 0; j < n; ++j) composed.push_back(first[j].substitute(second));
        REQUIRE(p.substitute(first).substitute(second) == p.substitute(composed));
        REQUIRE(p.substitute(identity) == p);
        REQUIRE(p.substitute(first).conj() == p.conj().substitute(first));
    }
}

TEST_CASE("coordinate changes compose in application order") {
    Gen g(104);
    for (int i = 0; i < 100; ++i) {
        int n = 3;
        Weight mu({1, Rational(1, 2), Rational(1, 4)});
        std::vector<Poly> a, b;
        for (int j = 0; j < n; ++j) {
            a.push_back(Poly::z(n, j) + g.holomorphic(n, 1, 2, 1));
            b.push_back(Poly::z(n, j) + g.holomorphic(n, 1, 2, 1));
        }
        CoordChange first(a, mu), second(b, mu);
        Poly p = g.poly(n, 3, 3);
        CHECK(compose(second, first).apply(p) == second.apply(first.apply(p)));
    }
}

TEST_CASE("grading reconstructs the polynomial") {
    Gen g(105);
    for (int i = 0; i < kInstances; ++i) {
        int n = g.uniform(2, 4);
        std::vector<Rational> mu{1};
        for (int j = 1; j < n; ++j) mu.push_back(Rational(1, g.uniform(2, 8)));
        std::sort(mu.begin() + 1, mu.end(), [](const Rational& x, const Rational& y) { return x > y; });
        Weight w(mu);
        HermPoly p = g.herm(n, 5, 6);
        HermPoly sum(n);
        for (const auto& [order, part] : grade(p, w)) {
            for (const auto& [m, c] : part.terms()) REQUIRE(weighted_order(m, w) == order);
            sum += part;
        }
        REQUIRE(sum == p);
        REQUIRE(leading_model(p, w) + tail(p, w) + [&] {
            HermPoly low(n);
            for (const auto& [order, part] : grade(p, w))
                if (order < 1) low += part;
            return low;
        }() == p);
    }
}

TEST_CASE("eliminate_harmonic is idempotent and leaves no pure terms") {
    Gen g(106);
    for (int i = 0; i < kInstances; ++i) {
        int n = g.uniform(2, 4);
        HermPoly f = g.herm(n, 5, 4, 1);
        f = trusted_herm(f.poly().filter([](const MultiIndexPair& m, const Complex&) { return !m.constant(); }));
        HermPoly r = make_model(f);
        auto once = eliminate_harmonic(r);
        auto twice = eliminate_harmonic(once.reduced);
        REQUIRE(twice.reduced == once.reduced);
        REQUIRE(twice.h.is_zero());
        HermPoly rest = model_part(once.reduced);
        for (const auto& [m, c] : rest.terms()) REQUIRE_FALSE(m.pure());
        // Undo: z1 -> z1 + h maps r to the reduced form.
        std::vector<Poly> shift;
        for (int j = 0; j < n; ++j) shift.push_back(Poly::z(n, j));
        shift[0] = shift[0] + once.h;
        REQUIRE(r.poly().substitute(shift) == once.reduced.poly());
    }
}

TEST_CASE("text round trip") {
    Gen g(107);
    for (int i = 0; i < 200; ++i) {
        int n = g.uniform(1, 4);
        Poly p = g.poly(n, 4, 4);
        REQUIRE(parse_expression(to_string(p), n) == p);
    }
}

TEST_CASE("JSON round trip") {
    Gen g(108);
    for (int i = 0; i < 200; ++i) {
        int n = g.uniform(1, 4);
        HermPoly p = g.herm(n, 4, 4);
        REQUIRE(herm_from_json(to_json(p)) == p);
    }
}

TEST_CASE("parser grammar") {
    CHECK(parse_expression("|z2|^4|z3|^6", 3) == abs2(zp(3, 1, 2)) * abs2(zp(3, 2, 3)));
    CHECK(parse_expression("|z2|^2 |z3|^2", 3) == abs2(Poly::z(3, 1)) * abs2(Poly::z(3, 2)));
    CHECK(parse_expression("|z2 + z3^2|^4", 3) == abs2(Poly::z(3, 1) + zp(3, 2, 2)).pow(2));
    CHECK(parse_expression("zb2 - conj(z2)", 2).is_zero());
    CHECK(parse_expression("zbar1 * z1", 1) == abs2(Poly::z(1, 0)));
    CHECK(parse_expression("2Re(z1)", 1) == Poly::z(1, 0) + Poly::zbar(1, 0));
    CHECK(parse_expression("Im(z1)", 1) == (Poly::z(1, 0) - Poly::zbar(1, 0)) * (Complex(1) / Complex(0, 2)));
    CHECK(parse_expression("z1^{3}", 1) == zp(1, 0, 3));
    CHECK(parse_expression("0.5*z1 - 1/2 z1", 1).is_zero());
    CHECK(parse_expression("i*i + 1", 1).is_zero());
    CHECK(infer_dimension("z1 + |z12|^2") == 12);
    CHECK_THROWS_AS(parse_expression("z1 +", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("z1 $ 2", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("|z1|^3", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("z1 / z1", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("z3", 2), DimensionError);
    CHECK_THROWS_AS(parse_poly("z2", 2), NotRealError);
}

TEST_CASE("square completion identity") {
    int n = 3;
    for (int p : {2, 3})
        for (int q : {2, 3})
            for (Rational e : {Rational(1, 2), Rational(9, 10)}) {
                Complex eps(e);
                Poly lhs = abs2(zp(n, 1, p) + zp(n, 2, q) * eps) + abs2(zp(n, 2, q)) * (Complex(1) - eps * eps);
                Poly mixed = zp(n, 1, p) * zp(n, 2, q).conj();
                Poly rhs = abs2(zp(n, 1, p)) + abs2(zp(n, 2, q)) + (mixed + mixed.conj()) * eps;
                CHECK((lhs - rhs).is_zero());
            }
}

TEST_CASE("Wirtinger derivatives") {
    Poly f = parse_expression("z1^2 zb1^3 + z2 zb1", 2);
    CHECK(f.dz(0) == parse_expression("2 z1 zb1^3", 2));
    CHECK(f.dzbar(0) == parse_expression("3 z1^2 zb1^2 + z2", 2));
    CHECK(f.dz(1) == parse_expression("zb1", 2));
    CHECK(f.eval({Complex(0, 1), Complex(2)}) == Complex(0, -3));
}
