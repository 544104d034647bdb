#include "crm/boundary_system.hpp"
#include "crm/errors.hpp"
#include "crm/parse.hpp"
#include "crm/weights.hpp"
#include "random_poly.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace crm;

namespace {

InverseWeight lam(std::initializer_list<const char*> xs) {
    std::vector<ExtRational> v;
    for (const char* x : xs) v.push_back(parse_ext_rational(x));
    return InverseWeight(v);
}

// Independent enumeration: rows k_{j2..jj}, k_jj >= 1, with sum 2k_jl/m_l = 1 and
// m_2 <= ... <= m_n <= m.
std::set<std::vector<Rational>> brute_force_multitypes(int n, const Rational& m) {
    std::set<std::vector<Rational>> out;
    std::vector<Rational> ms;
    std::function<void(int)> slot = [&](int j) {
        if (j > n) {
            std::vector<Rational> v{1};
            v.insert(v.end(), ms.begin(), ms.end());
            out.insert(v);
            return;
        }
        std::vector<int> ks(ms.size(), 0);
        std::function<void(std::size_t, Rational)> row = [&](std::size_t l, Rational used) {
            if (l == ms.size()) {
                for (int kjj = 1;; ++kjj) {
                    Rational mj = Rational(2 * kjj) / (1 - used);
                    if (mj > m) break;
                    if (!ms.empty() && mj < ms.back()) continue;
                    ms.push_back(mj);
                    slot(j + 1);
                    ms.pop_back();
                }
                return;
            }
            for (int k = 0;; ++k) {
                Rational u = used + Rational(2 * k) / ms[l];
                if (u >= 1) break;
                row(l + 1, u);
            }
        };
        row(0, 0);
    };
    slot(2);
    return out;
}

}  // namespace

TEST_CASE("weight and inverse weight are reciprocal") {
    InverseWeight l = lam({"1", "2", "inf"});
    Weight w = l.inverse();
    CHECK(w.mu == std::vector<Rational>{1, Rational(1, 2), 0});
    CHECK(w.inverse() == l);
    crm::testing::Gen g(201);
    for (int i = 0; i < 200; ++i) {
        std::vector<ExtRational> v{ExtRational::of(1)};
        Rational last = 1;
        for (int j = 1; j < 4; ++j) {
            if (g.uniform(0, 5) == 0) {
                while (static_cast<int>(v.size()) < 4) v.push_back(ExtRational::infinity());
                break;
            }
            last += g.uniform(0, 3) + Rational(g.uniform(0, 3), 4);
            v.push_back(ExtRational::of(last));
        }
        InverseWeight x(v);
        CHECK(x.inverse().inverse() == x);
    }
}

TEST_CASE("lexicographic order is total and consistent with equality") {
    std::vector<InverseWeight> xs = {lam({"1", "2", "4"}), lam({"1", "2", "inf"}), lam({"1", "4", "4"}),
                                     lam({"1", "2", "2"}), lam({"1", "8", "12"})};
    for (const auto& a : xs)
        for (const auto& b : xs) {
            int count = (a < b) + (b < a) + (a == b);
            CHECK(count == 1);
        }
    CHECK(lam({"1", "2", "4"}) < lam({"1", "2", "inf"}));
}

TEST_CASE("admissibility") {
    auto bloom = is_admissible(lam({"1", "2", "4"}));
    CHECK(bloom.admissible);
    auto has = [](const std::vector<std::vector<int>>& ws, std::vector<int> w) {
        return std::find(ws.begin(), ws.end(), w) != ws.end();
    };
    CHECK(has(bloom.witnesses[1], {0, 2}));
    CHECK(has(bloom.witnesses[2], {0, 0, 4}));
    auto bad = is_admissible(lam({"1", "5/2"}));
    CHECK_FALSE(bad.admissible);
    REQUIRE(bad.first_failing);
    CHECK(*bad.first_failing == 1);
    CHECK(is_admissible(lam({"1", "inf", "inf"})).admissible);
    CHECK(is_admissible(lam({"1", "8", "12"})).admissible);
    CHECK(is_admissible(lam({"1", "6", "9", "18"})).admissible);
}

TEST_CASE("distinguished weights in given coordinates") {
    HermPoly bloom = parse_poly("Re(z1) + (Re(z2) + |z3|^2)^2", 3);
    CHECK(is_distinguished(bloom, lam({"1", "2", "4"})));
    CHECK(is_distinguished(parse_poly("-2Re(z1) + |z2|^2", 2), lam({"1", "2"})));
    CHECK_FALSE(is_distinguished(parse_poly("-2Re(z1) + |z2|^2", 2), lam({"1", "4"})));
}

TEST_CASE("multitype search") {
    CHECK(multitype_search(parse_poly("-2Re(z1) + |z2|^8 + |z2|^4|z3|^6", 3)).value == lam({"1", "8", "12"}));
    CHECK(multitype_search(parse_poly("-2Re(z1) + |z2|^2 + |z3|^2 + |z4|^2", 4)).value == lam({"1", "2", "2", "2"}));
    HermPoly s7 = parse_poly(
        "-2Re(z1) + |z2|^6 + |z2|^2|z3|^6 + |z2|^4|z3|^2|z4|^2 + |z2|^2|z3|^4|z4|^4"
        " + 2*(1/10)*Re(|z2|^2 z3^2 zb3^3 |z4|^2) + |z3|^8|z4|^2",
        4);
    CHECK(multitype_search(s7).value == lam({"1", "6", "9", "18"}));
    // Hidden by a holomorphic change: (z2 + z3^2) is a better coordinate than z2.
    Multitype hidden = multitype_search(parse_poly("-2Re(z1) + |z2 + z3^2|^2 + |z3|^6", 3));
    CHECK(hidden.value == lam({"1", "2", "6"}));
    CHECK(is_distinguished(hidden.transformed, hidden.value));
    CHECK_THROWS_AS(multitype_search(parse_poly("-2Re(z1)", 1)), InputError);
}

TEST_CASE("multitype search output is distinguished in its witness coordinates") {
    crm::testing::Gen g(202);
    for (int i = 0; i < 40; ++i) {
        int n = 3;
        Poly f(n);
        for (int t = 0; t < 3; ++t) {
            Poly q = g.holomorphic(n, 2, 3, 1);
            f += q * q.conj();
        }
        f = f.filter([](const MultiIndexPair& m, const Complex&) { return !m.constant() && !m.pure(); });
        if (f.is_zero()) continue;
        HermPoly r = make_model(trusted_herm(f));
        Multitype mt = multitype_search(r, 2);
        CHECK(is_distinguished(mt.transformed, mt.value));
        CHECK(mt.witness.apply(r) == mt.transformed);
    }
}

TEST_CASE("commutator corroboration") {
    auto oracle = [](const HermPoly& r) -> std::optional<InverseWeight> { return build_boundary_system(r).commutator; };
    auto eqq = multitype_search(parse_poly("-2Re(z1) + |z2|^8 + |z2|^4|z3|^6", 3), 4, oracle);
    CHECK(eqq.status == MultitypeStatus::ExactCommutator);
    auto bloom = multitype_search(parse_poly("Re(z1) + (Re(z2) + |z3|^2)^2", 3), 4, oracle);
    CHECK(bloom.value == lam({"1", "2", "4"}));
    CHECK(bloom.status == MultitypeStatus::SearchLowerBound);
    REQUIRE(bloom.commutator);
    CHECK(*bloom.commutator == lam({"1", "2", "inf"}));
    CHECK(bloom.value < *bloom.commutator);
}

TEST_CASE("counting bound") {
    CHECK(counting_bound(3, 6) == 36);
    CHECK(counting_bound(2, 4) == 2);
    CHECK(counting_bound(2, 2) == 1);
}

TEST_CASE("enumeration matches an independent row enumeration") {
    CHECK(enumerate_multitypes(2, 4) == std::vector<InverseWeight>{lam({"1", "2"}), lam({"1", "4"})});
    CHECK(enumerate_multitypes(2, 6) == std::vector<InverseWeight>{lam({"1", "2"}), lam({"1", "4"}), lam({"1", "6"})});
    auto three = enumerate_multitypes(3, 4);
    for (const char* want : {"2,2", "2,4", "4,4"}) {
        std::string w(want);
        auto l = lam({"1", w.substr(0, 1).c_str(), w.substr(2).c_str()});
        CHECK(std::find(three.begin(), three.end(), l) != three.end());
    }
    CHECK(three.size() <= 12);
    for (int n = 2; n <= 4; ++n)
        for (int m = 2; m <= (n == 4 ? 6 : 10); ++m) {
            auto got = enumerate_multitypes(n, m);
            std::set<std::vector<Rational>> mine;
            for (const auto& l : got) {
                CHECK(is_admissible(l).admissible);
                std::vector<Rational> v;
                for (const auto& x : l.lambda) v.push_back(x.value);
                mine.insert(v);
            }
            CHECK(std::is_sorted(got.begin(), got.end()));
            CHECK(mine.size() == got.size());
            CHECK(mine == brute_force_multitypes(n, m));
            CHECK(got.size() <= counting_bound(n, m));
        }
}
