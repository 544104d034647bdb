#include "crm/weights.hpp"

#include "crm/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace crm {

namespace {

void admissible_rec(const std::vector<Rational>& inv, int i, int k, Rational remaining, std::vector<int>& a,
                    std::vector<std::vector<int>>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (k == i) {
        // last slot must be positive and close the sum exactly
        if (sgn(inv[i]) == 0) return;
        Rational q = remaining / inv[i];
        if (q.get_den() == 1 && sgn(q) > 0) {
            a[i] = static_cast<int>(q.get_num().get_si());
            out.push_back(a);
        }
        return;
    }
    if (sgn(inv[k]) == 0) {
        a[k] = 0;  // infinite slot: contributes nothing, keep the witness canonical
        admissible_rec(inv, i, k + 1, remaining, a, out, cap);
        return;
    }
    for (int v = 0; v * inv[k] <= remaining; ++v) {
        a[k] = v;
        admissible_rec(inv, i, k + 1, remaining - v * inv[k], a, out, cap);
    }
    a[k] = 0;
}

// sum over slots >= from, and the weight carried by slots < from
struct Split {
    int tail = 0;
    Rational head = 0;
};

Split split_at(const MultiIndexPair& m, const Weight& mu, int from) {
    Split s;
    for (int k = 1; k < m.n(); ++k) {
        if (k < from)
            s.head += m.degree_in(k) * mu[k];
        else
            s.tail += m.degree_in(k);
    }
    return s;
}

}  // namespace

AdmissibilityReport is_admissible(const InverseWeight& lambda, std::size_t maxPerSlot) {
    AdmissibilityReport rep;
    std::vector<Rational> inv;
    for (const auto& x : lambda.lambda) inv.push_back(x.inverse().value);
    rep.witnesses.resize(lambda.n());
    for (int i = 0; i < lambda.n(); ++i) {
        if (lambda[i].is_inf()) continue;
        std::vector<int> a(i + 1, 0);
        admissible_rec(inv, i, 0, Rational(1), a, rep.witnesses[i], maxPerSlot);
        if (rep.witnesses[i].empty() && rep.admissible) {
            rep.admissible = false;
            rep.first_failing = i;
        }
    }
    return rep;
}

bool is_distinguished(const HermPoly& r, const InverseWeight& lambda) {
    if (r.n() != lambda.n()) throw DimensionError("weight and polynomial dimensions differ");
    Weight mu = lambda.inverse();
    for (const auto& [m, c] : r.terms())
        if (weighted_order(m, mu) < 1) return false;
    return true;
}

std::vector<Rational> slot_candidates(const HermPoly& p, const Weight& prefix, int j) {
    std::set<Rational> vals;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree_in(0)) continue;
        Split s = split_at(m, prefix, j);
        if (s.tail == 0) continue;
        Rational v = (1 - s.head) / s.tail;
        if (sgn(v) > 0) vals.insert(v);
    }
    return {vals.rbegin(), vals.rend()};
}

Weight greedy_from(const HermPoly& p, const Weight& prefix, int from) {
    Weight mu = prefix;
    mu.mu.resize(p.n(), Rational(0));
    mu.mu[0] = 1;
    for (int i = std::max(from, 1); i < p.n(); ++i) {
        auto c = slot_candidates(p, mu, i);
        mu.mu[i] = c.empty() ? Rational(0) : c.front();
    }
    return mu;
}

InverseWeight greedy_distinguished(const HermPoly& r) {
    HermPoly f = trusted_herm(r.poly().filter([](const MultiIndexPair& m, const Complex&) { return m.degree_in(0) == 0; }));
    return greedy_from(f, Weight(std::vector<Rational>(r.n(), Rational(0))), 1).inverse();
}

std::string to_string(MultitypeStatus s) {
    return s == MultitypeStatus::ExactCommutator ? "exact-commutator" : "search-lower-bound";
}

HermPoly normalize_model_shape(const HermPoly& r) {
    Complex a = model_z1_coefficient(r);
    if (!r.poly().constant_term().is_zero()) throw InputError("the origin must lie on the hypersurface (nonzero constant term)");
    if (a == Complex(-1)) return r;
    std::vector<Poly> maps;
    for (int j = 0; j < r.n(); ++j) maps.push_back(Poly::z(r.n(), j));
    maps[0] = Poly::z(r.n(), 0) * (Complex(-1) / a);
    return trusted_herm(r.poly().substitute(maps));
}

namespace {

struct SearchState {
    HermPoly r;               // current model, harmonic-free
    std::vector<Poly> maps;   // original coordinates as functions of current ones
    InverseWeight lambda;
    std::vector<std::string> trace;
};

std::vector<Poly> compose_maps(const std::vector<Poly>& outer, const std::vector<Poly>& step) {
    std::vector<Poly> out;
    for (const auto& q : outer) out.push_back(q.substitute(step));
    return out;
}

SearchState apply_step(const SearchState& s, const std::vector<Poly>& step, const std::string& what) {
    SearchState t;
    HermPoly moved = trusted_herm(s.r.poly().substitute(step));
    auto he = eliminate_harmonic(moved);
    t.r = he.reduced;
    t.maps = compose_maps(s.maps, step);
    if (!he.h.is_zero()) {
        std::vector<Poly> shift;
        for (int j = 0; j < s.r.n(); ++j) shift.push_back(Poly::z(s.r.n(), j));
        shift[0] = shift[0] + he.h;
        t.maps = compose_maps(t.maps, shift);
    }
    t.lambda = greedy_distinguished(t.r);
    t.trace = s.trace;
    t.trace.push_back(what);
    return t;
}

// Completing-the-power moves: A|z_i|^{2k} together with C z^g z_i^{k-1} zbar_i^k
// suggests z_i -> z_i - C/(kA) z^g.
std::vector<std::pair<std::vector<Poly>, std::string>> triangular_moves(const HermPoly& r, int degreeBound) {
    std::vector<std::pair<std::vector<Poly>, std::string>> moves;
    int n = r.n();
    for (int i = 1; i < n; ++i) {
        for (const auto& [mA, A] : r.terms()) {
            if (!mA.balanced() || mA.degree_in(i) == 0 || !mA.supported_in(i, i)) continue;
            int k = mA.alpha(i);
            for (const auto& [mC, C] : r.terms()) {
                if (mC.beta(i) != k || mC.alpha(i) != k - 1) continue;
                MultiIndexPair g = mC;
                g.alpha(i) = 0;
                g.beta(i) = 0;
                if (!g.holomorphic() || g.constant() || g.total_degree() > degreeBound || g.degree_in(0)) continue;
                std::vector<Poly> step;
                for (int j = 0; j < n; ++j) step.push_back(Poly::z(n, j));
                Complex coef = C / (Complex(k) * A);
                step[i] = step[i] - Poly::monomial(g, coef);
                moves.emplace_back(std::move(step), "z" + std::to_string(i + 1) + " -> z" + std::to_string(i + 1) +
                                                          " - (" + to_string(Poly::monomial(g, coef)) + ")");
            }
        }
    }
    return moves;
}

}  // namespace

Multitype multitype_search(const HermPoly& r, int degreeBound, const CommutatorOracle& commutator) {
    if (r.n() < 2) throw InputError("multitype needs dimension at least 2");
    HermPoly r0 = normalize_model_shape(r);
    int n = r.n();

    SearchState base;
    base.maps.reserve(n);
    for (int j = 0; j < n; ++j) base.maps.push_back(Poly::z(n, j));
    base.r = r0;
    base = apply_step(base, base.maps, "harmonic elimination");

    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    SearchState best = base;
    int permsTried = 0;
    do {
        if (++permsTried > 720) break;
        std::vector<Poly> step(n, Poly(n));
        step[0] = Poly::z(n, 0);
        std::string label = "order";
        for (int j = 1; j < n; ++j) {
            step[perm[j - 1]] = Poly::z(n, j);
            label += " z" + std::to_string(perm[j - 1] + 1);
        }
        SearchState cur = apply_step(base, step, label);
        for (int iter = 0; iter < 8; ++iter) {
            bool improved = false;
            for (auto& [mv, what] : triangular_moves(cur.r, degreeBound)) {
                SearchState next = apply_step(cur, mv, what);
                if (cur.lambda < next.lambda) {
                    cur = std::move(next);
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        if (best.lambda < cur.lambda) best = std::move(cur);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Multitype out;
    out.value = best.lambda;
    out.transformed = best.r;
    out.trace = best.trace;
    Weight mu = best.lambda.inverse();
    out.witness = CoordChange(best.maps, mu);
    if (commutator) {
        out.commutator = commutator(r0);
        if (out.commutator && *out.commutator == out.value) out.status = MultitypeStatus::ExactCommutator;
    }
    return out;
}

Integer counting_bound(int n, const Rational& m) {
    if (n < 2 || m < 2) throw InputError("counting bound needs n >= 2 and m >= 2");
    Integer h = floor_of(m / 2);
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), Integer(h + 1).get_mpz_t(), static_cast<unsigned long>((n - 2) * (n - 1) / 2));
    mpz_pow_ui(b.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(n - 1));
    return a * b;
}

namespace {

// Distinct values 2k_jj / (1 - sum_l 2k_jl/m_l) reachable for slot j.
void row_values(const std::vector<Rational>& ms, std::size_t l, Rational used, const Rational& m,
                std::set<Rational>& out) {
    if (l == ms.size()) {
        Rational room = 1 - used;
        for (int k = 1;; ++k) {
            Rational v = Rational(2 * k) / room;
            if (v > m) break;
            out.insert(v);
        }
        return;
    }
    for (int k = 0;; ++k) {
        Rational u = used + Rational(2 * k) / ms[l];
        if (u >= 1) break;
        row_values(ms, l + 1, u, m, out);
    }
}

void enumerate_rec(int n, const Rational& m, std::vector<Rational>& ms, std::vector<InverseWeight>& out) {
    if (static_cast<int>(ms.size()) == n - 1) {
        std::vector<Rational> full{Rational(1)};
        full.insert(full.end(), ms.begin(), ms.end());
        out.push_back(InverseWeight::finite(full));
        return;
    }
    std::set<Rational> vals;
    if (ms.empty()) {
        for (int k = 1; 2 * k <= m; ++k) vals.insert(Rational(2 * k));
    } else {
        row_values(ms, 0, Rational(0), m, vals);
    }
    for (const auto& v : vals) {
        if (!ms.empty() && v < ms.back()) continue;
        ms.push_back(v);
        enumerate_rec(n, m, ms, out);
        ms.pop_back();
    }
}

}  // namespace

std::vector<InverseWeight> enumerate_multitypes(int n, const Rational& m) {
    if (n < 2 || m < 2) throw InputError("enumeration needs n >= 2 and m >= 2");
    std::vector<InverseWeight> out;
    std::vector<Rational> ms;
    enumerate_rec(n, m, ms, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace crm
