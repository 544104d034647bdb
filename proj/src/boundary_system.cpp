#include "crm/boundary_system.hpp"

#include "crm/errors.hpp"
#include "crm/weights.hpp"

#include <algorithm>
#include <functional>

namespace crm {

namespace {

std::string var(int j) { return "z" + std::to_string(j + 1); }

// z' components X'[k] (k >= 1) completed by the z1 coefficient that makes the field tangent.
VField tangent_field(const Poly& r, const Complex& a, std::vector<Poly> zprime) {
    int n = r.n();
    Poly s(n);
    for (int k = 1; k < n; ++k)
        if (!zprime[k].is_zero()) s += zprime[k] * r.dz(k);
    zprime[0] = s * (Complex(-1) / a);
    return VField::type10(std::move(zprime));
}

std::vector<Poly> direction_coeffs(int n, const CVector& v) {
    std::vector<Poly> c(n, Poly(n));
    for (int k = 1; k < n; ++k)
        if (!v[k - 1].is_zero()) c[k] = Poly::constant(n, v[k - 1]);
    return c;
}

// Series solution of (D + U) x = b with D = diag(d) constant and U without constant term.
struct SeriesSolve {
    std::vector<Poly> x;
    bool truncated = false;
};

SeriesSolve series_solve(const std::vector<std::vector<Poly>>& G, const std::vector<Poly>& b, int maxDegree) {
    std::size_t m = b.size();
    int n = b.empty() ? 0 : b[0].n();
    std::vector<Complex> dinv(m);
    std::vector<std::vector<Poly>> U(m, std::vector<Poly>(m, Poly(n)));
    bool constant = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            Complex c0 = G[i][k].constant_term();
            U[i][k] = G[i][k] - Poly::constant(n, c0);
            if (!U[i][k].is_zero()) constant = false;
            if (i == k) {
                if (c0.is_zero()) throw InputError("singular leading block in a series inverse");
                dinv[i] = Complex(1) / c0;
            } else if (!c0.is_zero()) {
                throw InputError("series inverse expects a diagonal constant part");
            }
        }
    SeriesSolve out;
    std::vector<Poly> term(m, Poly(n));
    for (std::size_t i = 0; i < m; ++i) term[i] = b[i] * dinv[i];
    out.x = term;
    if (constant) return out;
    for (int step = 1;; ++step) {
        std::vector<Poly> next(m, Poly(n));
        bool zero = true;
        for (std::size_t i = 0; i < m; ++i) {
            Poly s(n);
            for (std::size_t k = 0; k < m; ++k)
                if (!U[i][k].is_zero() && !term[k].is_zero()) s += U[i][k] * term[k];
            next[i] = (s * (-dinv[i])).truncate(maxDegree);
            if (!next[i].is_zero()) zero = false;
        }
        if (zero) break;
        if (step > maxDegree) {
            out.truncated = true;
            break;
        }
        for (std::size_t i = 0; i < m; ++i) out.x[i] += next[i];
        term = std::move(next);
    }
    return out;
}

struct Token {
    int field;
    bool bar;
    int key() const { return 2 * field + (bar ? 1 : 0); }
};

// Ordered lists of a fixed length whose first entry comes from `first` (if set), with
// field indices nonincreasing left to right and sum counts*weights < 1.
struct ListEnumerator {
    const Poly& r;
    std::vector<VField> tok;      // index 2*field + bar
    std::vector<Rational> weights;
    int fields;
    int first;                    // -1: any
    std::uint64_t evaluated = 0;

    ListEnumerator(const Poly& r_, const std::vector<VField>& fs, std::vector<Rational> w, int firstField, int frontier)
        : r(r_), weights(std::move(w)), fields(static_cast<int>(fs.size())), first(firstField) {
        for (const auto& f : fs) {
            tok.push_back(f.truncated(frontier));
            tok.push_back(f.conj().truncated(frontier));
        }
    }

    void run(int len, const std::function<void(const std::vector<Token>&, const Complex&)>& hit) {
        if (len < 2) return;
        std::vector<Token> list(len);
        std::vector<int> counts(fields, 0);
        int maxField = first >= 0 ? first : fields - 1;
        Poly dr_dummy = r;
        for (int fl = 0; fl <= maxField; ++fl)
            for (int bl = 0; bl < 2; ++bl)
                for (int fp = fl; fp <= maxField; ++fp)
                    for (int bp = 0; bp < 2; ++bp) {
                        if (len == 2 && first >= 0 && fp != first) continue;
                        list[len - 1] = {fl, bl == 1};
                        list[len - 2] = {fp, bp == 1};
                        counts.assign(fields, 0);
                        ++counts[fl];
                        ++counts[fp];
                        if (!within(counts)) continue;
                        const VField& X = tok[list[len - 2].key()];
                        const VField& Y = tok[list[len - 1].key()];
                        Poly base = contract_dr(r, bracket(X.truncated(len - 1), Y.truncated(len - 1))).truncate(len - 2);
                        if (base.is_zero()) continue;
                        extend(list, len - 3, base, counts, hit);
                    }
    }

private:
    bool within(const std::vector<int>& counts) const {
        Rational s = 0;
        for (int k = 0; k < fields; ++k)
            if (counts[k]) s += counts[k] * weights[k];
        return s < 1;
    }

    void extend(std::vector<Token>& list, int pos, const Poly& cur, std::vector<int>& counts,
                const std::function<void(const std::vector<Token>&, const Complex&)>& hit) {
        if (pos < 0) {
            ++evaluated;
            Complex v = cur.constant_term();
            if (!v.is_zero()) hit(list, v);
            return;
        }
        int lo = list[pos + 1].field;
        int hi = first >= 0 ? first : fields - 1;
        if (pos == 0 && first >= 0) lo = first;
        for (int f = lo; f <= hi; ++f) {
            ++counts[f];
            if (within(counts)) {
                for (int b = 0; b < 2; ++b) {
                    list[pos] = {f, b == 1};
                    Poly next = tok[list[pos].key()].apply_truncated(cur, pos);
                    if (!next.is_zero()) extend(list, pos - 1, next, counts, hit);
                    else if (pos == 0) ++evaluated;
                }
            }
            --counts[f];
        }
    }
};

VList to_vlist(const std::vector<Token>& t) {
    VList l;
    for (const auto& x : t) l.push_back({x.field, x.bar});
    return l;
}

bool lex_less(const std::vector<Token>& a, const std::vector<Token>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i].key() != b[i].key()) return a[i].key() < b[i].key();
    return a.size() < b.size();
}

struct Found {
    std::vector<Token> list;
    std::vector<int> counts;
    Rational c;
    Complex value;
};

// Minimal length, then minimal c, then lexicographically least.
std::optional<Found> search_slot(const Poly& r, const std::vector<VField>& fields, const std::vector<Rational>& invc,
                                 int frontier, std::uint64_t& counter) {
    int j = static_cast<int>(fields.size()) - 1;
    std::vector<Rational> w = invc;
    w.push_back(0);
    ListEnumerator en(r, fields, w, j, frontier);
    for (int len = 2; len <= frontier; ++len) {
        std::optional<Found> best;
        en.run(len, [&](const std::vector<Token>& list, const Complex& v) {
            std::vector<int> counts(fields.size(), 0);
            for (const auto& t : list) ++counts[t.field];
            Rational used = 0;
            for (int k = 0; k < j; ++k) used += counts[k] * invc[k];
            Rational c = Rational(counts[j]) / (1 - used);
            c.canonicalize();
            if (!best || c < best->c || (c == best->c && lex_less(list, best->list))) best = Found{list, counts, c, v};
        });
        counter += en.evaluated;
        en.evaluated = 0;
        if (best) return best;
    }
    return std::nullopt;
}

HermPoly real_part_herm(const Poly& g) { return trusted_herm(g.real_part()); }

}  // namespace

Poly list_derivative(const Poly& r, const std::vector<VField>& fields, const VList& list) {
    if (list.size() < 2) throw InputError("a list needs at least two fields");
    auto get = [&](const ListEntry& e) {
        if (e.field < 0 || e.field >= static_cast<int>(fields.size())) throw InputError("list refers to a missing field");
        return e.bar ? fields[e.field].conj() : fields[e.field];
    };
    std::size_t l = list.size();
    Poly v = contract_dr(r, bracket(get(list[l - 2]), get(list[l - 1])));
    for (std::size_t i = l - 2; i-- > 0;) v = get(list[i]).apply(v);
    return v;
}

std::vector<VField> BoundarySystem::list_fields() const {
    std::vector<VField> f;
    for (const auto& h : higher) f.push_back(h.field);
    return f;
}

BoundarySystem build_boundary_system(const HermPoly& r0, const BoundaryOptions& opts) {
    BoundarySystem bs;
    int n = r0.n();
    bs.n = n;
    Complex a = model_z1_coefficient(r0);
    if (!r0.poly().constant_term().is_zero()) throw InputError("the origin must lie on the hypersurface");
    bs.r1 = r0;
    const Poly& r = r0.poly();
    HermPoly p = model_part(r0);
    bs.frontier = opts.frontier > 0 ? opts.frontier : std::max(p.poly().total_degree(), 2);
    bs.truncation_degree = opts.truncation > 0 ? opts.truncation : bs.frontier * std::max(n, 2);
    int T = bs.truncation_degree;

    std::vector<ExtRational> lambda(n, ExtRational::infinity());
    lambda[0] = ExtRational::of(1);

    // Levi form at 0 in the form M[a][b] = r_{z_b zbar_a}(0), so that h(X, Y) = Y^* M X.
    CMatrix M(n - 1, CVector(n - 1));
    std::vector<Complex> origin(n, Complex(0));
    for (int i = 1; i < n; ++i)
        for (int k = 1; k < n; ++k) M[i - 1][k - 1] = r.dz(k).dzbar(i).eval(origin);
    Congruence cong = diagonalize_hermitian(M);
    std::vector<CVector> kernel;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(cong.diag[k]) != 0) bs.levi_directions.push_back(cong.column(k));
        else kernel.push_back(cong.column(k));
    }
    bs.levi_rank = static_cast<int>(bs.levi_directions.size());
    for (const auto& v : bs.levi_directions) bs.levi_fields.push_back(tangent_field(r, a, direction_coeffs(n, v)));
    for (int k = 0; k < bs.levi_rank; ++k) lambda[k + 1] = ExtRational::of(2);
    bs.trace.push_back("Levi rank " + std::to_string(bs.levi_rank));

    // Levi-orthogonal tangent field along a kernel direction.
    std::size_t s0 = bs.levi_fields.size();
    std::vector<std::vector<Poly>> G(s0, std::vector<Poly>(s0, Poly(n)));
    for (std::size_t i = 0; i < s0; ++i)
        for (std::size_t k = 0; k < s0; ++k) G[i][k] = levi_pairing(r, bs.levi_fields[k], bs.levi_fields[i]).truncate(T);
    auto kernel_field = [&](const CVector& w) {
        VField E = tangent_field(r, a, direction_coeffs(n, w));
        if (s0 == 0) return E;
        std::vector<Poly> g;
        for (std::size_t i = 0; i < s0; ++i) g.push_back(levi_pairing(r, E, bs.levi_fields[i]).truncate(T) * Complex(-1));
        auto sol = series_solve(G, g, T);
        if (sol.truncated) bs.truncated = true;
        std::vector<Poly> zp = direction_coeffs(n, w);
        for (std::size_t i = 0; i < s0; ++i)
            for (int k = 1; k < n; ++k) zp[k] += bs.levi_fields[i].hol[k] * sol.x[i];
        for (auto& q : zp) q = q.truncate(T);
        return tangent_field(r, a, zp);
    };

    // Higher slots.
    std::vector<CVector> remaining = kernel;
    int slot = bs.levi_rank + 1;
    for (; slot < n && !remaining.empty(); ++slot) {
        std::vector<CVector> candidates = remaining;
        if (opts.generic_candidates && remaining.size() > 1) {
            CVector s(n - 1);
            for (const auto& v : remaining)
                for (int k = 0; k < n - 1; ++k) s[k] += v[k];
            candidates.push_back(s);
        }
        std::vector<Rational> invc;
        for (const auto& h : bs.higher) invc.push_back(1 / h.c);
        std::optional<Found> best;
        std::size_t bestIdx = 0;
        VField bestField;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            VField F = kernel_field(candidates[ci]);
            // Annihilate the earlier boundary functions: L = F + sum b_m L_m, triangular solve.
            std::size_t h = bs.higher.size();
            if (h > 0) {
                std::vector<Poly> b(h, Poly(n));
                for (std::size_t k = 0; k < h; ++k) {
                    Poly rhs = F.apply(bs.higher[k].r.poly()) * Complex(-1);
                    for (std::size_t m = 0; m < k; ++m)
                        if (!b[m].is_zero()) rhs -= bs.higher[m].field.apply(bs.higher[k].r.poly()) * b[m];
                    Poly diag = bs.higher[k].field.apply(bs.higher[k].r.poly()).truncate(T);
                    auto sol = series_solve({{diag}}, {rhs.truncate(T)}, T);
                    if (sol.truncated) bs.truncated = true;
                    b[k] = sol.x[0];
                }
                VField L = F;
                for (std::size_t m = 0; m < h; ++m)
                    for (int k = 0; k < n; ++k) L.hol[k] = (L.hol[k] + bs.higher[m].field.hol[k] * b[m]).truncate(T);
                F = L;
            }
            std::vector<VField> fs = bs.list_fields();
            fs.push_back(F);
            auto found = search_slot(r, fs, invc, bs.frontier, bs.lists_evaluated);
            if (found && (!best || found->c < best->c)) {
                best = found;
                bestIdx = ci;
                bestField = F;
            }
        }
        if (!best) {
            bs.trace.push_back("no admissible list up to length " + std::to_string(bs.frontier) + " from " + var(slot) + " on");
            break;
        }
        HigherSlot hs;
        hs.slot = slot;
        hs.direction = candidates[bestIdx];
        hs.field = bestField;
        hs.list = to_vlist(best->list);
        hs.counts = best->counts;
        hs.c = best->c;
        hs.value = best->value;
        std::vector<VField> fs = bs.list_fields();
        fs.push_back(bestField);
        VList tail(hs.list.begin() + 1, hs.list.end());
        hs.g = list_derivative(r, fs, tail);
        if (bs.truncated) hs.g = hs.g.truncate(T);
        hs.r = real_part_herm(hs.g);
        if (bestField.apply(hs.r.poly()).constant_term().is_zero()) {
            hs.r = trusted_herm(hs.g.imag_part());
            hs.imaginary = true;
        }
        lambda[slot] = ExtRational::of(hs.c);
        bs.trace.push_back(var(slot) + ": c = " + to_string(hs.c) + " from a list of length " + std::to_string(hs.list.size()));
        // Drop the used direction; a generic candidate replaces the last unused direction it involves.
        if (bestIdx < remaining.size()) {
            remaining.erase(remaining.begin() + static_cast<long>(bestIdx));
        } else {
            remaining.pop_back();
        }
        bs.higher.push_back(std::move(hs));
    }
    bs.unused_directions = remaining;
    bs.commutator = InverseWeight(lambda);
    return bs;
}

BoundaryAudit audit_boundary_system(const BoundarySystem& bs, bool checkMinimality) {
    BoundaryAudit out;
    auto fail = [&](const std::string& s) {
        out.ok = false;
        out.violations.push_back(s);
    };
    const Poly& r = bs.r1.poly();
    int n = bs.n;
    int cut = bs.truncated ? bs.frontier : -1;
    auto vanishes = [&](const Poly& f) { return (cut >= 0 ? f.truncate(cut) : f).is_zero(); };
    auto fields = bs.list_fields();
    std::vector<Complex> origin(n, Complex(0));
    // Tangency and Levi orthogonality.
    for (std::size_t i = 0; i < fields.size(); ++i) {
        std::string tag = var(bs.higher[i].slot) + ": ";
        if (!fields[i].is_type10()) fail(tag + "field is not of type (1,0)");
        if (!vanishes(fields[i].apply(r))) fail(tag + "field is not tangent");
        for (const auto& Lm : bs.levi_fields)
            if (!vanishes(levi_pairing(r, fields[i], Lm))) fail(tag + "field is not Levi-orthogonal to the Levi block");
    }
    std::vector<Rational> invc;
    for (const auto& h : bs.higher) invc.push_back(1 / h.c);
    for (std::size_t i = 0; i < bs.higher.size(); ++i) {
        const auto& h = bs.higher[i];
        std::string tag = var(h.slot) + ": ";
        // (1)
        Complex v = list_derivative(r, fields, h.list).eval(origin);
        if (v.is_zero() || v != h.value) fail(tag + "list value at 0 is zero or differs from the record");
        // (2)
        VList tail(h.list.begin() + 1, h.list.end());
        Poly g = list_derivative(r, fields, tail);
        Poly expect = h.imaginary ? g.imag_part() : g.real_part();
        if (!vanishes(expect - h.r.poly())) fail(tag + "boundary function differs from the list value");
        if (h.field.apply(h.r.poly()).eval(origin).is_zero()) fail(tag + "L r vanishes at 0");
        // (3)
        for (std::size_t k = 0; k < i; ++k)
            if (!vanishes(h.field.apply(bs.higher[k].r.poly())))
                fail(tag + "field does not annihilate the function of " + var(bs.higher[k].slot));
        // (4) admissible and ordered
        if (h.list.empty() || h.list.front().field != static_cast<int>(i)) fail(tag + "first entry is not from its own slot");
        for (std::size_t e = 1; e < h.list.size(); ++e)
            if (h.list[e].field > h.list[e - 1].field) fail(tag + "list is not ordered");
        std::vector<int> counts(bs.higher.size(), 0);
        for (const auto& e : h.list) {
            if (e.field > static_cast<int>(i)) fail(tag + "list uses a later field");
            else ++counts[e.field];
        }
        Rational before = 0;
        for (std::size_t k = 0; k < i; ++k) before += counts[k] * invc[k];
        if (!(before < 1)) fail(tag + "list is not admissible");
        // (5)
        Rational total = 0;
        for (std::size_t k = 0; k <= i; ++k) total += counts[k] * invc[k];
        if (total != 1) fail(tag + "weighted count is " + to_string(total) + ", not 1");
    }
    // (6) every ordered list of weighted count < 1 vanishes, within the frontier.
    if (checkMinimality && !fields.empty()) {
        ListEnumerator en(r, fields, invc, -1, bs.frontier);
        for (int len = 2; len <= bs.frontier; ++len) {
            en.run(len, [&](const std::vector<Token>& list, const Complex&) {
                std::string s;
                for (const auto& t : list) s += (t.bar ? "Lb" : "L") + std::to_string(bs.higher[t.field].slot + 1) + " ";
                fail("minimality: list " + s + "of weighted count < 1 is nonzero at 0");
            });
        }
        out.lists_checked = en.evaluated;
    }
    return out;
}

namespace {

struct LinearSplit {
    Complex A, B;
    Poly tail;     // g - A z - B zbar
    Poly bad;      // constant, non-pure, or z_slot-dependent part of the tail
    Poly phi, psi; // tail = phi + conj(psi), both holomorphic
};

LinearSplit split_linear(const Poly& g, int slot) {
    int n = g.n();
    LinearSplit s;
    MultiIndexPair zj(n), zbj(n);
    zj.alpha(slot) = 1;
    zbj.beta(slot) = 1;
    s.A = g.coeff(zj);
    s.B = g.coeff(zbj);
    s.tail = Poly(n);
    s.bad = Poly(n);
    s.phi = Poly(n);
    s.psi = Poly(n);
    for (const auto& [m, c] : g.terms()) {
        if (m == zj || m == zbj) continue;
        s.tail.add_term(m, c);
        if (m.constant() || !m.pure() || m.degree_in(slot) > 0) {
            s.bad.add_term(m, c);
        } else if (m.holomorphic()) {
            s.phi.add_term(m, c);
        } else {
            s.psi.add_term(m.conj(), c.conj());
        }
    }
    return s;
}

bool is_unit(const CVector& v, int idx) {
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (v[k] != Complex(k == idx ? 1 : 0)) return false;
    return true;
}

// Rational t with t^e == x, if any.
std::optional<Rational> rational_root(const Rational& x, unsigned e) {
    if (sgn(x) <= 0) return std::nullopt;
    Integer a, b;
    if (!mpz_root(a.get_mpz_t(), x.get_num().get_mpz_t(), e)) return std::nullopt;
    if (!mpz_root(b.get_mpz_t(), x.get_den().get_mpz_t(), e)) return std::nullopt;
    return Rational(a, b);
}

std::vector<Poly> identity_maps(int n) {
    std::vector<Poly> m;
    for (int j = 0; j < n; ++j) m.push_back(Poly::z(n, j));
    return m;
}

}  // namespace

FirstBlockResult normalize_first_block(const BoundarySystem& bs, const HermPoly& r0, int maxRounds) {
    if (bs.higher.empty()) throw InputError("no slot beyond the Levi block: nothing to normalize");
    int n = r0.n();
    FirstBlockResult out;
    const Rational c0 = bs.higher.front().c;
    if (!(c0 > 2)) throw InputError("first higher entry is not above 2");
    std::size_t blockSize = 0;
    while (blockSize < bs.higher.size() && bs.higher[blockSize].c == c0) ++blockSize;

    Complex a = model_z1_coefficient(r0);
    out.maps = identity_maps(n);
    if (a != Complex(-1)) out.maps[0] = Poly::z(n, 0) * (Complex(-1) / a);
    HermPoly model = normalize_model_shape(r0);

    auto advance = [&](const std::vector<Poly>& step) {
        for (auto& q : out.maps) q = q.substitute(step);
        model = trusted_herm(model.poly().substitute(step));
        auto he = eliminate_harmonic(model);
        if (!he.h.is_zero()) {
            auto shift = identity_maps(n);
            shift[0] = Poly::z(n, 0) + he.h;
            for (auto& q : out.maps) q = q.substitute(shift);
            model = he.reduced;
        }
    };

    // Move each block direction onto its own coordinate axis.
    {
        std::vector<int> target;
        for (std::size_t h = 0; h < blockSize; ++h) {
            const auto& d = bs.higher[h].direction;
            int axis = -1;
            for (int k = 0; k < n - 1; ++k)
                if (is_unit(d, k)) axis = k + 1;
            if (axis < 0) throw InputError("block direction of " + var(bs.higher[h].slot) + " is not a coordinate axis");
            target.push_back(axis);
        }
        std::vector<Poly> perm = identity_maps(n);
        bool moved = false;
        std::vector<int> where(n);
        for (int k = 0; k < n; ++k) where[k] = k;
        for (std::size_t h = 0; h < blockSize; ++h) {
            int want = bs.higher[h].slot;
            int from = where[target[h]];
            if (from == want) continue;
            // swap the contents of want and from
            std::swap(perm[want], perm[from]);
            for (int k = 0; k < n; ++k) {
                if (where[k] == want) where[k] = from;
                else if (where[k] == from) where[k] = want;
            }
            moved = true;
        }
        if (moved) {
            advance(perm);
            out.trace.push_back("permuted coordinates onto the block directions");
        }
    }

    for (std::size_t h = 0; h < blockSize; ++h) out.block.push_back(bs.higher[h].slot);
    out.exact.assign(blockSize, false);
    BoundarySystem cur = bs;
    for (int round = 0; round < maxRounds; ++round) {
        cur = build_boundary_system(model);
        if (cur.higher.size() < blockSize) throw InputError("block shrank after a coordinate change");
        bool changed = false;
        for (std::size_t h = 0; h < blockSize && !changed; ++h) {
            const auto& hs = cur.higher[h];
            int v = hs.slot;
            if (!is_unit(hs.direction, v - 1)) throw InputError("block direction left its axis after a change");
            Poly g = hs.imaginary ? hs.g * Complex(0, -1) : hs.g;
            // r = Re g; linear in Re z_v with no tail?
            Poly target = Poly::z(n, v).real_part();
            Poly rj = g.real_part();
            auto split = split_linear(g, v);
            Complex D = split.A + split.B.conj();
            if (rj == target) {
                out.exact[h] = true;
                continue;
            }
            if (!split.bad.is_zero())
                throw PscContradiction("harmonic tail of " + var(v) + " is not harmonic", to_string(split.bad));
            if (D.is_zero()) throw InputError("inconsistent input: linear coefficient of " + var(v) + " vanishes");
            Poly tailSum = split.phi + split.psi;
            if (!tailSum.is_zero() || !D.is_real()) {
                // z_v -> (z_v - phi - psi) / D
                auto step = identity_maps(n);
                step[v] = (Poly::z(n, v) - tailSum) * (Complex(1) / D);
                advance(step);
                out.trace.push_back("linearized the boundary function of " + var(v));
                changed = true;
                continue;
            }
            // rj == kappa Re z_v with kappa = D real.
            Rational kappa = D.re;
            if (sgn(kappa) < 0) {
                auto step = identity_maps(n);
                step[v] = Poly::z(n, v) * Complex(-1);
                advance(step);
                out.trace.push_back("reflected " + var(v));
                changed = true;
                continue;
            }
            if (h == 0) {
                // multiply the defining function by 1/kappa, absorbing it into z1
                Rational s = 1 / kappa;
                auto step = identity_maps(n);
                step[0] = Poly::z(n, 0) * Complex(1 / s);
                for (auto& q : out.maps) q = q.substitute(step);
                model = trusted_herm(model.poly().substitute(step) * Complex(s));
                out.defining_scale *= s;
                out.trace.push_back("scaled the defining function by " + to_string(s));
                changed = true;
                continue;
            }
            // later block slots: z_v -> t z_v with t^(e+1) = 1/kappa
            unsigned e = 1;
            for (const auto& entry : hs.list)
                if (entry.field == static_cast<int>(h)) ++e;
            --e;  // the first entry is not part of g
            auto t = rational_root(1 / kappa, e + 1);
            if (!t) {
                out.trace.push_back(var(v) + ": boundary function is " + to_string(kappa) + " Re " + var(v) +
                                    "; no rational rescaling reaches Re " + var(v));
                continue;
            }
            auto step = identity_maps(n);
            step[v] = Poly::z(n, v) * Complex(*t);
            advance(step);
            out.trace.push_back("rescaled " + var(v));
            changed = true;
        }
        if (!changed) break;
    }
    out.bs = cur;
    out.model = model;
    return out;
}

TorsionReport detect_torsion(const BoundarySystem& bs, const HermPoly& r0) {
    TorsionReport t;
    if (r0.n() != bs.n) throw DimensionError("boundary system and model dimensions differ");
    if (bs.higher.empty()) {
        t.reason = "not applicable: no slot beyond the Levi block";
        return t;
    }
    Rational c0 = bs.higher.front().c;
    std::size_t h = 0;
    while (h < bs.higher.size() && bs.higher[h].c == c0) ++h;
    if (h == bs.higher.size()) {
        t.reason = "not applicable: no finite slot beyond the first block";
        return t;
    }
    const auto& hs = bs.higher[h];
    t.applicable = true;
    t.slot = hs.slot;
    t.g = hs.g;
    int n = bs.n;
    MultiIndexPair zj(n);
    zj.alpha(hs.slot) = 1;
    t.linear = hs.g.coeff(zj);
    t.obstruction = hs.g.filter([](const MultiIndexPair& m, const Complex&) { return !m.pure(); });
    t.torsion = !t.obstruction.is_zero();
    t.reason = t.torsion ? "the boundary function of " + var(hs.slot) + " carries the non-pluriharmonic term " +
                               to_string(t.obstruction)
                         : "the boundary function of " + var(hs.slot) + " is pluriharmonic";
    return t;
}

std::string list_string(const BoundarySystem& bs, const VList& list) {
    std::string s = "{";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) s += ", ";
        int slot = list[i].field < static_cast<int>(bs.higher.size()) ? bs.higher[list[i].field].slot : list[i].field;
        s += (list[i].bar ? "Lb" : "L") + std::to_string(slot + 1);
    }
    return s + "}";
}

Json to_json(const TorsionReport& t) {
    Json j;
    j["applicable"] = t.applicable;
    j["torsion"] = t.torsion;
    if (t.applicable) {
        j["slot"] = t.slot + 1;
        j["g"] = to_string(t.g);
        j["linear"] = to_string(t.linear);
        j["obstruction"] = to_string(t.obstruction);
    }
    j["reason"] = t.reason;
    return j;
}

Json to_json(const BoundarySystem& bs) {
    Json j;
    j["n"] = bs.n;
    j["levi_rank"] = bs.levi_rank;
    j["commutator"] = to_json(bs.commutator);
    j["commutator_text"] = to_string(bs.commutator);
    j["frontier"] = bs.frontier;
    j["truncated"] = bs.truncated;
    if (bs.truncated) j["truncation_degree"] = bs.truncation_degree;
    j["r1"] = to_string(bs.r1);
    Json levi = Json::array();
    for (const auto& f : bs.levi_fields) levi.push_back(to_string(f));
    j["levi_fields"] = levi;
    Json hs = Json::array();
    for (const auto& h : bs.higher) {
        Json e;
        e["slot"] = h.slot + 1;
        e["c"] = to_string(h.c);
        e["field"] = to_string(h.field);
        Json coeffs = Json::array();
        for (const auto& q : h.field.hol) coeffs.push_back(to_json(q));
        e["field_coefficients"] = coeffs;
        Json lst = Json::array();
        for (const auto& le : h.list) lst.push_back({{"slot", bs.higher[le.field].slot + 1}, {"conjugate", le.bar}});
        e["list"] = lst;
        e["list_text"] = list_string(bs, h.list);
        e["value_at_0"] = to_string(h.value);
        e["g"] = to_string(h.g);
        e["r"] = to_string(h.r);
        e["part"] = h.imaginary ? "Im" : "Re";
        hs.push_back(e);
    }
    j["higher"] = hs;
    j["lists_evaluated"] = bs.lists_evaluated;
    j["trace"] = bs.trace;
    if (bs.torsion) j["torsion"] = to_json(*bs.torsion);
    return j;
}

}  // namespace crm
