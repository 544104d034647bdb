#include "crm/levi.hpp"

#include "crm/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace crm {

PolyMatrix complex_hessian(const HermPoly& p) {
    int n = p.n();
    PolyMatrix H(n, std::vector<Poly>(n, Poly(n)));
    for (int j = 0; j < n; ++j) {
        Poly dj = p.poly().dz(j);
        for (int k = 0; k < n; ++k) H[j][k] = dj.dzbar(k);
    }
    return H;
}

CMatrix hessian_at(const PolyMatrix& H, const std::vector<Complex>& z) {
    int n = static_cast<int>(H.size());
    CMatrix M(n - 1, CVector(n - 1));
    for (int j = 1; j < n; ++j)
        for (int k = j; k < n; ++k) {
            M[j - 1][k - 1] = H[j][k].eval(z);
            M[k - 1][j - 1] = M[j - 1][k - 1].conj();
        }
    return M;
}

Rational sqrt_upper(const Rational& x) {
    if (sgn(x) <= 0) return 0;
    Integer num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        Integer a, b;
        mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
        return Rational(a, b);
    }
    // floor(sqrt(x * 4^k)) + 1 over 2^k
    const unsigned k = 40;
    Integer scaled = (num << (2 * k)) / den;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
    Rational q(r + 1, Integer(1) << k);
    q.canonicalize();
    while (q * q < x) q += Rational(1, Integer(1) << k);
    return q;
}

namespace {

std::vector<int> slot_exponents(const MultiIndexPair& m, bool holo) {
    std::vector<int> v;
    for (int j = 1; j < m.n(); ++j) v.push_back(holo ? m.alpha(j) : m.beta(j));
    return v;
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool parallel(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (static_cast<long>(a[i]) * b[j] != static_cast<long>(a[j]) * b[i]) return false;
    return true;
}

// t with a = t b for parallel nonzero vectors
Rational ratio(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) {
            Rational t(a[i], b[i]);
            t.canonicalize();
            return t;
        }
    return 0;
}

// kappa with |g.a||h.a| = kappa |al.a||be.a| for all a, when it exists.
std::optional<Rational> alignment(const std::vector<int>& g, const std::vector<int>& h,
                                  const std::vector<int>& al, const std::vector<int>& be) {
    if ((g == al && h == be) || (g == be && h == al)) return Rational(1);
    if (parallel(g, al) && parallel(h, al) && parallel(be, al)) {
        Rational r = ratio(g, al) * ratio(h, al) / (ratio(be, al));
        r.canonicalize();
        return r;
    }
    return std::nullopt;
}

std::vector<Rational> lattice(int L) {
    std::set<Rational> s;
    for (int q = 1; q <= L; ++q)
        for (int p = 0; p <= q; ++p) {
            Rational t(p, q);
            t.canonicalize();
            s.insert(t);
        }
    return {s.begin(), s.end()};
}

// Fraction vectors over the lattice summing to one; equal split first, then singletons.
std::vector<std::vector<Rational>> distributions(int count, int L) {
    std::vector<std::vector<Rational>> out;
    if (count == 0) return out;
    std::vector<Rational> equal(count, Rational(1, count));
    out.push_back(equal);
    for (int i = 0; i < count; ++i) {
        std::vector<Rational> d(count, Rational(0));
        d[i] = 1;
        if (d != equal) out.push_back(d);
    }
    if (count > 4) return out;
    auto F = lattice(L);
    std::vector<Rational> cur(count);
    std::function<void(int, Rational)> rec = [&](int i, Rational left) {
        if (i == count - 1) {
            if (std::find(F.begin(), F.end(), left) == F.end()) return;
            cur[i] = left;
            if (std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
            return;
        }
        for (const auto& f : F) {
            if (f > left) break;
            cur[i] = f;
            rec(i + 1, left - f);
        }
    };
    rec(0, Rational(1));
    return out;
}

struct MixedInfo {
    MultiIndexPair mono;
    Complex c;
    Rational absUpper;  // rational upper bound for |c|
    std::vector<int> al, be;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
};

// Backtracking over mixed terms; shareOf(i, split, frac) adds the charge to each balanced term.
bool assign(std::size_t i, const std::vector<MixedInfo>& mixed, const std::vector<std::vector<int>>& allowed,
            const std::map<std::vector<int>, Rational>& C, bool leviMode, int L,
            std::map<std::vector<int>, Rational>& load, std::vector<std::vector<Rational>>& chosen) {
    if (i == mixed.size()) return true;
    const auto& mi = mixed[i];
    const auto& idx = allowed[i];
    for (const auto& d : distributions(static_cast<int>(idx.size()), L)) {
        auto saved = load;
        bool ok = true;
        for (std::size_t s = 0; s < idx.size() && ok; ++s) {
            if (sgn(d[s]) == 0) continue;
            const auto& [g, h] = mi.splits[idx[s]];
            Rational kappa = 1;
            if (leviMode) kappa = *alignment(g, h, mi.al, mi.be);
            Rational charge = d[s] * mi.absUpper / kappa;
            load[g] += charge / C.at(g);
            load[h] += charge / C.at(h);
            if (load[g] > 1 || load[h] > 1 || (!leviMode && (load[g] >= 1 || load[h] >= 1))) ok = false;
        }
        if (ok) {
            chosen[i] = d;
            if (assign(i + 1, mixed, allowed, C, leviMode, L, load, chosen)) return true;
        }
        load = saved;
    }
    return false;
}

}  // namespace

bool CsCertificate::kernel_intersections_trivial() const {
    for (const auto& mp : pairings)
        if (mp.kernel_intersection_dim != 0) return false;
    return !pairings.empty();
}

std::string kernel_row_string(const std::vector<int>& row, int firstSlot) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        int c = row[i];
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        int a = std::abs(c);
        if (a != 1) s += std::to_string(a);
        s += "a" + std::to_string(firstSlot + static_cast<int>(i));
    }
    return (s.empty() ? "0" : s) + " = 0";
}

CsCertificate cauchy_schwarz_pairing(const HermPoly& p, int latticeDenominator) {
    CsCertificate cert;
    std::map<std::vector<int>, Rational> C;
    std::vector<MixedInfo> mixed;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree_in(0)) {
            cert.reason = "polynomial depends on z1";
            return cert;
        }
        if (m.pure()) continue;
        if (m.balanced()) {
            C[slot_exponents(m, true)] = c.re;
            continue;
        }
        if (GradedLex{}(m.conj(), m)) continue;  // keep one representative per pair
        MixedInfo mi;
        mi.mono = m;
        mi.c = c;
        mi.absUpper = sqrt_upper(c.norm2());
        mi.al = slot_exponents(m, true);
        mi.be = slot_exponents(m, false);
        mixed.push_back(std::move(mi));
    }
    for (const auto& [g, c] : C) {
        if (sgn(c) < 0) {
            cert.reason = "negative balanced coefficient";
            return cert;
        }
    }
    if (mixed.empty()) {
        cert.found = true;
        cert.levi_sound = true;
        cert.reason = "no mixed terms";
        return cert;
    }
    std::vector<std::vector<int>> positives;
    for (const auto& [g, c] : C)
        if (sgn(c) > 0) positives.push_back(g);
    for (auto& mi : mixed) {
        auto target = add(mi.al, mi.be);
        for (std::size_t a = 0; a < positives.size(); ++a)
            for (std::size_t b = a; b < positives.size(); ++b)
                if (add(positives[a], positives[b]) == target) mi.splits.emplace_back(positives[a], positives[b]);
        if (mi.splits.empty()) {
            cert.reason = "mixed term " + to_string(Poly::monomial(mi.mono, mi.c)) + " has no splitting against balanced terms";
            return cert;
        }
    }

    auto build = [&](const std::vector<std::vector<int>>& allowed, const std::vector<std::vector<Rational>>& chosen,
                     bool leviMode) {
        cert.pairings.clear();
        for (std::size_t i = 0; i < mixed.size(); ++i) {
            const auto& mi = mixed[i];
            MixedPairing mp;
            mp.mixed = mi.mono;
            mp.coeff = mi.c;
            CMatrix stacked;
            for (std::size_t s = 0; s < allowed[i].size(); ++s) {
                if (sgn(chosen[i][s]) == 0) continue;
                const auto& [g, h] = mi.splits[allowed[i][s]];
                Splitting sp;
                sp.first = g;
                sp.second = h;
                sp.fraction = chosen[i][s];
                auto kap = alignment(g, h, mi.al, mi.be);
                sp.aligned = kap.has_value();
                sp.scale = kap.value_or(Rational(0));
                mp.splittings.push_back(sp);
                mp.kernel_systems.push_back({g, h});
                for (const auto& row : {g, h}) {
                    CVector r;
                    for (int v : row) r.push_back(Complex(v));
                    stacked.push_back(r);
                }
            }
            int dims = static_cast<int>(mi.al.size());
            mp.kernel_intersection_dim = dims - rank(stacked);
            cert.pairings.push_back(std::move(mp));
        }
        (void)leviMode;
    };

    // Sound pass: aligned splittings only, charged at the Levi level.
    std::vector<std::vector<int>> allowed(mixed.size());
    bool everyTermAligned = true;
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        for (std::size_t s = 0; s < mixed[i].splits.size(); ++s)
            if (alignment(mixed[i].splits[s].first, mixed[i].splits[s].second, mixed[i].al, mixed[i].be))
                allowed[i].push_back(static_cast<int>(s));
        if (allowed[i].empty()) everyTermAligned = false;
    }
    std::vector<std::vector<Rational>> chosen(mixed.size());
    if (everyTermAligned) {
        std::map<std::vector<int>, Rational> load;
        if (assign(0, mixed, allowed, C, true, latticeDenominator, load, chosen)) {
            build(allowed, chosen, true);
            cert.found = true;
            cert.levi_sound = true;
            cert.levi_share = load;
            // function-level usage of the same allocation
            for (std::size_t i = 0; i < mixed.size(); ++i)
                for (std::size_t s = 0; s < allowed[i].size(); ++s) {
                    const auto& [g, h] = mixed[i].splits[allowed[i][s]];
                    Rational charge = chosen[i][s] * mixed[i].absUpper;
                    cert.usage[g] += charge / C.at(g);
                    cert.usage[h] += charge / C.at(h);
                }
            cert.reason = "aligned splittings absorb every mixed term";
            return cert;
        }
    }

    // Kernel-only pass: any splitting, function-level charge below one per balanced term.
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        allowed[i].clear();
        for (std::size_t s = 0; s < mixed[i].splits.size(); ++s) allowed[i].push_back(static_cast<int>(s));
    }
    std::map<std::vector<int>, Rational> load;
    if (!assign(0, mixed, allowed, C, false, latticeDenominator, load, chosen)) {
        cert.reason = "no lattice allocation keeps every balanced term below full use";
        return cert;
    }
    build(allowed, chosen, false);
    cert.found = true;
    cert.usage = load;
    cert.levi_sound = false;
    cert.reason = everyTermAligned
                      ? "aligned splittings exist but exceed the Levi budget"
                      : "some mixed term has no aligned splitting; the kernel condition alone does not bound the Levi form";
    return cert;
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedPSD: return "CertifiedPSD";
        case VerdictKind::Refuted: return "Refuted";
        default: return "Unknown";
    }
}

namespace {

std::vector<Complex> phases() {
    return {Complex(1),
            Complex(-1),
            Complex(0, 1),
            Complex(0, -1),
            Complex(Rational(3, 5), Rational(4, 5)),
            Complex(Rational(3, 5), Rational(-4, 5)),
            Complex(Rational(-3, 5), Rational(4, 5)),
            Complex(Rational(-3, 5), Rational(-4, 5)),
            Complex(Rational(4, 5), Rational(3, 5)),
            Complex(Rational(-4, 5), Rational(-3, 5))};
}

std::vector<Rational> moduli() {
    return {Rational(1), Rational(1, 10), Rational(10), Rational(1, 100), Rational(100),
            Rational(1, 2), Rational(2), Rational(1, 3), Rational(3)};
}

}  // namespace

std::vector<std::vector<Complex>> sample_points(int dims, int count, std::uint64_t seed) {
    std::vector<std::vector<Complex>> pts;
    if (dims <= 0 || count <= 0) return pts;
    const auto M = moduli();
    const auto P = phases();
    int gridBudget = count - count / 4;
    // indices: [mod_0, phase_0, mod_1, phase_1, ...], enumerated by increasing total rank
    int slots = 2 * dims;
    std::vector<int> cap(slots);
    for (int s = 0; s < slots; ++s) cap[s] = static_cast<int>(s % 2 == 0 ? M.size() : P.size()) - 1;
    int maxRank = 0;
    for (int c : cap) maxRank += c;
    std::vector<int> idx(slots, 0);
    std::function<void(int, int)> rec = [&](int s, int left) {
        if (static_cast<int>(pts.size()) >= gridBudget) return;
        if (s == slots - 1) {
            if (left > cap[s]) return;
            idx[s] = left;
            std::vector<Complex> z;
            for (int d = 0; d < dims; ++d) z.push_back(P[idx[2 * d + 1]] * Complex(M[idx[2 * d]]));
            pts.push_back(std::move(z));
            return;
        }
        for (int v = 0; v <= std::min(left, cap[s]); ++v) {
            idx[s] = v;
            rec(s + 1, left - v);
        }
    };
    for (int r = 0; r <= maxRank && static_cast<int>(pts.size()) < gridBudget; ++r) rec(0, r);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-24, 24), den(1, 9);
    while (static_cast<int>(pts.size()) < count) {
        std::vector<Complex> z;
        for (int d = 0; d < dims; ++d) z.push_back(Complex(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
        for (auto& c : z) {
            c.re.canonicalize();
            c.im.canonicalize();
        }
        pts.push_back(std::move(z));
    }
    return pts;
}

PositivityVerdict psd_verdict(const HermPoly& p, const PsdOptions& opts) {
    PositivityVerdict v;
    int n = p.n();
    for (const auto& [m, c] : p.terms())
        if (m.degree_in(0)) throw InputError("positivity check expects a polynomial in z2..zn only");

    // Tier 1: Gram matrix over holomorphic monomials, pure terms dropped (pluriharmonic).
    {
        std::set<MultiIndexPair, GradedLex> basisSet;
        for (const auto& [m, c] : p.terms()) {
            if (m.pure()) continue;
            MultiIndexPair a(n), b(n);
            for (int j = 0; j < n; ++j) {
                a.alpha(j) = m.alpha(j);
                b.alpha(j) = m.beta(j);
            }
            basisSet.insert(a);
            basisSet.insert(b);
        }
        GramCertificate g;
        g.basis.assign(basisSet.begin(), basisSet.end());
        std::size_t k = g.basis.size();
        g.gram.assign(k, CVector(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                MultiIndexPair m(n);
                for (int t = 0; t < n; ++t) {
                    m.alpha(t) = g.basis[i].alpha(t);
                    m.beta(t) = g.basis[j].alpha(t);
                }
                g.gram[i][j] = p.coeff(m);
            }
        g.ldl = diagonalize_hermitian(g.gram);
        if (g.ldl.psd()) {
            v.kind = VerdictKind::CertifiedPSD;
            v.tier = 1;
            v.gram = std::move(g);
            v.notes.push_back("sum of squared moduli: Gram matrix is positive semidefinite");
            return v;
        }
        v.notes.push_back("tier 1: Gram matrix is indefinite");
    }

    // Tier 2: Cauchy-Schwarz pairing.
    v.cs = cauchy_schwarz_pairing(p, opts.latticeDenominator);
    if (v.cs->levi_sound) {
        v.kind = VerdictKind::CertifiedPSD;
        v.tier = 2;
        v.notes.push_back("Cauchy-Schwarz pairing: " + v.cs->reason);
        return v;
    }
    v.notes.push_back("tier 2: " + (v.cs->reason.empty() ? std::string("no certificate") : v.cs->reason));

    // Tier 3: exact evaluation of the Levi form at sample points.
    if (n < 2) return v;
    PolyMatrix H = complex_hessian(p);
    auto pts = sample_points(n - 1, opts.samples, opts.seed);
    for (const auto& zs : pts) {
        ++v.samples_tried;
        std::vector<Complex> z{Complex(0)};
        z.insert(z.end(), zs.begin(), zs.end());
        CMatrix Hz = hessian_at(H, z);
        Congruence c = diagonalize_hermitian(Hz);
        if (auto neg = c.negative_pivot()) {
            CVector a = c.column(*neg);
            Complex val = hermitian_form(Hz, a);
            // a^* H a is the Levi form in the direction conj(a)
            for (auto& x : a) x = x.conj();
            v.kind = VerdictKind::Refuted;
            v.tier = 3;
            v.witness_point = zs;
            v.witness_direction = a;
            v.witness_value = val.re;
            return v;
        }
    }
    v.kind = VerdictKind::Unknown;
    v.notes.push_back("no negative value among " + std::to_string(v.samples_tried) + " sample points");
    return v;
}

bool replay_verdict(const HermPoly& p, const PositivityVerdict& v) {
    int n = p.n();
    if (v.kind == VerdictKind::Refuted) {
        if (!v.witness_point || !v.witness_direction) return false;
        // Recompute the Levi form from scratch: sum a_j conj(a_k) d_j dbar_k p.
        std::vector<Complex> z{Complex(0)};
        z.insert(z.end(), v.witness_point->begin(), v.witness_point->end());
        const auto& a = *v.witness_direction;
        Complex s;
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) s += a[j - 1] * a[k - 1].conj() * p.poly().dz(j).dzbar(k).eval(z);
        return s.is_real() && sgn(s.re) < 0 && s.re == v.witness_value;
    }
    if (v.kind != VerdictKind::CertifiedPSD) return false;
    if (v.tier == 1) {
        if (!v.gram) return false;
        const auto& g = *v.gram;
        // Gram entries reproduce every non-pure term, and nothing else.
        Poly rebuilt(n);
        for (std::size_t i = 0; i < g.basis.size(); ++i)
            for (std::size_t j = 0; j < g.basis.size(); ++j) {
                MultiIndexPair m(n);
                for (int t = 0; t < n; ++t) {
                    m.alpha(t) = g.basis[i].alpha(t);
                    m.beta(t) = g.basis[j].alpha(t);
                }
                rebuilt.add_term(m, g.gram[i][j]);
            }
        Poly nonpure = p.poly().filter([](const MultiIndexPair& m, const Complex&) { return !m.pure(); });
        if (rebuilt != nonpure) return false;
        // B^* G B = diag(d), d >= 0, B invertible.
        std::size_t k = g.basis.size();
        const auto& B = g.ldl.basis;
        if (rank(B) != static_cast<int>(k)) return false;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) {
                Complex s;
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) s += B[i][r].conj() * g.gram[i][j] * B[j][c];
                Complex want = r == c ? Complex(g.ldl.diag[r]) : Complex(0);
                if (s != want) return false;
                if (r == c && sgn(g.ldl.diag[r]) < 0) return false;
            }
        return true;
    }
    if (v.tier == 2) {
        if (!v.cs || !v.cs->levi_sound) return false;
        std::map<std::vector<int>, Rational> balanced;
        int mixedCount = 0;
        for (const auto& [m, c] : p.terms()) {
            if (m.pure()) continue;
            std::vector<int> a;
            for (int j = 1; j < n; ++j) a.push_back(m.alpha(j));
            if (m.balanced()) {
                if (sgn(c.re) < 0) return false;
                balanced[a] = c.re;
            } else {
                ++mixedCount;
            }
        }
        if (static_cast<int>(v.cs->pairings.size()) * 2 != mixedCount) return false;
        std::map<std::vector<int>, Rational> load;
        for (const auto& mp : v.cs->pairings) {
            if (p.coeff(mp.mixed) != mp.coeff) return false;
            std::vector<int> al, be, sum;
            for (int j = 1; j < n; ++j) {
                al.push_back(mp.mixed.alpha(j));
                be.push_back(mp.mixed.beta(j));
                sum.push_back(al.back() + be.back());
            }
            Rational total = 0;
            Rational absUpper = sqrt_upper(mp.coeff.norm2());
            if (absUpper * absUpper < mp.coeff.norm2()) return false;
            for (const auto& sp : mp.splittings) {
                std::vector<int> s2;
                for (std::size_t i = 0; i < sum.size(); ++i) s2.push_back(sp.first[i] + sp.second[i]);
                if (s2 != sum || !balanced.count(sp.first) || !balanced.count(sp.second)) return false;
                // |first.a||second.a| = scale |al.a||be.a| must hold identically
                bool diag = (sp.first == al && sp.second == be) || (sp.first == be && sp.second == al);
                if (!diag) {
                    // all four parallel: compare against a common direction
                    std::vector<int> u = al;
                    auto multiple = [&](const std::vector<int>& w, Rational& t) {
                        t = 0;
                        bool set = false;
                        for (std::size_t i = 0; i < u.size(); ++i) {
                            if (u[i] == 0) {
                                if (w[i] != 0) return false;
                                continue;
                            }
                            Rational q(w[i], u[i]);
                            q.canonicalize();
                            if (set && q != t) return false;
                            t = q;
                            set = true;
                        }
                        return true;
                    };
                    Rational tg, th, tb;
                    if (!multiple(sp.first, tg) || !multiple(sp.second, th) || !multiple(be, tb)) return false;
                    if (tg * th != sp.scale * tb) return false;
                } else if (sp.scale != 1) {
                    return false;
                }
                if (sgn(sp.fraction) < 0 || sgn(sp.scale) <= 0) return false;
                total += sp.fraction;
                Rational charge = sp.fraction * absUpper / sp.scale;
                load[sp.first] += charge / balanced[sp.first];
                load[sp.second] += charge / balanced[sp.second];
            }
            if (total != 1) return false;
        }
        for (const auto& [g, l] : load)
            if (l > 1) return false;
        return true;
    }
    return false;
}

CoeffBoundReport one_var_coeff_check(const HermPoly& P, bool assumeNonneg, int samples) {
    CoeffBoundReport rep;
    int n = P.n();
    int deg = -1;
    for (const auto& [m, c] : P.terms()) {
        for (int j = 0; j < n; ++j) {
            if (m.degree_in(j) == 0) continue;
            if (rep.variable >= 0 && rep.variable != j) throw InputError("polynomial involves more than one variable");
            rep.variable = j;
        }
        int d = m.total_degree();
        if (deg >= 0 && d != deg) throw InputError("polynomial is not homogeneous");
        deg = d;
    }
    if (deg < 0) {
        rep.all_satisfied = true;
        rep.c0_nonneg = true;
        return rep;
    }
    if (deg % 2 != 0) throw InputError("odd degree");
    rep.m = deg / 2;
    if (rep.variable < 0) rep.variable = 1 < n ? 1 : 0;
    int j = rep.variable;
    auto coefAt = [&](int k) {
        MultiIndexPair m(n);
        m.alpha(j) = rep.m + k;
        m.beta(j) = rep.m - k;
        return P.coeff(m);
    };
    rep.c0 = coefAt(0).re;
    rep.c0_nonneg = sgn(rep.c0) >= 0;
    rep.c0_positive = sgn(rep.c0) > 0;
    rep.all_satisfied = rep.c0_nonneg;
    Rational c0sq = rep.c0 * rep.c0;
    for (int k = 1; k <= rep.m; ++k) {
        CoeffBound b{k, coefAt(k).norm2(), false};
        b.satisfied = b.abs_squared <= c0sq;
        rep.all_satisfied = rep.all_satisfied && b.satisfied;
        rep.bounds.push_back(b);
    }
    if (!assumeNonneg) {
        // P(e^{i theta}) at rational points of the unit circle
        for (int t = 0; t < samples; ++t) {
            Rational s(t - samples / 2, 7);
            s.canonicalize();
            Rational d = 1 + s * s;
            Complex z((1 - s * s) / d, 2 * s / d);
            std::vector<Complex> pt(n, Complex(0));
            pt[j] = z;
            Complex val = P.poly().eval(pt);
            if (sgn(val.re) < 0) {
                rep.negative_point = z;
                break;
            }
        }
    }
    return rep;
}

std::vector<MultiIndexPair> m_dominant_coefficients(const HermPoly& P, const Rational& M) {
    std::vector<MultiIndexPair> out;
    Rational M2 = M * M;
    for (const auto& [m, c] : P.terms()) {
        Rational base = M2 * c.norm2();
        bool dom = true;
        for (const auto& [m2, c2] : P.terms())
            if (c2.norm2() > base) {
                dom = false;
                break;
            }
        if (dom) out.push_back(m);
    }
    return out;
}

std::vector<SplitPart> newton_split_check(const HermPoly& P, const std::vector<int>& groups) {
    if (static_cast<int>(groups.size()) != P.n()) throw InputError("partition length differs from dimension");
    bool has0 = false, has1 = false;
    for (int g : groups) {
        if (g < -1 || g > 1) throw InputError("partition labels must be 0, 1 or -1");
        has0 = has0 || g == 0;
        has1 = has1 || g == 1;
    }
    if (!has0 || !has1) throw InputError("partition needs two nonempty groups");
    std::map<std::pair<int, int>, Poly> parts;
    for (const auto& [m, c] : P.terms()) {
        int p = 0, q = 0;
        for (int j = 0; j < P.n(); ++j) {
            if (m.degree_in(j) == 0) continue;
            if (groups[j] < 0) throw InputError("polynomial involves a variable outside the partition");
            (groups[j] == 0 ? p : q) += m.degree_in(j);
        }
        auto [it, _] = parts.try_emplace({p, q}, Poly(P.n()));
        it->second.add_term(m, c);
    }
    int maxp = -1, maxq = -1;
    for (const auto& [k, v] : parts) {
        maxp = std::max(maxp, k.first);
        maxq = std::max(maxq, k.second);
    }
    std::vector<SplitPart> out;
    for (auto& [k, v] : parts)
        out.push_back({k.first, k.second, trusted_herm(v), k.first == maxp || k.second == maxq});
    return out;
}

HermPoly model_truncate(const HermPoly& r, const Weight& mu) {
    if (mu.n() != r.n()) throw DimensionError("weight and polynomial dimensions differ");
    Poly out(r.n());
    for (const auto& [m, c] : r.terms()) {
        bool z1Linear = m.degree_in(0) == 1 && m.total_degree() == 1;
        Rational w = weighted_order(m, mu);
        if (z1Linear) {
            out.add_term(m, c);
            continue;
        }
        if (w < 1) throw InputError("term " + to_string(Poly::monomial(m, c)) + " has weight " + to_string(w) + " < 1");
        if (w == 1) out.add_term(m, c);
    }
    return trusted_herm(std::move(out));
}

Json to_json(const PositivityVerdict& v) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["tier"] = v.tier;
    j["samples_tried"] = v.samples_tried;
    auto cvec = [](const CVector& x) {
        Json a = Json::array();
        for (const auto& c : x) a.push_back(to_string(c));
        return a;
    };
    if (v.gram) {
        Json g;
        Json basis = Json::array();
        for (const auto& m : v.gram->basis) basis.push_back(to_string(Poly::monomial(m, Complex(1))));
        g["basis"] = basis;
        Json rows = Json::array();
        for (const auto& row : v.gram->gram) rows.push_back(cvec(row));
        g["matrix"] = rows;
        Json d = Json::array();
        for (const auto& q : v.gram->ldl.diag) d.push_back(to_string(q));
        g["ldl_diagonal"] = d;
        Json b = Json::array();
        for (const auto& row : v.gram->ldl.basis) b.push_back(cvec(row));
        g["ldl_basis"] = b;
        j["gram"] = g;
    }
    if (v.cs) {
        const auto& cs = *v.cs;
        Json c;
        c["found"] = cs.found;
        c["levi_sound"] = cs.levi_sound;
        c["reason"] = cs.reason;
        c["kernel_intersections_trivial"] = cs.kernel_intersections_trivial();
        Json ps = Json::array();
        for (const auto& mp : cs.pairings) {
            Json e;
            e["mixed"] = to_string(Poly::monomial(mp.mixed, Complex(1)));
            e["coeff"] = to_string(mp.coeff);
            Json sp = Json::array();
            for (const auto& s : mp.splittings)
                sp.push_back({{"first", s.first}, {"second", s.second}, {"fraction", to_string(s.fraction)},
                              {"aligned", s.aligned}});
            e["splittings"] = sp;
            Json ks = Json::array();
            for (const auto& sys : mp.kernel_systems) {
                Json rows = Json::array();
                for (const auto& row : sys) rows.push_back(kernel_row_string(row));
                ks.push_back(rows);
            }
            e["kernel_systems"] = ks;
            e["kernel_intersection_dim"] = mp.kernel_intersection_dim;
            ps.push_back(e);
        }
        c["pairings"] = ps;
        Json usage = Json::array();
        for (const auto& [k, q] : cs.usage) usage.push_back({{"balanced", k}, {"usage", to_string(q)}});
        c["usage"] = usage;
        j["cauchy_schwarz"] = c;
    }
    if (v.witness_point) j["witness_point"] = cvec(*v.witness_point);
    if (v.witness_direction) j["witness_direction"] = cvec(*v.witness_direction);
    if (v.kind == VerdictKind::Refuted) j["witness_value"] = to_string(v.witness_value);
    j["notes"] = v.notes;
    return j;
}

}  // namespace crm
