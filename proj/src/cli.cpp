#include "crm/cli.hpp"

#include "crm/boundary_system.hpp"
#include "crm/errors.hpp"
#include "crm/json_io.hpp"
#include "crm/levi.hpp"
#include "crm/normal_form.hpp"
#include "crm/parse.hpp"
#include "crm/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace crm {

namespace {

struct RunConfig {
    std::string input;
    std::string expr;
    int n = 0;
    std::string weight = "auto";
    bool json = false;
    std::uint64_t seed = 20240611;
    int degreeBound = 4;
    int samples = 4096;
    int latticeDenominator = 4;
    int frontier = 0;
    bool assertPsc = false;
    bool commutator = false;
    bool noCommutator = false;
    bool requireCertificate = false;
    bool noMinimality = false;
    std::string only;
    std::string m = "6";
};

struct Loaded {
    HermPoly r;
    std::string text;  // text form as given, or the canonical text for JSON input
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Loaded load_text(const std::string& text, int n) {
    int dim = n > 0 ? n : std::max(infer_dimension(text), 1);
    return {parse_poly(text, dim), text};
}

Loaded load_input(const RunConfig& cfg) {
    bool haveFile = !cfg.input.empty(), haveExpr = !cfg.expr.empty();
    if (haveFile == haveExpr) throw InputError("give exactly one input: a file path or --expr");
    if (haveExpr) return load_text(cfg.expr, cfg.n);
    std::ifstream in(cfg.input);
    if (!in) throw InputError("cannot read " + cfg.input);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string body = trim(ss.str());
    if (!body.empty() && body.front() == '{') {
        Json j;
        try {
            j = Json::parse(body);
        } catch (const Json::exception& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
        const Json* node = &j;
        if (j.contains("polynomial")) node = &j["polynomial"];
        if (node->contains("terms")) {
            HermPoly r = herm_from_json(*node);
            if (cfg.n > 0 && cfg.n != r.n()) throw DimensionError("--n disagrees with the JSON input");
            return {r, to_string(r)};
        }
        if (j.contains("input") && j["input"].is_string()) {
            int n = cfg.n > 0 ? cfg.n : j.value("n", 0);
            return load_text(j["input"].get<std::string>(), n);
        }
        throw InputError("JSON input needs \"terms\", \"polynomial\" or \"input\"");
    }
    std::string text;
    std::istringstream lines(body);
    for (std::string line; std::getline(lines, line);) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        text += line + " ";
    }
    return load_text(trim(text), cfg.n);
}

// "1, 1/8, 1/12" or "(1,1/8,1/12)" as mu; a JSON {"lambda": [...]} as inverse weight.
Weight parse_weight(const std::string& s, int n) {
    std::string t = trim(s);
    Weight w;
    if (!t.empty() && t.front() == '{') {
        w = inverse_weight_from_json(Json::parse(t)).inverse();
    } else {
        std::replace(t.begin(), t.end(), '(', ' ');
        std::replace(t.begin(), t.end(), ')', ' ');
        std::stringstream ss(t);
        for (std::string item; std::getline(ss, item, ',');) w.mu.push_back(parse_rational(trim(item)));
    }
    if (w.n() != n) throw DimensionError("weight has " + std::to_string(w.n()) + " entries, expected " + std::to_string(n));
    w.validate();
    return w;
}

std::string compact(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

std::optional<InverseWeight> commutator_of(const HermPoly& r) {
    try {
        return build_boundary_system(r).commutator;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string rows_string(const std::vector<std::vector<int>>& K) {
    std::string s = "[";
    for (std::size_t i = 0; i < K.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t k = 0; k < K[i].size(); ++k) s += (k ? "," : "") + std::to_string(K[i][k]);
        s += "]";
    }
    return s + "]";
}

std::string list_of(const std::vector<Rational>& A) {
    std::string s = "[";
    for (std::size_t i = 0; i < A.size(); ++i) s += (i ? "," : "") + to_string(A[i]);
    return s + "]";
}

int cmd_parse(const RunConfig& cfg, std::ostream& out) {
    Loaded in = load_input(cfg);
    if (cfg.json) {
        out << Json{{"n", in.r.n()}, {"input", to_string(in.r)}, {"polynomial", to_json(in.r)}}.dump(2) << "\n";
        return kOk;
    }
    out << "n = " << in.r.n() << "\n" << to_string(in.r) << "\n";
    return kOk;
}

int cmd_multitype(const RunConfig& cfg, std::ostream& out) {
    Loaded in = load_input(cfg);
    CommutatorOracle oracle;
    if (!cfg.noCommutator) oracle = commutator_of;
    Multitype mt = multitype_search(in.r, cfg.degreeBound, oracle);
    if (cfg.json) {
        Json j{{"input", to_string(in.r)},
               {"multitype", to_json(mt.value)},
               {"status", to_string(mt.status)},
               {"witness", to_json(mt.witness)},
               {"model", to_string(mt.transformed)},
               {"trace", mt.trace}};
        if (mt.commutator) j["commutator"] = to_json(*mt.commutator);
        out << j.dump(2) << "\n";
        return kOk;
    }
    if (cfg.commutator) {
        out << "search: " << compact(to_string(mt.value))
            << "; commutator: " << (mt.commutator ? compact(to_string(*mt.commutator)) : "unavailable") << "\n";
        if (mt.commutator && mt.value < *mt.commutator) out << "search < commutator (lexicographic)\n";
    } else {
        out << to_string(mt.value) << " [" << to_string(mt.status) << "]\n";
    }
    if (!mt.witness.is_identity()) {
        for (int j = 0; j < mt.witness.n(); ++j)
            out << "  z" << j + 1 << " -> " << to_string(mt.witness.maps()[j]) << "\n";
    }
    return kOk;
}

int cmd_psd(const RunConfig& cfg, std::ostream& out) {
    Loaded in = load_input(cfg);
    HermPoly p = model_part(in.r);
    PsdOptions opts;
    opts.seed = cfg.seed;
    opts.samples = cfg.samples;
    opts.latticeDenominator = cfg.latticeDenominator;
    PositivityVerdict v = psd_verdict(p, opts);
    bool replay = replay_verdict(p, v);
    if (cfg.json) {
        Json j = to_json(v);
        j["input"] = to_string(in.r);
        j["replay"] = replay;
        out << j.dump(2) << "\n";
    } else {
        out << to_string(v.kind);
        if (v.tier) out << " (tier " << v.tier << ")";
        out << "\n";
        if (v.cs) {
            for (const auto& mp : v.cs->pairings) {
                out << "  pairing for " << to_string(Poly::monomial(mp.mixed, Complex(1))) << ":";
                for (const auto& sys : mp.kernel_systems) {
                    out << " {";
                    for (std::size_t i = 0; i < sys.size(); ++i) out << (i ? ", " : "") << kernel_row_string(sys[i]);
                    out << "}";
                }
                out << " intersection dim " << mp.kernel_intersection_dim << "\n";
            }
        }
        if (v.kind == VerdictKind::Refuted && v.witness_point) {
            out << "  witness point:";
            for (const auto& c : *v.witness_point) out << " " << to_string(c);
            out << "\n  witness direction:";
            for (const auto& c : *v.witness_direction) out << " " << to_string(c);
            out << "\n  Levi form value: " << to_string(v.witness_value) << "\n";
        }
        for (const auto& note : v.notes) out << "  note: " << note << "\n";
        out << "  replay: " << (replay ? "ok" : "FAILED") << "\n";
    }
    if (!replay) return kFailure;
    if (v.kind == VerdictKind::Refuted && cfg.assertPsc) {
        throw PscContradiction("the Levi form is negative at the witness", "");
    }
    if (v.kind == VerdictKind::Unknown && cfg.requireCertificate) return kUncertified;
    return kOk;
}

int cmd_normalize(const RunConfig& cfg, std::ostream& out) {
    Loaded in = load_input(cfg);
    Weight mu;
    if (cfg.weight == "auto") mu = greedy_distinguished(normalize_model_shape(in.r)).inverse();
    else mu = parse_weight(cfg.weight, in.r.n());
    NormalForm nf = normalize(in.r, mu, cfg.assertPsc);
    NormalFormCheck check = verify_normal_form(nf, in.r, mu);
    if (cfg.json) {
        Json j = to_json(nf);
        j["input"] = to_string(in.r);
        j["requested_weight"] = to_json(mu);
        j["verified"] = check.ok;
        j["violations"] = check.violations;
        out << j.dump(2) << "\n";
    } else {
        out << "weight: " << to_string(nf.weight.inverse()) << "\n";
        if (nf.loweredWeight) out << "lowered from " << to_string(mu.inverse()) << "\n";
        out << "K = " << rows_string(nf.K) << "\n";
        out << "A = " << list_of(nf.A) << "\n";
        out << "residual: " << (nf.residual.poly().is_zero() ? "0" : to_string(nf.residual)) << "\n";
        if (!nf.transform.is_identity())
            for (int j = 0; j < nf.transform.n(); ++j)
                out << "  z" << j + 1 << " -> " << to_string(nf.transform.maps()[j]) << "\n";
        for (const auto& w : nf.warnings) out << "warning: " << w << "\n";
        out << (check.ok ? "verified" : "NOT verified") << "\n";
        for (const auto& v : check.violations) out << "  " << v << "\n";
    }
    return check.ok ? kOk : kFailure;
}

int cmd_boundary(const RunConfig& cfg, std::ostream& out) {
    Loaded in = load_input(cfg);
    BoundaryOptions opts;
    opts.frontier = cfg.frontier;
    BoundarySystem bs = build_boundary_system(in.r, opts);
    BoundaryAudit audit = audit_boundary_system(bs, !cfg.noMinimality);
    if (cfg.json) {
        Json j = to_json(bs);
        j["input"] = to_string(in.r);
        j["audit"] = {{"ok", audit.ok}, {"violations", audit.violations}, {"lists_checked", audit.lists_checked}};
        out << j.dump(2) << "\n";
    } else {
        out << "commutator multitype: " << to_string(bs.commutator) << "\n";
        out << "Levi rank: " << bs.levi_rank << "\n";
        for (const auto& f : bs.levi_fields) out << "  Levi field: " << to_string(f) << "\n";
        for (const auto& h : bs.higher) {
            out << "  z" << h.slot + 1 << ": c = " << to_string(h.c) << ", list " << list_string(bs, h.list) << "\n";
            out << "    field: " << to_string(h.field) << "\n";
            out << "    r = " << (h.imaginary ? "Im " : "Re ") << "(" << to_string(h.g) << ")\n";
        }
        if (bs.truncated) out << "series truncated at degree " << bs.truncation_degree << "\n";
        out << "audit: " << (audit.ok ? "ok" : "FAILED") << "\n";
        for (const auto& v : audit.violations) out << "  " << v << "\n";
    }
    return audit.ok ? kOk : kFailure;
}

int cmd_torsion(const RunConfig& cfg, std::ostream& out) {
    Loaded in = load_input(cfg);
    BoundaryOptions opts;
    opts.frontier = cfg.frontier;
    BoundarySystem bs = build_boundary_system(in.r, opts);
    HermPoly model = in.r;
    std::string note;
    try {
        FirstBlockResult fb = normalize_first_block(bs, in.r);
        bs = fb.bs;
        model = fb.model;
    } catch (const InputError& e) {
        note = std::string("first block left as is: ") + e.what();
    }
    TorsionReport t = detect_torsion(bs, model);
    if (cfg.json) {
        Json j = to_json(t);
        j["input"] = to_string(in.r);
        j["model"] = to_string(model);
        j["commutator"] = to_json(bs.commutator);
        if (!note.empty()) j["note"] = note;
        out << j.dump(2) << "\n";
    } else {
        out << "commutator multitype: " << to_string(bs.commutator) << "\n";
        if (!note.empty()) out << note << "\n";
        if (t.applicable) {
            out << "z" << t.slot + 1 << ": f = " << to_string(t.g) << "\n";
            out << "linear coefficient: " << to_string(t.linear) << "\n";
            out << "obstruction: " << (t.torsion ? to_string(t.obstruction) : "0") << "\n";
        }
        out << (t.torsion ? "torsion: yes" : "torsion: no") << " (" << t.reason << ")\n";
    }
    return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1) throw InputError("enumerate needs --n");
    Rational m = parse_rational(cfg.m);
    auto all = enumerate_multitypes(cfg.n, m);
    Integer bound = counting_bound(cfg.n, m);
    if (cfg.json) {
        Json list = Json::array();
        for (const auto& l : all) list.push_back(to_json(l));
        out << Json{{"n", cfg.n}, {"m", to_string(m)}, {"weights", list}, {"count", all.size()},
                    {"bound", bound.get_str()}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& l : all) out << to_string(l) << "\n";
        out << "enumerated " << all.size() << " ≤ " << bound.get_str() << "\n";
    }
    return all.size() <= bound ? kOk : kFailure;
}

void add_input(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("input", cfg.input, "polynomial file (text or JSON)");
    sub->add_option("--expr", cfg.expr, "inline polynomial");
    sub->add_option("--n", cfg.n, "dimension");
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_option("--seed", cfg.seed, "seed for randomized paths");
    sub->add_option("--degree-bound", cfg.degreeBound, "coordinate-change search degree");
    sub->add_option("--samples", cfg.samples, "sampling budget");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"crmodel: exact computations on polynomial models of real hypersurfaces"};
    app.require_subcommand(1);
    auto* parse = app.add_subcommand("parse", "parse and print a polynomial");
    auto* multitype = app.add_subcommand("multitype", "multitype by bounded search");
    auto* psd = app.add_subcommand("psd", "plurisubharmonicity verdict for the model part");
    auto* normal = app.add_subcommand("normalize", "balanced sum-of-squares normal form");
    auto* boundary = app.add_subcommand("boundary-system", "boundary system and commutator multitype");
    auto* torsion = app.add_subcommand("torsion", "first-block normalization and torsion report");
    auto* enumerate = app.add_subcommand("enumerate", "admissible multitypes bounded by m");
    auto* examples = app.add_subcommand("examples", "golden runner over the worked examples");
    for (auto* sub : {parse, multitype, psd, normal, boundary, torsion}) add_input(sub, cfg);
    for (auto* sub : {parse, multitype, psd, normal, boundary, torsion, enumerate, examples}) add_common(sub, cfg);
    multitype->add_flag("--commutator", cfg.commutator, "print search and commutator side by side");
    multitype->add_flag("--no-commutator", cfg.noCommutator, "skip the boundary-system cross-check");
    psd->add_flag("--assert-psc", cfg.assertPsc, "treat a refutation as a contradiction");
    psd->add_flag("--require-certificate", cfg.requireCertificate, "exit 4 on an Unknown verdict");
    psd->add_option("--cs-lattice-denominator", cfg.latticeDenominator, "Cauchy-Schwarz fraction lattice");
    normal->add_option("--weight", cfg.weight, "mu list such as 1,1/8,1/12, a JSON inverse weight, or auto");
    normal->add_flag("--assert-psc", cfg.assertPsc, "stop at the first pseudoconvexity contradiction");
    for (auto* sub : {boundary, torsion}) sub->add_option("--frontier", cfg.frontier, "longest list to search");
    boundary->add_flag("--no-minimality", cfg.noMinimality, "skip the minimality audit");
    enumerate->add_option("--n", cfg.n, "dimension");
    for (auto* sub : {enumerate, examples}) sub->add_option("--m,--max-type", cfg.m, "type bound");
    examples->add_option("--only", cfg.only, "sq, eqq, bloom, sum0, torsion or counting");
    examples->add_option("--n", cfg.n, "dimension for the counting item");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (parse->parsed()) return cmd_parse(cfg, out);
        if (multitype->parsed()) return cmd_multitype(cfg, out);
        if (psd->parsed()) return cmd_psd(cfg, out);
        if (normal->parsed()) return cmd_normalize(cfg, out);
        if (boundary->parsed()) return cmd_boundary(cfg, out);
        if (torsion->parsed()) return cmd_torsion(cfg, out);
        if (enumerate->parsed()) return cmd_enumerate(cfg, out);
        if (examples->parsed()) return run_examples(cfg.only, cfg.n > 0 ? cfg.n : 3, cfg.m, out) ? kOk : kFailure;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const PscContradiction& e) {
        err << "pseudoconvexity contradiction: " << e.what();
        if (!e.witness().empty()) err << " [" << e.witness() << "]";
        err << "\n";
        return kContradiction;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

// ---- golden examples ----

namespace {

Poly zpow(int n, int j, int e) { return Poly::z(n, j).pow(e); }
Poly abs2(const Poly& f) { return f * f.conj(); }

bool item_sq(std::ostream& out) {
    bool ok = true;
    int n = 3;
    for (int p : {2, 3})
        for (int q : {2, 3})
            for (const char* eps : {"1/2", "9/10"}) {
                Complex e(parse_rational(eps));
                Poly lhs = abs2(zpow(n, 1, p) + zpow(n, 2, q) * e) + abs2(zpow(n, 2, q)) * (Complex(1) - e * e);
                Poly mixed = zpow(n, 1, p) * zpow(n, 2, q).conj();
                Poly rhs = abs2(zpow(n, 1, p)) + abs2(zpow(n, 2, q)) + (mixed + mixed.conj()) * e;
                if (!(lhs - rhs).is_zero()) {
                    ok = false;
                    out << "  sq mismatch at p=" << p << " q=" << q << " eps=" << eps << "\n";
                }
            }
    out << (ok ? "PASS" : "FAIL") << " sq: square completion identity on 8 cases\n";
    return ok;
}

bool item_eqq(std::ostream& out) {
    HermPoly r = parse_poly("-2Re(z1) + |z2|^8 + |z2|^4|z3|^6", 3);
    Multitype mt = multitype_search(r, 4, commutator_of);
    bool typeOk = mt.value == InverseWeight::finite({1, 8, 12}) && mt.status == MultitypeStatus::ExactCommutator;
    NormalForm nf = normalize(r, mt.value.inverse());
    bool nfOk = nf.K == std::vector<std::vector<int>>{{4}, {2, 3}} && nf.A == std::vector<Rational>{1, 1} &&
                nf.residual.poly().is_zero() && verify_normal_form(nf, r, mt.value.inverse()).ok;
    bool ok = typeOk && nfOk;
    out << (ok ? "PASS" : "FAIL") << " eqq: " << to_string(mt.value) << " [" << to_string(mt.status)
        << "], K = " << rows_string(nf.K) << ", A = " << list_of(nf.A) << "\n";
    return ok;
}

bool item_bloom(std::ostream& out) {
    HermPoly r = parse_poly("Re(z1) + (Re(z2) + |z3|^2)^2", 3);
    Multitype mt = multitype_search(r, 4, commutator_of);
    bool ok = mt.value == InverseWeight::finite({1, 2, 4}) && mt.commutator &&
              *mt.commutator == InverseWeight({ExtRational::of(1), ExtRational::of(2), ExtRational::infinity()}) &&
              mt.value < *mt.commutator;
    out << (ok ? "PASS" : "FAIL") << " bloom: search " << compact(to_string(mt.value)) << " < commutator "
        << (mt.commutator ? compact(to_string(*mt.commutator)) : "unavailable") << "\n";
    return ok;
}

bool item_sum0(std::ostream& out) {
    HermPoly r = parse_poly("-2Re(z1) + |z2|^4 + |z2|^2|z3|^2 + (|z2|^2 + |z3|^2)|z4|^2", 4);
    Weight mu({1, Rational(1, 4), Rational(1, 4), Rational(1, 4)});
    NormalForm nf = normalize(r, mu);
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < nf.K.size(); ++i) rows.push_back(to_string(Poly::monomial(nf.row_monomial(i), Complex(1))));
    std::vector<std::string> expect = {to_string(parse_expression("|z2|^4", 4)), to_string(parse_expression("|z2|^2|z3|^2", 4)),
                                       to_string(parse_expression("|z3|^2|z4|^2", 4))};
    bool ok = rows == expect && verify_normal_form(nf, r, mu).ok;
    out << (ok ? "PASS" : "FAIL") << " sum0: rows";
    for (const auto& s : rows) out << " " << s;
    out << "\n";
    return ok;
}

bool item_torsion(std::ostream& out) {
    HermPoly r = parse_poly(
        "-2Re(z1) + |z2|^6 + |z2|^2|z3|^6 + |z2|^4|z3|^2|z4|^2 + |z2|^2|z3|^4|z4|^4"
        " + 2*(1/10)*Re(|z2|^2 z3^2 zb3^3 |z4|^2) + |z3|^8|z4|^2",
        4);
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
    std::vector<std::vector<std::string>> expect = {{"2a2 + a3 + a4 = 0", "4a3 + a4 = 0"},
                                                    {"a2 + 2a3 + 2a4 = 0", "a2 + 3a3 = 0"}};
    std::sort(systems.begin(), systems.end());
    bool kernelOk = systems == expect && dim == 0;
    bool certified = v.kind == VerdictKind::CertifiedPSD;
    BoundarySystem bs = build_boundary_system(r);
    HermPoly model = r;
    try {
        FirstBlockResult fb = normalize_first_block(bs, r);
        bs = fb.bs;
        model = fb.model;
    } catch (const InputError&) {
    }
    TorsionReport t = detect_torsion(bs, model);
    bool torsionOk = t.applicable && t.torsion && !t.linear.is_zero();
    bool ok = kernelOk && certified && torsionOk;
    out << (ok ? "PASS" : "FAIL") << " torsion: kernels " << (kernelOk ? "match" : "differ") << ", verdict "
        << to_string(v.kind) << ", obstruction " << (t.torsion ? to_string(t.obstruction) : "none") << "\n";
    return ok;
}

bool item_counting(int n, const std::string& mText, std::ostream& out) {
    auto small = enumerate_multitypes(2, 4);
    bool ok = small == std::vector<InverseWeight>{InverseWeight::finite({1, 2}), InverseWeight::finite({1, 4})} &&
              counting_bound(2, 4) == 2;
    Rational m = parse_rational(mText);
    auto all = enumerate_multitypes(n, m);
    Integer bound = counting_bound(n, m);
    bool admissible = std::all_of(all.begin(), all.end(), [](const InverseWeight& l) { return is_admissible(l).admissible; });
    ok = ok && all.size() <= bound && admissible;
    out << (ok ? "PASS" : "FAIL") << " counting: n=" << n << " m=" << to_string(m) << " enumerated " << all.size()
        << " ≤ " << bound.get_str() << "\n";
    return ok;
}

}  // namespace

bool run_examples(const std::string& only, int n, const std::string& m, std::ostream& out) {
    static const std::vector<std::string> names = {"sq", "eqq", "bloom", "sum0", "torsion", "counting"};
    if (!only.empty() && std::find(names.begin(), names.end(), only) == names.end())
        throw InputError("unknown example " + only);
    bool all = true;
    for (const auto& name : names) {
        if (!only.empty() && name != only) continue;
        bool ok = false;
        try {
            if (name == "sq") ok = item_sq(out);
            else if (name == "eqq") ok = item_eqq(out);
            else if (name == "bloom") ok = item_bloom(out);
            else if (name == "sum0") ok = item_sum0(out);
            else if (name == "torsion") ok = item_torsion(out);
            else ok = item_counting(n, m, out);
        } catch (const std::exception& e) {
            out << "FAIL " << name << ": " << e.what() << "\n";
        }
        all = all && ok;
    }
    return all;
}

}  // namespace crm
