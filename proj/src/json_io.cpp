#include "crm/json_io.hpp"

#include "crm/errors.hpp"

namespace crm {

Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"alpha", m.alpha_vec()},
                         {"beta", m.beta_vec()},
                         {"re", to_string(c.re)},
                         {"im", to_string(c.im)}});
    }
    return {{"n", p.n()}, {"terms", terms}};
}

Json to_json(const HermPoly& p) {
    return to_json(p.poly());
}

Json to_json(const InverseWeight& l) {
    Json a = Json::array();
    for (const auto& x : l.lambda) a.push_back(to_string(x));
    return {{"lambda", a}};
}

Json to_json(const Weight& w) {
    Json a = Json::array();
    for (const auto& x : w.mu) a.push_back(to_string(x));
    return {{"mu", a}};
}

Json to_json(const CoordChange& c) {
    Json maps = Json::array();
    for (const auto& q : c.maps()) maps.push_back(to_json(q));
    return {{"n", c.n()}, {"weight", to_json(c.weight())}, {"maps", maps}};
}

Poly poly_from_json(const Json& j) {
    try {
        int n = j.at("n").get<int>();
        if (n < 1) throw DimensionError("dimension must be positive");
        Poly p(n);
        for (const auto& t : j.at("terms")) {
            auto alpha = t.at("alpha").get<std::vector<int>>();
            auto beta = t.at("beta").get<std::vector<int>>();
            if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
                throw DimensionError("term exponent length differs from n");
            Rational re = parse_rational(t.at("re").get<std::string>());
            Rational im = t.contains("im") ? parse_rational(t.at("im").get<std::string>()) : Rational(0);
            p.add_term(MultiIndexPair(alpha, beta), Complex(re, im));
        }
        return p;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

HermPoly herm_from_json(const Json& j) {
    return HermPoly(poly_from_json(j));
}

InverseWeight inverse_weight_from_json(const Json& j) {
    try {
        InverseWeight l;
        for (const auto& x : j.at("lambda")) l.lambda.push_back(parse_ext_rational(x.get<std::string>()));
        return l;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed weight JSON: ") + e.what());
    }
}

}  // namespace crm
