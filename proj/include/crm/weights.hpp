#pragma once

#include "crm/coord_change.hpp"
#include "crm/herm_poly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crm {

struct AdmissibilityReport {
    bool admissible = true;
    std::optional<int> first_failing;  // 0-based slot
    // witnesses[i] lists tuples (a_1..a_{i+1}) with a_{i+1} > 0 and sum a_k / lambda_k = 1.
    std::vector<std::vector<std::vector<int>>> witnesses;
};

AdmissibilityReport is_admissible(const InverseWeight& lambda, std::size_t maxPerSlot = 256);

// Every term of weight < 1 under lambda vanishes (given coordinates only).
bool is_distinguished(const HermPoly& r, const InverseWeight& lambda);

// Lexicographically largest distinguished inverse weight in the given coordinates,
// for a model r = -2Re z1 + p. Slot i takes the smallest mu_i that keeps every term
// at weight >= 1 when all later slots are allowed to be as heavy as mu_i.
InverseWeight greedy_distinguished(const HermPoly& r);
// Same, keeping mu_1..mu_{from-1} fixed and recomputing slots from `from` on.
Weight greedy_from(const HermPoly& p, const Weight& prefix, int from);

// Supporting values for slot j of the Newton diagram given the fixed prefix:
// (1 - sum_{k<j} e_k mu_k) / sum_{k>=j} e_k over the terms of p, largest first.
std::vector<Rational> slot_candidates(const HermPoly& p, const Weight& prefix, int j);

enum class MultitypeStatus { ExactCommutator, SearchLowerBound };
std::string to_string(MultitypeStatus s);

struct Multitype {
    InverseWeight value;
    MultitypeStatus status = MultitypeStatus::SearchLowerBound;
    CoordChange witness;  // coordinates in which `value` is distinguished
    HermPoly transformed;  // model in witness coordinates (harmonic part removed)
    std::vector<std::string> trace;
    std::optional<InverseWeight> commutator;
};

using CommutatorOracle = std::function<std::optional<InverseWeight>(const HermPoly&)>;

// Rescales z1 so the linear part reads -2Re z1; rejects constant terms.
HermPoly normalize_model_shape(const HermPoly& r);

Multitype multitype_search(const HermPoly& r, int degreeBound = 4, const CommutatorOracle& commutator = {});

Integer counting_bound(int n, const Rational& m);
std::vector<InverseWeight> enumerate_multitypes(int n, const Rational& m);

}  // namespace crm
