#pragma once

#include "crm/coord_change.hpp"
#include "crm/herm_poly.hpp"
#include "crm/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crm {

// Slots are 0-based: slot 1 is z2. The polynomial p passed to the steps is the
// z1-free part of a model, free of pure terms.

struct FirstStep {
    CoordChange change;
    HermPoly p;    // p after the change
    HermPoly p2;   // restriction to z2
    int k22 = 0;
    Rational C20;
    std::vector<std::string> warnings;
};

// Throws DegenerateSlot when p vanishes on the whole first equal-weight block,
// PscContradiction (assertPsc) or DegenerateSlot when the restriction has the wrong shape.
FirstStep step_first(const HermPoly& p, const Weight& mu, bool assertPsc = false);

struct InductiveStep {
    CoordChange change;
    HermPoly p;
    HermPoly pm;              // terms of the remainder supported on z2..z_slot, after the change
    std::vector<int> row;     // k_{2,slot} .. k_{slot,slot}
    Rational C;
    MultiIndexPair monomial;  // the certified balanced term
    std::vector<std::string> warnings;
};

InductiveStep step_inductive(const HermPoly& p, const Weight& mu, int slot, bool assertPsc = false);

struct NormalForm {
    std::vector<std::vector<int>> K;  // K[i] is the row of slot i+1: k_{j2}..k_{jj}
    std::vector<Rational> A;
    CoordChange transform;            // original coordinates as functions of the new ones
    bool transform_graded = true;     // transform respects the final weight
    HermPoly p;                       // z1-free model part in the new coordinates
    HermPoly residual;                // p minus the extracted squares
    Weight weight;                    // final weight
    std::optional<Weight> loweredWeight;
    std::vector<Weight> descent;      // every weight tried, in order
    std::vector<std::string> trace;
    std::vector<std::string> warnings;
    // Balanced monomial of row i as recorded by K.
    MultiIndexPair row_monomial(std::size_t i) const;
};

NormalForm normalize(const HermPoly& r, const Weight& mu, bool assertPsc = false, int maxDescent = 64);

struct NormalFormCheck {
    bool ok = true;
    std::vector<std::string> violations;
    explicit operator bool() const { return ok; }
};

NormalFormCheck verify_normal_form(const NormalForm& nf, const HermPoly& r, const Weight& mu);

Json to_json(const NormalForm& nf);

}  // namespace crm
