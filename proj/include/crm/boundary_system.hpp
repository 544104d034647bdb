#pragma once

#include "crm/coord_change.hpp"
#include "crm/json_io.hpp"
#include "crm/linalg.hpp"
#include "crm/vfield.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crm {

// One list entry: field index into a field set, optionally conjugated.
struct ListEntry {
    int field = 0;
    bool bar = false;
    friend bool operator==(const ListEntry& a, const ListEntry& b) { return a.field == b.field && a.bar == b.bar; }
};
using VList = std::vector<ListEntry>;

// L^1 ... L^{l-2} dr([L^{l-1}, L^l]) as an exact polynomial. Throws for lists shorter than 2.
Poly list_derivative(const Poly& r, const std::vector<VField>& fields, const VList& list);

// A slot beyond the Levi block, in construction order.
struct HigherSlot {
    int slot = 0;              // 0-based variable slot
    CVector direction;         // kernel direction over z2..zn
    VField field;              // L_slot
    VList list;                // indices refer to BoundarySystem::higher
    std::vector<int> counts;   // occurrences per higher slot, in construction order
    Rational c;
    Poly g;                    // value of the list without its first entry
    HermPoly r;                // Re g or Im g
    bool imaginary = false;
    Complex value;             // list value at 0
};

struct TorsionReport {
    bool applicable = false;
    bool torsion = false;
    int slot = -1;
    Poly g;              // value of the list without its first entry at that slot
    Complex linear;      // coefficient of z_slot in g
    Poly obstruction;    // non-pluriharmonic part of g
    std::string reason;
};

struct BoundarySystem {
    int n = 0;
    int levi_rank = 0;
    HermPoly r1;
    std::vector<CVector> levi_directions;
    std::vector<VField> levi_fields;
    std::vector<HigherSlot> higher;    // finite higher slots
    std::vector<CVector> unused_directions;
    InverseWeight commutator;
    int frontier = 0;                  // longest list searched
    bool truncated = false;            // a series inverse was cut at truncation_degree
    int truncation_degree = 0;
    std::uint64_t lists_evaluated = 0;
    std::vector<std::string> trace;
    std::optional<TorsionReport> torsion;
    // Field set for lists: the higher-slot fields in construction order.
    std::vector<VField> list_fields() const;
};

struct BoundaryOptions {
    int frontier = 0;          // 0: total degree of p
    int truncation = 0;        // 0: frontier * n
    bool generic_candidates = false;  // also try the sum of unused directions
};

BoundarySystem build_boundary_system(const HermPoly& r0, const BoundaryOptions& opts = {});

struct BoundaryAudit {
    bool ok = true;
    std::vector<std::string> violations;
    std::uint64_t lists_checked = 0;
};

// Independent re-check of tangency, nonvanishing, admissibility, ordering,
// the weighted count identities and minimality within the frontier.
BoundaryAudit audit_boundary_system(const BoundarySystem& bs, bool checkMinimality = true);

struct FirstBlockResult {
    BoundarySystem bs;
    HermPoly model;                // normalized model
    std::vector<Poly> maps;        // old coordinates as functions of the new ones
    Rational defining_scale = 1;   // model = scale * (old model after the change), z1 rescaled to match
    std::vector<int> block;        // slots normalized
    std::vector<bool> exact;       // r_slot == Re z_slot exactly
    std::vector<std::string> trace;
};

// Throws PscContradiction when a harmonic tail fails to be harmonic,
// InputError when the linear coefficient vanishes or the block is empty.
FirstBlockResult normalize_first_block(const BoundarySystem& bs, const HermPoly& r0, int maxRounds = 6);

TorsionReport detect_torsion(const BoundarySystem& bs, const HermPoly& r0);

Json to_json(const BoundarySystem& bs);
Json to_json(const TorsionReport& t);
std::string list_string(const BoundarySystem& bs, const VList& list);

}  // namespace crm
