#pragma once

#include "crm/herm_poly.hpp"
#include "crm/json_io.hpp"
#include "crm/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crm {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Entry (j,k) = d/dz_j d/dzbar_k p, all n variables.
PolyMatrix complex_hessian(const HermPoly& p);
// Exact Hessian values at z for the variables z_2..z_n.
CMatrix hessian_at(const PolyMatrix& H, const std::vector<Complex>& z);

// ---- Cauchy-Schwarz pairing ----

struct Splitting {
    std::vector<int> first;   // balanced term |z^first|^2, exponents over z_2..z_n
    std::vector<int> second;  // balanced term |z^second|^2
    Rational fraction;        // share of the mixed term charged to this splitting
    bool aligned = false;     // {first, second} parallel to {alpha, beta}
    Rational scale;           // t t' with first = t alpha, second = t' beta, when aligned
};

struct MixedPairing {
    MultiIndexPair mixed;     // representative z^alpha zbar^beta of the Hermitian pair
    Complex coeff;            // c in 2Re(c z^alpha zbar^beta)
    std::vector<Splitting> splittings;
    // Kernel rows per splitting: the forms first.a and second.a.
    std::vector<std::vector<std::vector<int>>> kernel_systems;
    int kernel_intersection_dim = 0;
};

struct CsCertificate {
    bool found = false;           // every mixed term got a splitting with usage < 1
    bool levi_sound = false;      // the torus Levi bound follows exactly
    std::string reason;
    std::vector<MixedPairing> pairings;
    // Function-level usage sum_i fraction_i |c_i| / C_gamma per balanced term.
    std::map<std::vector<int>, Rational> usage;
    // Levi-level share per balanced term (only meaningful when levi_sound).
    std::map<std::vector<int>, Rational> levi_share;
    bool kernel_intersections_trivial() const;
};

CsCertificate cauchy_schwarz_pairing(const HermPoly& p, int latticeDenominator = 4);
// "a2 + 3a3 = 0"
std::string kernel_row_string(const std::vector<int>& row, int firstSlot = 2);

// ---- verdicts ----

enum class VerdictKind { CertifiedPSD, Refuted, Unknown };
std::string to_string(VerdictKind k);

struct GramCertificate {
    std::vector<MultiIndexPair> basis;  // holomorphic monomials z^a
    CMatrix gram;
    Congruence ldl;
};

struct PsdOptions {
    int samples = 4096;
    std::uint64_t seed = 20240611;
    int latticeDenominator = 4;
};

struct PositivityVerdict {
    VerdictKind kind = VerdictKind::Unknown;
    int tier = 0;
    std::optional<GramCertificate> gram;
    std::optional<CsCertificate> cs;  // attached whenever the pairing was attempted
    std::optional<std::vector<Complex>> witness_point;  // z_2..z_n
    std::optional<CVector> witness_direction;           // a_2..a_n
    Rational witness_value;                             // Levi form value, < 0
    int samples_tried = 0;
    std::vector<std::string> notes;
};

PositivityVerdict psd_verdict(const HermPoly& p, const PsdOptions& opts = {});
// Independent replay of a CertifiedPSD certificate or a Refuted witness.
bool replay_verdict(const HermPoly& p, const PositivityVerdict& v);
Json to_json(const PositivityVerdict& v);

// Deterministic sample points: a structured torus grid (small rational moduli times
// rational unit-circle phases, simplest first), then seeded random rationals.
std::vector<std::vector<Complex>> sample_points(int dims, int count, std::uint64_t seed);

// Smallest dyadic-or-exact rational q with q >= sqrt(x), x >= 0.
Rational sqrt_upper(const Rational& x);

// ---- one variable coefficient bounds ----

struct CoeffBound {
    int k;
    Rational abs_squared;  // |C_k|^2
    bool satisfied;        // |C_k|^2 <= C_0^2
};

struct CoeffBoundReport {
    int variable = -1;  // 0-based
    int m = 0;          // half degree
    Rational c0;
    std::vector<CoeffBound> bounds;
    bool c0_nonneg = false;
    bool c0_positive = false;
    bool all_satisfied = false;
    std::optional<Complex> negative_point;  // from the sampling pre-check
};

CoeffBoundReport one_var_coeff_check(const HermPoly& P, bool assumeNonneg, int samples = 64);

std::vector<MultiIndexPair> m_dominant_coefficients(const HermPoly& P, const Rational& M);

struct SplitPart {
    int p = 0;
    int q = 0;
    HermPoly part;
    bool flagged = false;
};

// groups[j] in {0, 1} for variables that take part, -1 otherwise.
std::vector<SplitPart> newton_split_check(const HermPoly& P, const std::vector<int>& groups);

// -2Re z1 + weight-1 part; throws InputError if something sits below weight 1.
HermPoly model_truncate(const HermPoly& r, const Weight& mu);

}  // namespace crm
