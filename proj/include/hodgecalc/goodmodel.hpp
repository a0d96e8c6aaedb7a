#pragma once

#include <optional>

#include "hodgecalc/bundle.hpp"
#include "hodgecalc/catalog.hpp"

namespace hodgecalc {

class UnknownDivisor : public CalcError {
  public:
    explicit UnknownDivisor(const std::string& m) : CalcError("unknown divisor: " + m) {}
};

class DerivationMismatch : public CalcError {
  public:
    explicit DerivationMismatch(const std::string& m) : CalcError("derivation mismatch: " + m) {}
};

// ---- divisors on the good model P{g}2k -------------------------------------
// Classes on the model are FormalClass values over the P{g}2k / P{g}2 spaces.

// Embeds a class on H{g}2k as its pullback (pb_* generators).
FormalClass model_pullback(int g, const FormalClass& base);

FormalClass section_class(int g);  // the marked section
FormalClass omega_class(int g);    // relative dualizing class
FormalClass r_exceptional(int g);  // sum of all exceptional components
FormalClass pi_side_total(int g, int j);  // Pi{j} summed over both mark signs

// The boundary correction making (g-1)S + Xi fiberwise dual to omega.
FormalClass xi_class(int g);
// D = (g-1) S + Xi on the model.
FormalClass d_class(int g);
// E on the base H{g}2k (psi kept symbolic).
FormalClass e_class(int g);
// M = O(D + pi^* E); restricts to O(g-1) on general fibers.
FormalClass m_class(int g);
// N = M(-R); base point free version.
FormalClass n_class(int g);
// U = (3/2) psi_k - Delta2(k+) - Delta3(k+) collapsed, genus 3.
FormalClass u_class_g3();

// name in {Xi_k, D_k, E_k, M, N, U}; E_k and U live on the base.
FormalClass named_divisor(int g, const std::string& name);

// ---- intersection calculus -------------------------------------------------

/// pi_* of the product of two degree-1 classes on P{g}2k, through the
/// stratum-by-stratum pairing table (disjoint sections, fiber component
/// self-intersections and node counts, projection formula).
FormalClass push_quadratic(const FormalClass& a, const FormalClass& b);

/// c1 of the pushforward of O(L): (1/2) pi_*(L^2 - L omega) plus the declared
/// c1 of R^1 pi_* (zero where that sheaf vanishes).
FormalClass grr_c1(const FormalClass& line, const FormalClass& r1_correction);

/// Restriction along the marked section: S -> -psi, omega -> psi,
/// Pi -> Delta(mark side), R -> 0, pullbacks -> identity.
FormalClass section_restrict(const FormalClass& c);

/// Writes a mark-symmetrized model class with no section or omega part as
/// pi^* of a boundary class, if possible.
std::optional<FormalClass> express_as_pullback(const FormalClass& c);

/// Sums a one-mark model class over all 2g+2 marks, landing on P{g}2.
FormalClass model_symmetrize(const FormalClass& marked);

/// Multidegree on the fiber components over a boundary stratum:
/// j = 0 means the generic fiber (one component); even j gives (side, side'),
/// odd j gives (side, exceptional, side'). The first side carries the mark
/// when k_in_lambda is true.
std::vector<Rational> fiber_degrees(const FormalClass& c, int j, bool k_in_lambda = true);

// ---- derivation pipelines ---------------------------------------------------

struct QClassResult {
    FormalClass u_class;   // on H32
    FormalClass a_class;   // u_class - lambda
    HClass q;              // 2h + u^*(a_class) on P(E) over H32
    WeightResult weight;   // (2,0,4)
};

/// Class of the universal rational normal conic in P(E) over H32: certifies
/// that N is fiberwise -omega + Pi2 + Pi3, recognizes the pullback part as U
/// via the marked section, and assembles [conic] = O(2) + u^*(U - lambda).
QClassResult q_class();

struct Genus2Result {
    Rational a, b;                 // coefficients of delta0, delta1
    FormalClass residual;          // the recognized pullback -2/5 Delta2 + 3/5 Delta3
    FormalClass final_class;       // 8 lambda - delta0 - delta1 on M2bar
    HClass branch_divisor;         // 6h + u^*(final_class)
};

/// Recovers the class of the genus-2 branch divisor by pulling both sides of
/// [branch] = O(6) + u^*(a delta0 + b delta1) back to the symmetrized model
/// and matching against the section configuration.
Genus2Result genus2_solve();

struct HhResult {
    FormalClass line_c1;            // c1 pi_*(N(-2S)) = -Delta3(k+) - Delta3 + E_k
    HClass hh;                      // O(8) + u^*(8 lambda - 2 Delta2 + Delta3)
    FormalClass h_minus_3hh;        // 9 Delta3
};

/// The hypertangent divisor over the Hurwitz space: eight tangent lines at the
/// branch sections, assembled from c1 pi_*(N(-2S_k)) and compared against the
/// pullback of the hypertangent divisor from M3bar.
HhResult hh_class();

}  // namespace hodgecalc
