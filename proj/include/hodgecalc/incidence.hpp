#pragma once

#include "hodgecalc/bundle.hpp"

namespace hodgecalc {

/// Top two coefficients of the class of the k-canonically embedded universal
/// curve in P(E_k): [curve] = beta0 h^{r-2} + h^{r-3} u^*(beta1) + lower.
/// The truncation is lossless for everything in scope because the incidence
/// pushforward kills h^i for i <= r-3.
struct CurveClass {
    int g = 0, k = 0;
    Rational beta0;            // 2k(g-1)
    FormalClass beta1_kappa;   // k^2 kappa1 - 2k(g-1) c1(E_k) - eps, kappa form
    FormalClass beta1;         // the same with kappa1 eliminated
};

CurveClass curve_class(int g, int k);

enum class GammaDirection { Forward, Reverse };

/// The correspondence pushforward through the point-hyperplane incidence
/// variety between P(E_k) and its dual.
/// Forward: h^i -> 0 (i <= r-3), h^{r-2} -> 1, h^{r-1} -> hdual + c1(E_k).
/// Reverse (rank 3 only): hdual^2 -> h - u^*(lambda), hdual u^*(x) -> u^*(x),
/// pulled-back codimension-2 classes die.
HClass gamma_push(const HClass& c, GammaDirection dir);

struct PipelineResult {
    HClass pipeline;
    HClass closed_form;
    bool equal = false;
};

/// Class of the locus of k-differentials vanishing at a Weierstrass point,
/// computed two ways: through the incidence correspondence applied to the
/// universal Weierstrass divisor (Cuckierman's class), and from the closed
/// form g(g^2-1) hdual + k(2(3g^2+2g+1) lambda - C(g+1,2) delta0
/// - sum i(g-i)(g+3) delta_i) of Gheorghita-Tarasca.
/// k = 1 runs through the semistable-model correction over delta_i, i >= 1.
PipelineResult gheorghita_tarasca(int g, int k);

/// Class of the locus of k-differentials with a double zero (k >= 2,
/// (g,k) != (2,2)), pipeline versus the Korotkin-Sauvaget-Zograf closed form
/// (4k+2)(g-1) hdual + k(k+1)(12 lambda - sum delta_i).
PipelineResult ksz_class(int g, int k);

struct HypertangentResult {
    HClass product;       // [S-dual].[T-dual] truncated to hdual-degree >= 1
    HClass intermediate;  // its reverse-correspondence image on P(E)
    HClass final;         // minus 12 times the hyperelliptic class
};

/// The divisor of hypertangent lines of the universal genus-3 canonical
/// quartic, from the equianharmonic and j=1728 dual divisors.
HypertangentResult hypertangent_class();

// The two input divisor classes on P(E^dual) over M3bar (classes of the loci
// of lines meeting the quartic equianharmonically resp. with j-invariant 1728).
HClass equianharmonic_dual_class();
HClass jinvariant_dual_class();

}  // namespace hodgecalc
