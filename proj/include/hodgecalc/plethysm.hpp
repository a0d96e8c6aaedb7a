#pragma once

#include <string>
#include <vector>

#include "hodgecalc/bundle.hpp"

namespace hodgecalc {

class ParityError : public CalcError {
  public:
    explicit ParityError(const std::string& m) : CalcError("parity error: " + m) {}
};

/// Direct sum of GL(2)-representations W_{a,b} = Sym^a(W) x det(W)^b,
/// kept sorted by decreasing a.
struct GL2Rep {
    std::vector<std::pair<long, long>> summands;

    long dimension() const;
    std::string str() const;
    friend bool operator==(const GL2Rep&, const GL2Rep&) = default;
};

/// Sym^n(Sym^2 W) = sum over t of W_{2n-4t, 2t}; the dimension identity
/// sum (2n-4t+1) = C(n+2,2) is enforced on every call.
GL2Rep sym_sym2(long n);

struct HyperellipticPullback {
    GL2Rep rep;                 // for vector-valued weights
    Rational invariant_degree;  // for scalar weights at genus 3: 3k/2
    bool scalar = false;
};

/// Pullback of a weight along the identification of the hyperelliptic moduli
/// stack with a quotient of the space of binary forms of degree 2g+2:
/// the Hodge bundle pulls back to W_{g-1,(2-g)/2} for even g and
/// W_{g-1,(3-g)/2} for odd g, with det(E) becoming det(W)^{g/2} resp.
/// det(W)^g. Vector weights are supported at g = 2, 3; scalar weights at
/// genus 3 also report the degree 3k/2 of the corresponding invariant of
/// binary octics.
HyperellipticPullback hyperelliptic_pullback_weight(const WeightTuple& w, int g);

// Companion conventions for scalar weights at genus 3, kept side by side:
// the invariant-degree map k -> 3k/2, and the det(W)^{k/2} twist that applies
// to even k when sections are pulled to the binary-octic quotient directly.
Rational igusa_invariant_degree(long k);
long octic_half_twist(long k);  // throws ParityError for odd k

struct CovariantInfo {
    long order = 0;                // degree in the variables of the binary form
    Rational coefficient_degree;   // degree 3k/2 in the octic coefficients
    std::string identification;    // named covariant, up to scalar
};

/// Table of the identified covariants: weights (4,0,8), (2,0,4), (0,0,14)
/// correspond to f_{8,-2}*disc, f_{4,-1}*disc and the discriminant.
CovariantInfo covariant_bidegree(const WeightTuple& w);

/// Weight of the discriminant of a Sym^2-valued form of weight
/// (2,0,...,0,k) on the rank-g Hodge bundle: g*k + 2.
long discriminant_weight(int g, long k);

}  // namespace hodgecalc
