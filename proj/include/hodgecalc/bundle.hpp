#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgecalc/catalog.hpp"
#include "hodgecalc/formal.hpp"

namespace hodgecalc {

class NotADivisor : public CalcError {
  public:
    explicit NotADivisor(const std::string& m) : CalcError("not a divisor: " + m) {}
};

class NeedsChernReduction : public CalcError {
  public:
    explicit NeedsChernReduction(const std::string& m)
        : CalcError("hyperplane power exceeds the bundle rank: " + m) {}
};

/// Weight of a modular form, rendered in the usual conventions:
/// scalar k; pairs (j,k) in genus 2; triples in genus 3 with (j,0,k) for
/// Sym^j(E) x det^k and (0,j,k) for Sym^j(wedge^2 E) x det^k; quadruples
/// (j,0,0,k) in genus 4.
struct WeightTuple {
    int genus = 0;
    std::vector<long> parts;  // size 1 (scalar) or genus

    static WeightTuple scalar(int genus, long k) { return {genus, {k}}; }
    bool is_scalar() const { return parts.size() == 1; }
    std::string str() const;
    friend bool operator==(const WeightTuple&, const WeightTuple&) = default;
};

/// P(E_k) over a moduli space, projectivization in the Grothendieck sense
/// (P(V) parametrizes hyperplanes; O(1) the tautological quotient).
struct BundleDescriptor {
    const Space* base = nullptr;
    int genus = 0;
    int twist = 1;   // k of E_k
    int rank = 0;    // g for k=1, (2k-1)(g-1) for k>=2
    bool dual = false;
    FormalClass c1;  // of E_k, on `base`

    friend bool operator==(const BundleDescriptor& a, const BundleDescriptor& b) {
        return a.base == b.base && a.twist == b.twist && a.dual == b.dual;
    }
};

// P(E_k) over M{g}bar, c1 = lambda + k(k-1)/2 kappa1 with kappa1 eliminated.
BundleDescriptor hodge_bundle(int g, int k = 1, bool dual = false);
// Rank-3 P(E) over H{g}2 (genus 3 only in scope); c1 = hurwitz_lambda.
BundleDescriptor hurwitz_hodge_bundle(int g);

/// Coefficient of one hyperplane power: a rational multiple of the
/// fundamental class plus a pulled-back divisor class from the base.
struct HCoeff {
    Rational unit;
    FormalClass base;

    bool is_zero() const { return unit.is_zero() && base.is_zero(); }
    bool pure_unit() const { return base.is_zero(); }
    bool pure_base() const { return unit.is_zero(); }
};

/// Polynomial in the hyperplane class with HCoeff coefficients, exponents
/// bounded by the rank. Codimension >= 2 products of base classes are not
/// representable; multiplying two base pullbacks sets `dropped_codim2` and
/// discards the term (legitimate exactly where a later pushforward kills it).
class HClass {
  public:
    HClass() = default;
    explicit HClass(BundleDescriptor d) : desc_(std::move(d)) {}

    static HClass h_power(const BundleDescriptor& d, int i, Rational c = Rational(1));
    static HClass pullback(const BundleDescriptor& d, const FormalClass& x);
    // j*h + u^*(A)
    static HClass divisor(const BundleDescriptor& d, const Rational& j, const FormalClass& a);

    const BundleDescriptor& desc() const { return desc_; }
    int max_exp() const;
    HCoeff coeff(int i) const;
    const std::map<int, HCoeff>& coeffs() const { return coef_; }
    bool dropped_codim2() const { return dropped_; }
    bool is_zero() const { return coef_.empty(); }

    void add(int i, const HCoeff& c);
    HClass& operator+=(const HClass& o);
    HClass& operator-=(const HClass& o);
    HClass& operator*=(const Rational& c);
    friend HClass operator+(HClass a, const HClass& b) { return a += b; }
    friend HClass operator-(HClass a, const HClass& b) { return a -= b; }
    friend HClass operator*(const Rational& c, HClass a) { return a *= c; }

    friend bool operator==(const HClass& a, const HClass& b);
    friend bool operator!=(const HClass& a, const HClass& b) { return !(a == b); }

    // Graded product; base*base terms are dropped with the flag set.
    friend HClass mul(const HClass& a, const HClass& b);

    std::string str() const;

  private:
    BundleDescriptor desc_;
    std::map<int, HCoeff> coef_;
    bool dropped_ = false;
};

/// Pushforward along u: h^i -> 0 for i <= r-2, h^{r-1} -> 1, h^r -> c1(E_k).
/// Exponents above r are refused. The h^r coefficient must be a pure unit
/// multiple (a base coefficient there would push to codimension 2).
HCoeff push_u(const HClass& c);

/// First Chern class of Sym^m of the bundle: (m/r) * C(m+r-1, r-1) * c1.
FormalClass c1_sym(int m, const BundleDescriptor& d);

struct WeightResult {
    WeightTuple weight;
    long h_degree = 0;    // j of O(j)
    long det_power = 0;   // k of det(E)^k
    std::map<std::string, Rational> orders;  // vanishing orders by boundary name
    bool cusp = false;         // all boundary orders >= 1
    bool meromorphic = false;  // some order < 0
};

/// Reads a divisor class j*h + u^*(k*lambda - sum c_i * boundary_i) as the
/// weight and vanishing-order data of the modular form it induces.
/// On Hurwitz spaces the lambda/boundary split is not unique, so the intended
/// det power must be passed explicitly.
WeightResult weight_from_divisor(const HClass& c);
WeightResult weight_from_divisor(const HClass& c, long det_power);

// Renders (j, det k) in the genus conventions; scalar when j = 0.
WeightTuple render_weight(int genus, bool dual, long j, long k);

struct DualizeResult {
    std::optional<HClass> cls;  // genus 2: the class on P(E)
    WeightTuple weight;
};

/// Genus 2: rewrites j*hdual + udual^*(A) as j*h + u^*(A - j*lambda) through
/// E^dual = E x det(E)^{-1}. Genus 3: reports the converted weight
/// (0, j, k - j). Twist k = 1 bundles only.
DualizeResult dualize(const HClass& c, int g);

}  // namespace hodgecalc
