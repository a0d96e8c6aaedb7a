#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hodgecalc/formal.hpp"

namespace hodgecalc {

class MarkMismatch : public CalcError {
  public:
    explicit MarkMismatch(const std::string& m) : CalcError("mark mismatch: " + m) {}
};

class NotMarkIndependent : public CalcError {
  public:
    explicit NotMarkIndependent(const std::string& m)
        : CalcError("class is not independent of the chosen mark: " + m) {}
};

/// All moduli spaces the engine knows, their Picard presentations, relation
/// sets and derived classes. Built once, read-only afterwards.
///
/// Spaces:
///   M{g}bar   g=2..8   stable curves; gens lambda, kappa1, delta0..delta[g/2]
///   H{g}bar   g=2..5   hyperelliptic locus; gens lambda, delta_i, zeta_i
///   H{g}2     g=2..8   admissible double covers, 2g+2 ordered branch points;
///                      gens psi (total cotangent class), Delta2..Delta{g+1}
///   H{g}2k    g=2..8   same with one symbolic mark k; Delta{j}p / Delta{j}m
///                      split each Delta{j} by whether k lies on the j-side.
///                      j = g+1 is self-complementary and stays unmarked
///                      (Delta{g+1}p aliases to half of Delta{g+1}).
///   P{g}2k    g=2..6   the resolved universal P^1-model over H{g}2k; gens
///                      S (marked section), omega (relative dualizing),
///                      Pi{j}*/Pic{j}* (fiber components over Delta{j}),
///                      R{j}* (exceptional chains, odd j), pb_* (pullbacks)
///   P{g}2     g=2..6   its mark-symmetrized version
class Catalog {
  public:
    static const Catalog& get();

    const Space* mbar(int g) const;
    const Space* hbar(int g) const;
    const Space* hurwitz(int g) const;
    const Space* hurwitz_marked(int g) const;
    const Space* model_marked(int g) const;
    const Space* model_sym(int g) const;
    const Space* by_name(const std::string& name) const;  // nullptr if absent
    std::vector<std::string> space_names() const;

    // kappa1 eliminated against 12*lambda - sum(delta_i).
    const RelationSet& kappa_rels(int g) const;
    // kappa relation, plus 10*lambda = delta0 + 2*delta1 at g = 2.
    const RelationSet& full_rels_m(int g) const;
    const RelationSet& cornalba_rels(int g) const;
    // psi eliminated against its boundary expression (marked / symmetrized).
    const RelationSet& psi_rels_marked(int g) const;
    const RelationSet& psi_rels_sym(int g) const;
    // pb_Delta{j} rewritten into fiber components on the symmetric model.
    const RelationSet& pullback_rels_sym(int g) const;

    // Default relation set used by `eval --reduce` for a space (may be empty).
    const RelationSet& default_rels(const Space* s) const;
    // Derived identifiers usable in expressions on a space (e.g. lambda on H{g}2).
    const std::map<std::string, FormalClass>& derived(const Space* s) const;

  private:
    Catalog();
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// ---- named classes -------------------------------------------------------

// Hodge class on H{g}2 as a boundary combination:
//   sum (i+1)(g-i)/(2(2g+1)) Delta_{2i+2} + sum i(g-i)/(2g+1) Delta_{2i+1}.
FormalClass hurwitz_lambda(int g);

// Cotangent class at the symbolic mark on H{g}2k, as a boundary combination.
FormalClass hurwitz_psi(int g);

// Sum over all 2g+2 marks of hurwitz_psi, on H{g}2.
FormalClass hurwitz_psi_total(int g);

// 12*lambda - sum(delta_i) on M{g}bar.
FormalClass kappa1_class(int g);

// Hodge class on H{g}bar, boundary expression with denominator 8g+4 (Cornalba).
FormalClass cornalba_lambda(int g);

// 9*lambda - delta0 - 3*delta1 on M3bar (class of the hyperelliptic locus).
FormalClass hyperelliptic_class_m3();

// 10*lambda - delta0 - 2*delta1 on M2bar (vanishing class).
FormalClass mumford_relation_m2();

// c1 of the pushforward of the k-th power of the relative dualizing sheaf
// on M{g}bar: lambda + k(k-1)/2 * kappa1, with kappa1 eliminated.
FormalClass c1_ek(int g, int k);

// Dispatcher for the above; `name` in {hurwitz_lambda, hurwitz_psi, kappa1,
// cornalba_lambda, hyperelliptic_class_M3, mumford_relation_M2, c1_ek}.
FormalClass known_class(const std::string& name, int g = 0, int k = 0);

// ---- marked-class operations ---------------------------------------------

// Delta{j} split by the symbolic mark: at j = g+1 each half equals
// (1/2) Delta{g+1}.
FormalClass marked_delta(int g, int j, bool k_in_lambda);
FormalClass marked_delta_total(int g, int j);
FormalClass unmarked_delta(int g, int j);

// Rewrites an unmarked boundary class in the marked space (Delta{j} becomes
// Delta{j}p + Delta{j}m).
FormalClass embed_in_marked(int g, const FormalClass& unmarked);

// Sums a one-mark expression over all b = 2g+2 marks: Delta{j}p count j,
// Delta{j}m count b-j, psi becomes the total psi, mark-free terms count b.
FormalClass symmetrize(const FormalClass& marked, int b);

// Substitutes the boundary expression for psi, then requires the k+ and k-
// coefficients of every Delta{j} to agree; returns the unmarked class.
// Throws NotMarkIndependent otherwise. This certifies mark-independence.
FormalClass collapse_marked(const FormalClass& marked);

// Pullback of lambda, delta0, delta1 from M{g}bar to H{g}2 for g in {2,3}:
//   g=2: delta0 -> 2 Delta2,           delta1 -> Delta3
//   g=3: delta0 -> 2 Delta2 + 2 Delta4, delta1 -> Delta3
FormalClass boundary_pullback(const FormalClass& c, int g);

// Pullback of Cornalba's generators from H3bar to H32:
// delta0 -> 2 Delta2, delta1 -> Delta3, zeta1 -> Delta4, lambda accordingly.
FormalClass hbar_to_hurwitz_g3(const FormalClass& c);

}  // namespace hodgecalc
