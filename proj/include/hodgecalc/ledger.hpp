#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgecalc/bundle.hpp"

namespace hodgecalc {

class LedgerInconsistency : public CalcError {
  public:
    explicit LedgerInconsistency(const std::string& m) : CalcError("ledger inconsistency: " + m) {}
};

/// One modular form: weight, divisor-class presentation and vanishing orders.
/// The divisor of the form is residual + sum of order_X * X over the named
/// loci, and its total class is h_degree * h + u^*(det_power * lambda).
struct FormRecord {
    std::string name;
    std::string space;        // base space name
    int genus = 0;
    bool dual = false;        // section of Schur functors of the dual bundle
    long h_degree = 0;        // 0 for scalar-valued forms
    long det_power = 0;
    WeightTuple weight;
    std::map<std::string, Rational> orders;  // by boundary generator or locus name
    std::string residual_name;   // named non-boundary component ("" if none)
    FormalClass residual_base;   // u^*-part of the residual divisor class
    std::string provenance;
    bool cusp = false;
    bool meromorphic = false;
    bool descends = false;  // descends from the Teichmueller to the Siegel side
};

class Ledger {
  public:
    /// Recomputes weight, the divisor-class identity
    ///   det_power * lambda == residual_base + sum order_X * [X]   (mod relations)
    /// and the cusp/meromorphy flags; stores the record only if all agree.
    void register_and_check(const FormRecord& r);

    const FormRecord& at(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) > 0; }
    const std::vector<FormRecord>& records() const { return records_; }

    /// Order and weight arithmetic for a quotient num / den^power; flags the
    /// result meromorphic where an order goes negative. Not auto-registered.
    FormRecord ratio(const FormRecord& num, const FormRecord& den, long power,
                     const std::string& name) const;

  private:
    std::vector<FormRecord> records_;
    std::map<std::string, size_t> index_;
};

/// The forms the engine constructs, with residual classes sourced from the
/// derivation pipelines where one exists. Built once.
const Ledger& standard_ledger();

/// Resolves the classical locus names (infinity, A11, A21) to the boundary
/// generators of the given record's space.
Rational order_of(const FormRecord& r, const std::string& locus);

/// Class of a named non-boundary locus on a space ("hyperelliptic" on M3bar,
/// "theta_null" on M4bar).
FormalClass locus_class(const std::string& space, const std::string& name);

/// Minimal vanishing orders of the coordinates of a product of p + q local
/// sections split into two groups meeting opposite fibers: entry i is
///   min over |S| = i of (#(S^c, first group) + #(S, second group)) - shift.
std::vector<long> boundary_order_profile(int p, int q, long shift);

}  // namespace hodgecalc
