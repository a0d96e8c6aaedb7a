#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgecalc/rational.hpp"

namespace hodgecalc {

class CalcError : public std::runtime_error {
  public:
    explicit CalcError(const std::string& m) : std::runtime_error(m) {}
};

class SpaceMismatch : public CalcError {
  public:
    explicit SpaceMismatch(const std::string& m) : CalcError("space mismatch: " + m) {}
};

class UnknownGenerator : public CalcError {
  public:
    UnknownGenerator(const std::string& gen, const std::string& space)
        : CalcError("unknown generator '" + gen + "' on space " + space) {}
};

class UnknownClass : public CalcError {
  public:
    explicit UnknownClass(const std::string& m) : CalcError("unknown class: " + m) {}
};

class BadRelation : public CalcError {
  public:
    explicit BadRelation(const std::string& m) : CalcError("bad relation: " + m) {}
};

class Unsupported : public CalcError {
  public:
    explicit Unsupported(const std::string& m) : CalcError("unsupported: " + m) {}
};

class FormalClass;
class RelationSet;

/// A Picard-type group presentation: a named generator list plus optional
/// aliases (alternative names that rewrite to a multiple of a generator).
/// Generator whitelisting is strict so typos fail at construction time.
class Space {
  public:
    Space(std::string name, std::vector<std::string> gens);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& gens() const { return gens_; }
    bool has_gen(const std::string& g) const { return index_.count(g) > 0; }
    int gen_index(const std::string& g) const;

    // alias -> (generator, factor): writing `alias` means `factor * generator`.
    void add_alias(const std::string& alias, const std::string& gen, const Rational& factor);
    std::optional<std::pair<std::string, Rational>> resolve_alias(const std::string& name) const;

    FormalClass zero() const;
    FormalClass gen(const std::string& g) const;  // the generator as a class

  private:
    std::string name_;
    std::vector<std::string> gens_;
    std::map<std::string, int> index_;
    std::map<std::string, std::pair<std::string, Rational>> aliases_;
};

/// Finite Q-linear combination of the generators of one Space, kept in
/// canonical sparse form (no zero coefficients, aliases resolved).
class FormalClass {
  public:
    FormalClass() : space_(nullptr) {}
    explicit FormalClass(const Space* s) : space_(s) {}

    const Space* space() const { return space_; }
    bool is_zero() const { return coeff_.empty(); }
    const std::map<std::string, Rational>& coeffs() const { return coeff_; }

    Rational coeff(const std::string& gen) const;
    void add_term(const std::string& gen, const Rational& c);

    FormalClass& operator+=(const FormalClass& o);
    FormalClass& operator-=(const FormalClass& o);
    FormalClass& operator*=(const Rational& c);
    friend FormalClass operator+(FormalClass a, const FormalClass& b) { return a += b; }
    friend FormalClass operator-(FormalClass a, const FormalClass& b) { return a -= b; }
    friend FormalClass operator*(const Rational& c, FormalClass a) { return a *= c; }
    FormalClass operator-() const;

    friend bool operator==(const FormalClass& a, const FormalClass& b);
    friend bool operator!=(const FormalClass& a, const FormalClass& b) { return !(a == b); }

    // Applies a generator-wise substitution; untouched generators pass through
    // unless `strict`, in which case they must all be mapped.
    FormalClass substitute(const std::map<std::string, FormalClass>& table, bool strict = false) const;

    std::string str() const;

  private:
    void check_same_space(const FormalClass& o) const;

    const Space* space_;
    std::map<std::string, Rational> coeff_;
};

FormalClass combine(const std::vector<std::pair<Rational, FormalClass>>& terms);

/// Linear relations declared to vanish, each with a designated generator to
/// eliminate. Normal forms are computed by triangular elimination in the
/// declared order, so representatives are deterministic.
class RelationSet {
  public:
    RelationSet() : space_(nullptr) {}
    explicit RelationSet(const Space* s) : space_(s) {}

    const Space* space() const { return space_; }
    void add(const FormalClass& relation, const std::string& eliminate);
    bool empty() const { return rels_.empty(); }

    struct Rel {
        FormalClass relation;
        std::string eliminate;
    };
    const std::vector<Rel>& rels() const { return rels_; }

  private:
    const Space* space_;
    std::vector<Rel> rels_;
};

FormalClass normal_form(const FormalClass& c, const RelationSet& rels);
bool equivalent(const FormalClass& a, const FormalClass& b, const RelationSet& rels);

/// Exact coefficients of `target` in the span of `basis`, or nullopt.
std::optional<std::vector<Rational>> solve_in_span(const FormalClass& target,
                                                   const std::vector<FormalClass>& basis);

}  // namespace hodgecalc
