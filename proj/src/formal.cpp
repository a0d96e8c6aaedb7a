#include "hodgecalc/formal.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace hodgecalc {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpq_class(mpz_class(s)));
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0)
            throw std::domain_error("zero denominator");
        return Rational(mpq_class(n, d));
    } catch (const std::invalid_argument&) {
        throw CalcError("cannot parse rational '" + s + "'");
    }
}

Space::Space(std::string name, std::vector<std::string> gens)
    : name_(std::move(name)), gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!index_.emplace(gens_[i], static_cast<int>(i)).second)
            throw CalcError("duplicate generator '" + gens_[i] + "' on space " + name_);
    }
}

int Space::gen_index(const std::string& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
        throw UnknownGenerator(g, name_);
    return it->second;
}

void Space::add_alias(const std::string& alias, const std::string& gen, const Rational& factor) {
    if (index_.count(alias))
        throw CalcError("alias '" + alias + "' shadows a generator on " + name_);
    gen_index(gen);
    aliases_[alias] = {gen, factor};
}

std::optional<std::pair<std::string, Rational>> Space::resolve_alias(const std::string& name) const {
    auto it = aliases_.find(name);
    if (it == aliases_.end())
        return std::nullopt;
    return it->second;
}

FormalClass Space::zero() const { return FormalClass(this); }

FormalClass Space::gen(const std::string& g) const {
    FormalClass c(this);
    c.add_term(g, Rational(1));
    return c;
}

Rational FormalClass::coeff(const std::string& gen) const {
    if (!space_)
        return Rational(0);
    auto it = coeff_.find(gen);
    if (it != coeff_.end())
        return it->second;
    if (auto a = space_->resolve_alias(gen)) {
        auto jt = coeff_.find(a->first);
        // Reading through an alias reports the aliased share, e.g. Delta4(k+)
        // reads as half of Delta4.
        return jt == coeff_.end() ? Rational(0) : a->second * jt->second;
    }
    space_->gen_index(gen);  // throws for genuinely unknown names
    return Rational(0);
}

void FormalClass::add_term(const std::string& gen, const Rational& c) {
    if (!space_)
        throw CalcError("add_term on a class without a space");
    if (c.is_zero())
        return;
    std::string target = gen;
    Rational value = c;
    if (!space_->has_gen(gen)) {
        auto a = space_->resolve_alias(gen);
        if (!a)
            throw UnknownGenerator(gen, space_->name());
        target = a->first;
        value = c * a->second;
    }
    auto [it, inserted] = coeff_.emplace(target, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            coeff_.erase(it);
    }
}

void FormalClass::check_same_space(const FormalClass& o) const {
    if (space_ && o.space_ && space_ != o.space_)
        throw SpaceMismatch(space_->name() + " vs " + o.space_->name());
}

FormalClass& FormalClass::operator+=(const FormalClass& o) {
    check_same_space(o);
    if (!space_)
        space_ = o.space_;
    for (const auto& [g, c] : o.coeff_)
        add_term(g, c);
    return *this;
}

FormalClass& FormalClass::operator-=(const FormalClass& o) {
    check_same_space(o);
    if (!space_)
        space_ = o.space_;
    for (const auto& [g, c] : o.coeff_)
        add_term(g, -c);
    return *this;
}

FormalClass& FormalClass::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeff_.clear();
        return *this;
    }
    for (auto& [g, v] : coeff_)
        v *= c;
    return *this;
}

FormalClass FormalClass::operator-() const {
    FormalClass r = *this;
    r *= Rational(-1);
    return r;
}

bool operator==(const FormalClass& a, const FormalClass& b) {
    if (a.space_ && b.space_ && a.space_ != b.space_)
        return false;
    return a.coeff_ == b.coeff_;
}

FormalClass FormalClass::substitute(const std::map<std::string, FormalClass>& table, bool strict) const {
    FormalClass out;
    const Space* target = nullptr;
    for (const auto& [g, sub] : table)
        target = sub.space();
    out = target ? FormalClass(target) : FormalClass(space_);
    for (const auto& [g, c] : coeff_) {
        auto it = table.find(g);
        if (it == table.end()) {
            if (strict)
                throw CalcError("substitute: generator '" + g + "' has no image");
            out.add_term(g, c);
        } else {
            out += c * it->second;
        }
    }
    return out;
}

std::string FormalClass::str() const {
    if (is_zero())
        return "0";
    // Render in the space's declared generator order.
    std::vector<std::pair<int, const std::pair<const std::string, Rational>*>> ordered;
    for (const auto& term : coeff_)
        ordered.push_back({space_->gen_index(term.first), &term});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, term] : ordered) {
        const auto& [g, c] = *term;
        Rational a = c;
        if (first) {
            if (a.is_negative()) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.is_negative() ? " - " : " + ");
            if (a.is_negative())
                a = -a;
        }
        if (a != Rational(1))
            os << a.str() << " ";
        os << g;
        first = false;
    }
    return os.str();
}

FormalClass combine(const std::vector<std::pair<Rational, FormalClass>>& terms) {
    if (terms.empty())
        throw CalcError("combine: empty term list");
    FormalClass out(terms.front().second.space());
    for (const auto& [c, cls] : terms) {
        FormalClass t = cls;
        t *= c;
        out += t;
    }
    return out;
}

void RelationSet::add(const FormalClass& relation, const std::string& eliminate) {
    if (!space_)
        space_ = relation.space();
    if (relation.space() != space_)
        throw SpaceMismatch("relation on " + relation.space()->name() + " added to relation set on " +
                            space_->name());
    if (relation.coeff(eliminate).is_zero())
        throw BadRelation("zero pivot on '" + eliminate + "' in " + relation.str());
    rels_.push_back({relation, eliminate});
}

FormalClass normal_form(const FormalClass& c, const RelationSet& rels) {
    if (rels.empty())
        return c;
    if (rels.space() && c.space() && rels.space() != c.space())
        throw SpaceMismatch("normal_form: class on " + c.space()->name() + ", relations on " +
                            rels.space()->name());
    FormalClass out = c;
    for (const auto& rel : rels.rels()) {
        Rational a = out.coeff(rel.eliminate);
        if (a.is_zero())
            continue;
        Rational pivot = rel.relation.coeff(rel.eliminate);
        FormalClass t = rel.relation;
        t *= a / pivot;
        out -= t;
    }
    return out;
}

bool equivalent(const FormalClass& a, const FormalClass& b, const RelationSet& rels) {
    return normal_form(a - b, rels).is_zero();
}

std::optional<std::vector<Rational>> solve_in_span(const FormalClass& target,
                                                   const std::vector<FormalClass>& basis) {
    // Row generators, column basis elements; exact Gaussian elimination.
    std::set<std::string> gens;
    for (const auto& [g, c] : target.coeffs())
        gens.insert(g);
    for (const auto& b : basis) {
        if (b.space() != target.space())
            throw SpaceMismatch("solve_in_span: mixed spaces");
        for (const auto& [g, c] : b.coeffs())
            gens.insert(g);
    }
    const size_t rows = gens.size(), cols = basis.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
    {
        size_t r = 0;
        for (const auto& g : gens) {
            for (size_t j = 0; j < cols; ++j)
                m[r][j] = basis[j].coeff(g);
            m[r][cols] = target.coeff(g);
            ++r;
        }
    }
    std::vector<int> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t j = 0; j < cols && rank < rows; ++j) {
        size_t p = rank;
        while (p < rows && m[p][j].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        Rational inv = Rational(1) / m[rank][j];
        for (size_t c = j; c <= cols; ++c)
            m[rank][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][j].is_zero())
                continue;
            Rational f = m[r][j];
            for (size_t c = j; c <= cols; ++c)
                m[r][c] -= f * m[rank][c];
        }
        pivot_of_col[j] = static_cast<int>(rank);
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (!m[r][cols].is_zero())
            return std::nullopt;
    // Free columns get coefficient zero.
    std::vector<Rational> x(cols, Rational(0));
    for (size_t j = 0; j < cols; ++j)
        if (pivot_of_col[j] >= 0)
            x[j] = m[pivot_of_col[j]][cols];
    return x;
}

}  // namespace hodgecalc
