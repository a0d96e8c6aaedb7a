#include "hodgecalc/bundle.hpp"

#include <sstream>

namespace hodgecalc {

std::string WeightTuple::str() const {
    if (parts.size() == 1)
        return std::to_string(parts[0]);
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

BundleDescriptor hodge_bundle(int g, int k, bool dual) {
    BundleDescriptor d;
    d.base = Catalog::get().mbar(g);
    d.genus = g;
    d.twist = k;
    d.rank = (k == 1) ? g : (2 * k - 1) * (g - 1);
    d.dual = dual;
    d.c1 = normal_form(c1_ek(g, k), Catalog::get().kappa_rels(g));
    if (d.rank < 2)
        throw Unsupported("bundle of rank < 2");
    return d;
}

BundleDescriptor hurwitz_hodge_bundle(int g) {
    BundleDescriptor d;
    d.base = Catalog::get().hurwitz(g);
    d.genus = g;
    d.twist = 1;
    d.rank = g;
    d.dual = false;
    d.c1 = hurwitz_lambda(g);
    return d;
}

HClass HClass::h_power(const BundleDescriptor& d, int i, Rational c) {
    HClass out(d);
    out.add(i, {c, d.base->zero()});
    return out;
}

HClass HClass::pullback(const BundleDescriptor& d, const FormalClass& x) {
    HClass out(d);
    out.add(0, {Rational(0), x});
    return out;
}

HClass HClass::divisor(const BundleDescriptor& d, const Rational& j, const FormalClass& a) {
    HClass out(d);
    out.add(1, {j, d.base->zero()});
    out.add(0, {Rational(0), a});
    return out;
}

int HClass::max_exp() const { return coef_.empty() ? 0 : coef_.rbegin()->first; }

HCoeff HClass::coeff(int i) const {
    auto it = coef_.find(i);
    if (it != coef_.end())
        return it->second;
    return {Rational(0), desc_.base ? desc_.base->zero() : FormalClass()};
}

void HClass::add(int i, const HCoeff& c) {
    if (i < 0)
        throw CalcError("negative hyperplane exponent");
    if (i > desc_.rank)
        throw NeedsChernReduction("exponent " + std::to_string(i) + " on rank " +
                                  std::to_string(desc_.rank));
    if (c.is_zero())
        return;
    auto [it, inserted] = coef_.emplace(i, c);
    if (!inserted) {
        it->second.unit += c.unit;
        it->second.base += c.base;
        if (it->second.is_zero())
            coef_.erase(it);
    }
}

HClass& HClass::operator+=(const HClass& o) {
    if (desc_.base && o.desc_.base && !(desc_ == o.desc_))
        throw SpaceMismatch("adding classes on different bundles");
    if (!desc_.base)
        desc_ = o.desc_;
    dropped_ = dropped_ || o.dropped_;
    for (const auto& [i, c] : o.coef_)
        add(i, c);
    return *this;
}

HClass& HClass::operator-=(const HClass& o) {
    HClass t = o;
    t *= Rational(-1);
    return *this += t;
}

HClass& HClass::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coef_.clear();
        return *this;
    }
    for (auto& [i, v] : coef_) {
        v.unit *= c;
        v.base *= c;
    }
    return *this;
}

bool operator==(const HClass& a, const HClass& b) {
    if (a.desc_.base && b.desc_.base && !(a.desc_ == b.desc_))
        return false;
    if (a.coef_.size() != b.coef_.size())
        return false;
    for (const auto& [i, c] : a.coef_) {
        HCoeff d = b.coeff(i);
        if (c.unit != d.unit || !(c.base == d.base))
            return false;
    }
    return true;
}

HClass mul(const HClass& a, const HClass& b) {
    if (!(a.desc_ == b.desc_))
        throw SpaceMismatch("multiplying classes on different bundles");
    HClass out(a.desc_);
    out.dropped_ = a.dropped_ || b.dropped_;
    for (const auto& [i, ci] : a.coef_) {
        for (const auto& [j, cj] : b.coef_) {
            HCoeff prod;
            prod.unit = ci.unit * cj.unit;
            prod.base = ci.unit * cj.base + cj.unit * ci.base;
            if (!ci.base.is_zero() && !cj.base.is_zero())
                out.dropped_ = true;  // codimension-2 base product, not representable
            out.add(i + j, prod);
        }
    }
    return out;
}

std::string HClass::str() const {
    if (coef_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    const char* hname = desc_.dual ? "hdual" : "h";
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        const auto& [i, c] = *it;
        std::string pow;
        if (i == 1)
            pow = hname;
        else if (i > 1)
            pow = std::string(hname) + "^" + std::to_string(i);
        if (!c.unit.is_zero()) {
            os << (first ? "" : " + ");
            first = false;
            if (i == 0)
                os << c.unit.str();
            else if (c.unit == Rational(1))
                os << pow;
            else
                os << c.unit.str() << " " << pow;
        }
        if (!c.base.is_zero()) {
            os << (first ? "" : " + ");
            first = false;
            if (i == 0)
                os << "u*(" << c.base.str() << ")";
            else
                os << pow << " u*(" << c.base.str() << ")";
        }
    }
    return os.str();
}

HCoeff push_u(const HClass& c) {
    const int r = c.desc().rank;
    HCoeff out{Rational(0), c.desc().base->zero()};
    for (const auto& [i, v] : c.coeffs()) {
        if (i <= r - 2)
            continue;
        if (i == r - 1) {
            out.unit += v.unit;
            out.base += v.base;
        } else if (i == r) {
            // h^r = c1 h^{r-1} - c2 h^{r-2} + ...; only the c1 term survives u_*.
            if (!v.base.is_zero())
                throw CalcError("push_u: base coefficient at top power lands in codimension 2");
            out.base += v.unit * c.desc().c1;
        } else {
            throw NeedsChernReduction("push_u at exponent " + std::to_string(i));
        }
    }
    return out;
}

FormalClass c1_sym(int m, const BundleDescriptor& d) {
    if (m < 0)
        throw Unsupported("c1_sym of negative power");
    // Each of the C(m+r-1, r-1) monomials has total degree m spread evenly
    // over the r line factors.
    Rational factor = Rational(m, d.rank) * binomial(m + d.rank - 1, d.rank - 1);
    return factor * d.c1;
}

WeightTuple render_weight(int genus, bool dual, long j, long k) {
    if (j == 0)
        return WeightTuple::scalar(genus, k);
    if (genus == 2)
        return {2, {j, dual ? k - j : k}};
    if (genus == 3)
        return dual ? WeightTuple{3, {0, j, k - j}} : WeightTuple{3, {j, 0, k}};
    if (genus == 4) {
        if (dual)
            throw Unsupported("dual weight rendering in genus 4");
        return {4, {j, 0, 0, k}};
    }
    throw Unsupported("weight rendering in genus " + std::to_string(genus));
}

namespace {

WeightResult weight_impl(const HClass& c, std::optional<long> det_power) {
    const BundleDescriptor& d = c.desc();
    if (c.max_exp() > 1)
        throw NotADivisor("hyperplane degree " + std::to_string(c.max_exp()));
    HCoeff top = c.coeff(1);
    if (!top.base.is_zero())
        throw NotADivisor("h-coefficient is not a pure number: " + top.base.str());
    if (!top.unit.is_integer() || top.unit.is_negative())
        throw NotADivisor("h-coefficient " + top.unit.str());
    const long j = top.unit.is_zero() ? 0 : top.unit.as_long();

    FormalClass a = c.coeff(0).base;
    long k = 0;
    FormalClass boundary_part = a;
    if (d.base->has_gen("lambda")) {
        Rational kl = a.coeff("lambda");
        if (!kl.is_integer())
            throw NotADivisor("det power " + kl.str() + " is not integral");
        k = kl.is_zero() ? 0 : kl.as_long();
        boundary_part.add_term("lambda", -kl);
    } else {
        if (!det_power)
            throw NotADivisor("det power must be given explicitly on " + d.base->name());
        k = *det_power;
        boundary_part -= Rational(k) * d.c1;
    }

    WeightResult out;
    out.h_degree = j;
    out.det_power = k;
    out.weight = render_weight(d.genus, d.dual, j, k);
    out.cusp = true;
    for (const auto& [gen, coeff] : boundary_part.coeffs()) {
        out.orders[gen] = -coeff;
        if (coeff.is_positive())
            out.meromorphic = true;
    }
    for (const auto& gen : d.base->gens()) {
        if (gen == "lambda" || gen == "kappa1" || gen == "psi")
            continue;
        auto it = out.orders.find(gen);
        if (it == out.orders.end() || !it->second.is_positive()) {
            out.cusp = false;
            break;
        }
    }
    return out;
}

}  // namespace

WeightResult weight_from_divisor(const HClass& c) { return weight_impl(c, std::nullopt); }

WeightResult weight_from_divisor(const HClass& c, long det_power) {
    return weight_impl(c, det_power);
}

DualizeResult dualize(const HClass& c, int g) {
    if (g != 2 && g != 3)
        throw Unsupported("dualize only for genus 2 and 3");
    const BundleDescriptor& d = c.desc();
    if (d.twist != 1)
        throw Unsupported("dualize needs the k = 1 Hodge bundle");
    if (!d.dual)
        throw Unsupported("dualize expects a class on the dual bundle");
    if (c.max_exp() > 1)
        throw NotADivisor("dualize expects a divisor class");

    HCoeff top = c.coeff(1);
    if (!top.base.is_zero() || !top.unit.is_integer())
        throw NotADivisor("h-coefficient " + top.unit.str());
    const long j = top.unit.is_zero() ? 0 : top.unit.as_long();
    FormalClass a = c.coeff(0).base;

    DualizeResult out;
    if (g == 2) {
        // E^dual = E x det(E)^{-1}, so hdual = h - u^*lambda.
        BundleDescriptor plain = hodge_bundle(2, 1, false);
        FormalClass shifted = a;
        shifted.add_term("lambda", Rational(-j));
        out.cls = HClass::divisor(plain, Rational(j), shifted);
        out.weight = render_weight(2, false, j, shifted.coeff("lambda").as_long());
    } else {
        long k = a.coeff("lambda").as_long();
        out.weight = render_weight(3, true, j, k);
    }
    return out;
}

}  // namespace hodgecalc
