#include "hodgecalc/ledger.hpp"

#include <algorithm>

#include "hodgecalc/goodmodel.hpp"
#include "hodgecalc/incidence.hpp"
#include "hodgecalc/plethysm.hpp"

namespace hodgecalc {

namespace {

const Space* space_of(const FormRecord& r) {
    const Space* s = Catalog::get().by_name(r.space);
    if (!s)
        throw LedgerInconsistency(r.name + ": unknown space " + r.space);
    return s;
}

FormalClass lambda_class_of(const Space* s, int g) {
    if (s->has_gen("lambda"))
        return s->gen("lambda");
    return hurwitz_lambda(g);  // Hurwitz spaces carry lambda as a boundary class
}

bool is_boundary_gen(const std::string& name) {
    return name.rfind("delta", 0) == 0 || name.rfind("zeta", 0) == 0 ||
           name.rfind("Delta", 0) == 0;
}

}  // namespace

FormalClass locus_class(const std::string& space, const std::string& name) {
    if (space == "M3bar" && name == "hyperelliptic")
        return hyperelliptic_class_m3();
    if (space == "M4bar" && name == "theta_null") {
        FormalClass c(Catalog::get().mbar(4));
        c.add_term("lambda", Rational(34));
        c.add_term("delta0", Rational(-4));
        c.add_term("delta1", Rational(-14));
        c.add_term("delta2", Rational(-18));
        return c;
    }
    if (space == "M3bar" && name == "dual_curve") {
        // Class of the divisor swept by the dual of the canonical quartic
        // (Korotkin-Zograf): 12 hdual + 24 lambda - 2 delta0 - 3 delta1.
        FormalClass c(Catalog::get().mbar(3));
        c.add_term("lambda", Rational(24));
        c.add_term("delta0", Rational(-2));
        c.add_term("delta1", Rational(-3));
        return c;
    }
    throw UnknownClass("locus " + name + " on " + space);
}

Rational order_of(const FormRecord& r, const std::string& locus) {
    std::string key = locus;
    if (locus == "infinity")
        key = "delta0";
    else if (locus == "A11" || locus == "A_{1,1}")
        key = "delta1";
    else if (locus == "A21" || locus == "A_{2,1}")
        key = "delta1";
    auto it = r.orders.find(key);
    return it == r.orders.end() ? Rational(0) : it->second;
}

void Ledger::register_and_check(const FormRecord& r) {
    const Space* s = space_of(r);

    WeightTuple w = render_weight(r.genus, r.dual, r.h_degree, r.det_power);
    if (w != r.weight)
        throw LedgerInconsistency(r.name + ": stored weight " + r.weight.str() +
                                  ", class gives " + w.str());

    // det_power * lambda == residual + sum orders * [locus] in Pic.
    FormalClass lhs = Rational(r.det_power) * lambda_class_of(s, r.genus);
    FormalClass rhs = r.residual_base.is_zero() ? s->zero() : r.residual_base;
    bool cusp = true;
    bool mero = false;
    for (const auto& [locus, ord] : r.orders) {
        if (ord.is_negative())
            mero = true;
        if (is_boundary_gen(locus)) {
            rhs.add_term(locus, ord);
        } else {
            rhs += ord * locus_class(r.space, locus);
        }
    }
    for (const auto& gen : s->gens()) {
        if (!is_boundary_gen(gen))
            continue;
        auto it = r.orders.find(gen);
        if (it == r.orders.end() || !it->second.is_positive())
            cusp = false;
    }
    const RelationSet& rels = Catalog::get().default_rels(s);
    if (!equivalent(lhs, rhs, rels))
        throw LedgerInconsistency(r.name + ": class identity fails: det side " + lhs.str() +
                                  ", divisor side " + rhs.str());
    if (cusp != r.cusp)
        throw LedgerInconsistency(r.name + ": cusp flag should be " +
                                  std::string(cusp ? "true" : "false"));
    if (mero != r.meromorphic)
        throw LedgerInconsistency(r.name + ": meromorphy flag should be " +
                                  std::string(mero ? "true" : "false"));

    index_[r.name] = records_.size();
    records_.push_back(r);
}

const FormRecord& Ledger::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownClass("form " + name);
    return records_[it->second];
}

FormRecord Ledger::ratio(const FormRecord& num, const FormRecord& den, long power,
                         const std::string& name) const {
    if (num.space != den.space)
        throw SpaceMismatch("ratio of forms on " + num.space + " and " + den.space);
    if (den.h_degree != 0)
        throw Unsupported("ratio by a vector-valued form");
    FormRecord out = num;
    out.name = name;
    out.det_power = num.det_power - power * den.det_power;
    out.weight = render_weight(num.genus, num.dual, out.h_degree, out.det_power);
    out.meromorphic = false;
    out.cusp = true;
    std::map<std::string, Rational> orders = num.orders;
    for (const auto& [locus, ord] : den.orders)
        orders[locus] -= Rational(power) * ord;
    out.orders.clear();
    for (const auto& [locus, ord] : orders) {
        if (!ord.is_zero())
            out.orders[locus] = ord;
        if (ord.is_negative())
            out.meromorphic = true;
    }
    out.residual_base = num.residual_base - Rational(power) * den.residual_base;
    const Space* s = space_of(out);
    for (const auto& gen : s->gens()) {
        if (!is_boundary_gen(gen))
            continue;
        auto it = out.orders.find(gen);
        if (it == out.orders.end() || !it->second.is_positive())
            out.cusp = false;
    }
    out.provenance = num.name + " / " + den.name + (power == 1 ? "" : "^" + std::to_string(power));
    return out;
}

std::vector<long> boundary_order_profile(int p, int q, long shift) {
    if (p < 1 || q < 1)
        throw Unsupported("boundary_order_profile needs two nonempty groups");
    const int n = p + q;
    if (n > 24)
        throw Unsupported("boundary_order_profile: group sizes too large");
    std::vector<long> best(static_cast<size_t>(n) + 1, std::numeric_limits<long>::max());
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        int size = 0, value = 0;
        for (int i = 0; i < n; ++i) {
            const bool in = (mask >> i) & 1UL;
            if (in)
                ++size;
            if (i < p && !in)
                ++value;  // complement meeting the first group
            if (i >= p && in)
                ++value;  // subset meeting the second group
        }
        best[static_cast<size_t>(size)] = std::min(best[static_cast<size_t>(size)],
                                                   static_cast<long>(value));
    }
    for (auto& v : best)
        v -= shift;
    return best;
}

namespace {

FormRecord make_record(std::string name, std::string space, int genus, bool dual, long j, long k,
                       std::map<std::string, Rational> orders, std::string residual_name,
                       FormalClass residual, std::string provenance, bool cusp, bool mero,
                       bool descends) {
    FormRecord r;
    r.name = std::move(name);
    r.space = std::move(space);
    r.genus = genus;
    r.dual = dual;
    r.h_degree = j;
    r.det_power = k;
    r.weight = render_weight(genus, dual, j, k);
    r.orders = std::move(orders);
    r.residual_name = std::move(residual_name);
    r.residual_base = std::move(residual);
    r.provenance = std::move(provenance);
    r.cusp = cusp;
    r.meromorphic = mero;
    r.descends = descends;
    return r;
}

Ledger build_standard_ledger() {
    Ledger led;
    const Catalog& cat = Catalog::get();

    // -- genus 2 --------------------------------------------------------------
    led.register_and_check(make_record(
        "chi10", "M2bar", 2, false, 0, 10, {{"delta0", 1}, {"delta1", 2}}, "",
        cat.mbar(2)->zero(), "Igusa cusp form displaying 10 lambda = delta0 + 2 delta1",
        true, false, true));

    {
        Genus2Result g2 = genus2_solve();
        led.register_and_check(make_record(
            "chi6_8", "M2bar", 2, false, 6, 8, {{"delta0", 1}, {"delta1", 1}}, "branch divisor",
            g2.branch_divisor.coeff(0).base, "pushforward of the canonical branch divisor",
            true, false, true));
    }
    led.register_and_check(led.ratio(led.at("chi6_8"), led.at("chi10"), 1, "chi6_m2"));

    {
        // Weierstrass divisor in the dual bundle (Gheorghita), rechecked
        // through the incidence pipeline.
        PipelineResult gt = gheorghita_tarasca(2, 1);
        led.register_and_check(make_record(
            "chi6_28", "M2bar", 2, true, 6, 34, {{"delta0", 3}, {"delta1", 5}}, "Weierstrass divisor",
            gt.closed_form.coeff(0).base, "Gheorghita, Weierstrass divisor in the dual bundle",
            true, false, true));
    }

    // -- genus 3 --------------------------------------------------------------
    led.register_and_check(make_record(
        "chi9", "M3bar", 3, false, 0, 9, {{"delta0", 1}, {"delta1", 3}, {"hyperelliptic", 1}},
        "hyperelliptic locus", cat.mbar(3)->zero(),
        "Teichmueller form cutting out the hyperelliptic locus", true, false, false));
    led.register_and_check(make_record(
        "chi18", "M3bar", 3, false, 0, 18, {{"delta0", 2}, {"delta1", 6}, {"hyperelliptic", 2}},
        "hyperelliptic locus", cat.mbar(3)->zero(), "square of chi9; Igusa's chi18",
        true, false, true));

    {
        CurveClass cc = curve_class(3, 1);
        led.register_and_check(make_record(
            "chi4_0_8", "M3bar", 3, false, 4, 8, {{"delta0", 1}, {"delta1", 2}}, "canonical image",
            cc.beta1, "pushforward of the universal canonical quartic", true, false, true));
    }

    {
        QClassResult q = q_class();
        led.register_and_check(make_record(
            "chi2_0_4", "H32", 3, false, 2, 4, {{"Delta2", 1}, {"Delta3", 1}, {"Delta4", 1}},
            "rational normal conic", q.a_class, "universal conic in P(E) over the Hurwitz space",
            true, false, false));
    }

    led.register_and_check(make_record(
        "chi0_4_16", "M3bar", 3, true, 4, 20, {{"delta0", 2}, {"delta1", 4}}, "equianharmonic dual",
        equianharmonic_dual_class().coeff(0).base,
        "Salmon's equianharmonic contravariant of the ternary quartic", true, false, true));
    led.register_and_check(make_record(
        "chi0_6_24", "M3bar", 3, true, 6, 30, {{"delta0", 3}, {"delta1", 6}}, "j=1728 dual",
        jinvariant_dual_class().coeff(0).base,
        "contravariant of lines with equal cross-ratio j = 1728", true, false, true));

    led.register_and_check(make_record(
        "chi0_12_48", "M3bar", 3, true, 12, 60,
        {{"delta0", 6}, {"delta1", 15}, {"hyperelliptic", 4}}, "dual_curve",
        locus_class("M3bar", "dual_curve"),
        "sigma^3 - 27 tau^2, cutting out the dual of the canonical curve", true, false, true));
    led.register_and_check(led.ratio(led.at("chi0_12_48"), led.at("chi18"), 2, "chi0_12_12"));

    {
        PipelineResult gt = gheorghita_tarasca(3, 1);
        led.register_and_check(make_record(
            "chi0_24_44", "M3bar", 3, true, 24, 68, {{"delta0", 6}, {"delta1", 12}},
            "Weierstrass divisor", gt.closed_form.coeff(0).base,
            "Gheorghita, Weierstrass divisor in the dual bundle", true, false, true));
    }

    {
        HypertangentResult ht = hypertangent_class();
        led.register_and_check(make_record(
            "chi24_0_108", "M3bar", 3, false, 24, 108, {{"delta0", 12}, {"delta1", 12}},
            "hypertangent lines", ht.final.coeff(0).base,
            "the 24 hypertangent lines of the canonical quartic", true, false, true));
    }

    {
        HhResult hh = hh_class();
        led.register_and_check(make_record(
            "Hh_8_0_8", "H32", 3, false, 8, 8, {{"Delta2", 2}, {"Delta3", -1}},
            "hypertangent lines at the branch sections", hh.hh.coeff(0).base,
            "eight tangent lines at the ramification sections", false, true, false));
    }

    // Scalar forms from integral multiples of the Hodge class on the Hurwitz
    // spaces: weight 2(2g+1) with divisor (i+1)(g-i) Delta_{2i+2}
    // + 2i(g-i) Delta_{2i+1}.
    for (int g = 2; g <= 5; ++g) {
        std::map<std::string, Rational> orders;
        for (int i = 0; 2 * i + 2 <= g + 1; ++i)
            orders["Delta" + std::to_string(2 * i + 2)] = Rational((i + 1) * (g - i));
        for (int i = 1; 2 * i + 1 <= g + 1; ++i)
            orders["Delta" + std::to_string(2 * i + 1)] = Rational(2 * i * (g - i));
        led.register_and_check(make_record(
            "hurwitz_disc_g" + std::to_string(g), "H" + std::to_string(g) + "2", g, false, 0,
            2 * (2 * g + 1), std::move(orders), "", cat.hurwitz(g)->zero(),
            "power of the discriminant of the binary form of degree 2g+2", true, false, false));
    }

    // Weight 14 on H32 whose square gives the weight-28 form.
    led.register_and_check(make_record(
        "w14", "H32", 3, false, 0, 14, {{"Delta2", 3}, {"Delta3", 4}, {"Delta4", 4}}, "",
        cat.hurwitz(3)->zero(), "half of the octic discriminant class; squares to chi28",
        true, false, false));
    led.register_and_check(make_record(
        "chi28", "H32", 3, false, 0, 28, {{"Delta2", 6}, {"Delta3", 8}, {"Delta4", 8}}, "",
        cat.hurwitz(3)->zero(), "cube of the octic discriminant (Tsuyumine)", true, false, true));

    // -- genus 4 --------------------------------------------------------------
    {
        // [Q] = O(2) + u^*(8 lambda - delta): engine-computed via
        // c1(Sym^2 E) - c1(E_2) = 5 lambda - (13 lambda - delta).
        BundleDescriptor e4 = hodge_bundle(4, 1);
        FormalClass u = c1_sym(2, e4) - normal_form(c1_ek(4, 2), Catalog::get().kappa_rels(4));
        FormalClass base = -u;
        led.register_and_check(make_record(
            "chi_genus4", "M4bar", 4, false, 2, 8, {{"delta0", 1}, {"delta1", 1}, {"delta2", 1}},
            "quadric through the canonical curve", base,
            "the quadric containing the canonical curve of genus 4", true, false, false));
    }
    led.register_and_check(make_record(
        "Dchi34", "M4bar", 4, false, 0, discriminant_weight(4, 8),
        {{"delta0", 4}, {"delta1", 14}, {"delta2", 18}, {"theta_null", 1}}, "theta_null",
        cat.mbar(4)->zero(), "discriminant of chi_genus4; vanishing theta-null (Teixidor i Bigas)",
        true, false, true));

    return led;
}

}  // namespace

const Ledger& standard_ledger() {
    static const Ledger led = build_standard_ledger();
    return led;
}

}  // namespace hodgecalc
