#include "hodgecalc/incidence.hpp"

namespace hodgecalc {

namespace {

std::string delta_name(int i) { return "delta" + std::to_string(i); }

FormalClass epsilon_class(int g, int k) {
    FormalClass eps = Catalog::get().mbar(g)->zero();
    if (k == 1)
        for (int i = 1; i <= g / 2; ++i)
            eps.add_term(delta_name(i), Rational(1));
    return eps;
}

}  // namespace

CurveClass curve_class(int g, int k) {
    if (g < 2 || k < 1)
        throw Unsupported("curve_class needs g >= 2, k >= 1");
    const Space* s = Catalog::get().mbar(g);
    CurveClass out;
    out.g = g;
    out.k = k;
    out.beta0 = Rational(2 * k * (g - 1));
    FormalClass b(s);
    b.add_term("kappa1", Rational(static_cast<long>(k) * k));
    b -= Rational(2 * k * (g - 1)) * c1_ek(g, k);
    b -= epsilon_class(g, k);
    out.beta1_kappa = b;
    out.beta1 = normal_form(b, Catalog::get().kappa_rels(g));
    return out;
}

HClass gamma_push(const HClass& c, GammaDirection dir) {
    const BundleDescriptor& d = c.desc();
    const int r = d.rank;
    if (dir == GammaDirection::Forward) {
        if (d.dual)
            throw Unsupported("forward correspondence starts on P(E_k)");
        BundleDescriptor dual = d;
        dual.dual = true;
        HClass out(dual);
        for (const auto& [i, v] : c.coeffs()) {
            if (i <= r - 3) {
                continue;
            } else if (i == r - 2) {
                out.add(0, v);
            } else if (i == r - 1) {
                // gamma(h^{r-1} u^*x) = (hdual + udual^* c1) udual^*x; the
                // x * c1 part would be codimension 2 and is not needed here.
                if (!v.base.is_zero())
                    throw Unsupported("forward correspondence of a base-coefficient top term");
                out.add(1, {v.unit, d.base->zero()});
                out.add(0, {Rational(0), v.unit * d.c1});
            } else {
                throw NeedsChernReduction("gamma at exponent " + std::to_string(i));
            }
        }
        return out;
    }

    if (!d.dual)
        throw Unsupported("reverse correspondence starts on the dual bundle");
    if (r != 3)
        throw Unsupported("reverse correspondence only at rank 3");
    BundleDescriptor plain = d;
    plain.dual = false;
    HClass out(plain);
    for (const auto& [i, v] : c.coeffs()) {
        if (i == 2) {
            if (!v.base.is_zero())
                throw Unsupported("reverse correspondence of hdual^2 with base coefficient");
            out.add(1, {v.unit, d.base->zero()});
            out.add(0, {Rational(0), -v.unit * d.c1});  // c1 = lambda here
        } else if (i == 1) {
            if (!v.unit.is_zero())
                throw Unsupported("reverse correspondence of a bare hdual term");
            out.add(0, {Rational(0), v.base});
        }
        // i == 0: pulled back from the base, dies.
    }
    return out;
}

namespace {

// gamma(phi_* w1) with w1 = C(g+1,2) omega - pi^* lambda:
//   C(g+1,2)/k * beta0 * (hdual + c1(E_k)) + u^*(C(g+1,2)/k beta1 - lambda beta0).
HClass gt_w1_image(const CurveClass& cc, const BundleDescriptor& dual) {
    const Rational w1_top = binomial(cc.g + 1, 2) / Rational(cc.k);
    HClass out(dual);
    out.add(1, {w1_top * cc.beta0, dual.base->zero()});
    FormalClass base = (w1_top * cc.beta0) * dual.c1;
    base += w1_top * cc.beta1;
    FormalClass lam = dual.base->gen("lambda");
    base -= cc.beta0 * lam;
    out.add(0, {Rational(0), base});
    return out;
}

// gamma(phi_* w2): both fiber components over delta_i contribute, the genus-i
// piece with Cuckierman coefficient C(g-i+1,2) and k-canonical degree (2i-1)k.
FormalClass gt_w2_image(int g, int k, const Space* base) {
    FormalClass out(base);
    for (int i = 1; i <= g / 2; ++i) {
        long fold = static_cast<long>(g - i) * (g - i + 1) * (2 * i - 1) +
                    static_cast<long>(i) * (i + 1) * (2 * (g - i) - 1);
        out.add_term(delta_name(i), Rational(k) * Rational(fold, 2));
    }
    return out;
}

}  // namespace

PipelineResult gheorghita_tarasca(int g, int k) {
    if (g < 2 || k < 1)
        throw Unsupported("gheorghita_tarasca needs g >= 2, k >= 1");
    BundleDescriptor dual = hodge_bundle(g, k, true);
    CurveClass cc = curve_class(g, k);

    HClass pipeline = gt_w1_image(cc, dual);
    pipeline -= HClass::pullback(dual, gt_w2_image(g, k, dual.base));

    if (k == 1) {
        // The e_k corrections in beta1 do not account for the exceptional
        // curves of the semistable model; over delta_i (i >= 1) the class of
        // the doubled image curve T satisfies
        //   2[T]|_{delta_i} = C(g+1,2) (h phi_*[1] + phi_* r) - (w2 terms),
        // with gamma(h phi_*[1]) -> 2 beta1|_{delta_i}, gamma(phi_* r) -> 2,
        // and per-component degrees (2i-2), (2g-2i-2) entering the w2 fold.
        FormalClass corr(dual.base);
        for (int i = 1; i <= g / 2; ++i) {
            Rational b1 = cc.beta1.coeff(delta_name(i));
            long fold = static_cast<long>(g - i) * (g - i + 1) * (2 * i - 1) +
                        static_cast<long>(i) * (i + 1) * (2 * (g - i) - 1);
            Rational coeff = (binomial(g + 1, 2) * (Rational(2) * b1 + Rational(2)) -
                              Rational(fold)) / Rational(2);
            corr.add_term(delta_name(i), coeff);
        }
        HClass fixed(dual);
        fixed.add(1, pipeline.coeff(1));
        FormalClass base = pipeline.coeff(0).base;
        for (int i = 1; i <= g / 2; ++i)
            base.add_term(delta_name(i), -base.coeff(delta_name(i)));
        base += corr;
        fixed.add(0, {Rational(0), base});
        pipeline = fixed;
    }

    HClass closed(dual);
    closed.add(1, {Rational(static_cast<long>(g) * (g * g - 1)), dual.base->zero()});
    FormalClass base(dual.base);
    base.add_term("lambda", Rational(2L * k * (3L * g * g + 2 * g + 1)));
    base.add_term("delta0", -Rational(k) * binomial(g + 1, 2));
    for (int i = 1; i <= g / 2; ++i)
        base.add_term(delta_name(i), Rational(-static_cast<long>(k) * i * (g - i) * (g + 3)));
    closed.add(0, {Rational(0), base});

    return {pipeline, closed, pipeline == closed};
}

PipelineResult ksz_class(int g, int k) {
    if (k < 2 || (g == 2 && k == 2))
        throw Unsupported("ksz_class needs k >= 2 and (g,k) != (2,2)");
    BundleDescriptor bundle = hodge_bundle(g, k, false);
    BundleDescriptor dual = hodge_bundle(g, k, true);
    CurveClass cc = curve_class(g, k);
    const int r = bundle.rank;

    HClass curve(bundle);
    curve.add(r - 2, {cc.beta0, bundle.base->zero()});
    curve.add(r - 3, {Rational(0), cc.beta1});

    // k [A] = k hdual . gamma([curve]) + (k+1) gamma(h . [curve]).
    HClass gamma_curve = gamma_push(curve, GammaDirection::Forward);
    if (gamma_curve.max_exp() != 0 || !gamma_curve.coeff(0).pure_unit())
        throw CalcError("ksz_class: gamma of the curve class is not a multiple of the fiber");
    Rational deg = gamma_curve.coeff(0).unit;

    HClass h_curve = mul(HClass::h_power(bundle, 1), curve);
    HClass gamma_h_curve = gamma_push(h_curve, GammaDirection::Forward);

    HClass pipeline(dual);
    pipeline.add(1, {Rational(k) * deg, dual.base->zero()});
    pipeline += Rational(k + 1) * gamma_h_curve;
    pipeline *= Rational(1, k);

    HClass closed(dual);
    closed.add(1, {Rational((4L * k + 2) * (g - 1)), dual.base->zero()});
    FormalClass base = Rational(static_cast<long>(k) * (k + 1)) *
                       normal_form(kappa1_class(g), Catalog::get().kappa_rels(g));
    closed.add(0, {Rational(0), base});

    HClass p_nf(dual), c_nf(dual);
    p_nf.add(1, pipeline.coeff(1));
    p_nf.add(0, {Rational(0), normal_form(pipeline.coeff(0).base, Catalog::get().kappa_rels(g))});
    c_nf = closed;

    return {p_nf, c_nf, p_nf == c_nf};
}

HClass equianharmonic_dual_class() {
    BundleDescriptor dual = hodge_bundle(3, 1, true);
    FormalClass a(dual.base);
    a.add_term("lambda", Rational(20));
    a.add_term("delta0", Rational(-2));
    a.add_term("delta1", Rational(-4));
    return HClass::divisor(dual, Rational(4), a);
}

HClass jinvariant_dual_class() {
    BundleDescriptor dual = hodge_bundle(3, 1, true);
    FormalClass a(dual.base);
    a.add_term("lambda", Rational(30));
    a.add_term("delta0", Rational(-3));
    a.add_term("delta1", Rational(-6));
    return HClass::divisor(dual, Rational(6), a);
}

HypertangentResult hypertangent_class() {
    HypertangentResult out;
    out.product = mul(equianharmonic_dual_class(), jinvariant_dual_class());
    out.intermediate = gamma_push(out.product, GammaDirection::Reverse);
    // On the double-conic locus the two concomitants become q^2 and q^3, so
    // the intersection carries the hyperelliptic locus with multiplicity 12.
    out.final = out.intermediate;
    out.final -= HClass::pullback(out.intermediate.desc(), Rational(12) * hyperelliptic_class_m3());
    return out;
}

}  // namespace hodgecalc
