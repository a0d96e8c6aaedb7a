#include "hodgecalc/goodmodel.hpp"

#include "hodgecalc/incidence.hpp"

namespace hodgecalc {

namespace {

std::string Delta_name(int j) { return "Delta" + std::to_string(j); }

enum class Kind { Section, Omega, Pi, Pic, R, Pull };

struct GenInfo {
    Kind kind = Kind::Pull;
    int j = 0;
    bool plus = false;   // mark on the Lambda side (meaningless for top R)
    bool marked = true;  // false for the unmarked top-index generators
    std::string payload; // pullback payload generator name
};

GenInfo parse_gen(const std::string& name, int g) {
    const int top = g + 1;
    GenInfo info;
    if (name == "S") {
        info.kind = Kind::Section;
        return info;
    }
    if (name == "omega") {
        info.kind = Kind::Omega;
        return info;
    }
    if (name.rfind("pb_", 0) == 0) {
        info.kind = Kind::Pull;
        info.payload = name.substr(3);
        return info;
    }
    size_t pos = 0;
    if (name.rfind("Pic", 0) == 0) {
        info.kind = Kind::Pic;
        pos = 3;
    } else if (name.rfind("Pi", 0) == 0) {
        info.kind = Kind::Pi;
        pos = 2;
    } else if (name.rfind("R", 0) == 0) {
        info.kind = Kind::R;
        pos = 1;
    } else {
        throw CalcError("unrecognized model generator " + name);
    }
    size_t digits = pos;
    while (digits < name.size() && std::isdigit(name[digits]))
        ++digits;
    info.j = std::stoi(name.substr(pos, digits - pos));
    if (digits < name.size()) {
        info.plus = name[digits] == 'p';
        info.marked = true;
    } else {
        info.marked = false;  // top-index R, or any symmetric-space generator
    }
    if (info.j < 2 || info.j > top)
        throw CalcError("model generator " + name + " out of range");
    return info;
}

int genus_of_model(const Space* s) {
    const std::string& n = s->name();
    if (n.size() < 4 || n.front() != 'P')
        throw SpaceMismatch("expected a good-model space, got " + n);
    return std::stoi(n.substr(1, n.size() - (n.back() == 'k' ? 3 : 2)));
}

bool is_marked_model(const Space* s) { return s->name().back() == 'k'; }

// Delta{j} refined by the mark, as a class on H{g}2k. At j = g+1 both
// refinements equal half of the unmarked generator.
FormalClass md(int g, int j, bool plus) { return marked_delta(g, j, plus); }

FormalClass md_total(int g, int j) { return marked_delta_total(g, j); }

// pi_* of the product of two single generators.
FormalClass pair_push(int g, const GenInfo& a, const GenInfo& b) {
    const Space* base = Catalog::get().hurwitz_marked(g);
    const int top = g + 1;
    auto zero = [&] { return base->zero(); };
    auto payload_class = [&](const GenInfo& p) {
        FormalClass c(base);
        c.add_term(p.payload, Rational(1));
        return c;
    };

    // Normalize order: Section < Omega < Pi < Pic < R < Pull.
    const GenInfo* x = &a;
    const GenInfo* y = &b;
    if (static_cast<int>(a.kind) > static_cast<int>(b.kind))
        std::swap(x, y);

    switch (x->kind) {
    case Kind::Section:
        switch (y->kind) {
        case Kind::Section:
            return -Rational(1) * base->gen("psi");
        case Kind::Omega:
            return base->gen("psi");
        case Kind::Pi:
            // the marked section passes through the Lambda side iff the mark is there
            return y->plus ? md(g, y->j, true) : zero();
        case Kind::Pic:
            return !y->plus ? md(g, y->j, false) : zero();
        case Kind::R:
            return zero();
        case Kind::Pull:
            return payload_class(*y);
        }
        break;
    case Kind::Omega:
        switch (y->kind) {
        case Kind::Omega:
            throw CalcError("no pushforward rule for omega * omega");
        case Kind::Pi:
        case Kind::Pic:
            return -Rational(1) * md(g, y->j, y->plus);  // -Delta on the mark side
        case Kind::R:
            return zero();
        case Kind::Pull:
            return Rational(-2) * payload_class(*y);
        default:
            break;
        }
        break;
    case Kind::Pi:
    case Kind::Pic:
    case Kind::R:
        if (y->kind == Kind::Pull)
            return zero();
        if (x->j != y->j)
            return zero();  // distinct strata are disjoint
        if (x->j == top) {
            // Self-complementary stratum; Pi{top}p / Pi{top}m are the two
            // sides, R{top} the unmarked chain of exceptional curves.
            const FormalClass dt = md_total(g, top);
            if (x->kind == Kind::Pi && y->kind == Kind::Pi) {
                if (x->plus == y->plus)
                    return -Rational(1, 4) * dt;
                return (top % 2 == 0) ? Rational(1, 4) * dt : zero();
            }
            if (x->kind == Kind::R && y->kind == Kind::R)
                return Rational(-2) * dt;
            return Rational(1, 2) * dt;  // Pi x R
        }
        if (x->plus != y->plus)
            return zero();
        {
            const bool even = (x->j % 2 == 0);
            const FormalClass d = md(g, x->j, x->plus);
            if (x->kind == y->kind)
                return (x->kind == Kind::R) ? Rational(-2) * d : -Rational(1) * d;
            if (x->kind == Kind::Pi && y->kind == Kind::Pic)
                return even ? d : zero();
            return d;  // Pi x R or Pic x R, one node each
        }
    case Kind::Pull:
        return zero();  // pull * pull lands in codimension 2 of the base
    }
    throw CalcError("unhandled pushforward pairing");
}

}  // namespace

FormalClass model_pullback(int g, const FormalClass& base) {
    const Space* m = Catalog::get().model_marked(g);
    if (base.space() != Catalog::get().hurwitz_marked(g))
        throw SpaceMismatch("model_pullback expects a class on H" + std::to_string(g) + "2k");
    FormalClass out(m);
    for (const auto& [gen, c] : base.coeffs())
        out.add_term("pb_" + gen, c);
    return out;
}

FormalClass section_class(int g) { return Catalog::get().model_marked(g)->gen("S"); }

FormalClass omega_class(int g) { return Catalog::get().model_marked(g)->gen("omega"); }

FormalClass r_exceptional(int g) {
    const Space* m = Catalog::get().model_marked(g);
    FormalClass out(m);
    for (int j = 3; j <= g + 1; j += 2) {
        if (j < g + 1) {
            out.add_term("R" + std::to_string(j) + "p", Rational(1));
            out.add_term("R" + std::to_string(j) + "m", Rational(1));
        } else {
            out.add_term("R" + std::to_string(j), Rational(1));
        }
    }
    return out;
}

FormalClass pi_side_total(int g, int j) {
    const Space* m = Catalog::get().model_marked(g);
    FormalClass out(m);
    out.add_term("Pi" + std::to_string(j) + "p", Rational(1));
    out.add_term("Pi" + std::to_string(j) + "m", Rational(1));
    return out;
}

FormalClass xi_class(int g) {
    const Space* m = Catalog::get().model_marked(g);
    FormalClass out(m);
    for (int i = 0; 2 * i + 2 <= g + 1; ++i) {
        const std::string j = std::to_string(2 * i + 2);
        out.add_term("Pi" + j + "p", Rational(g - 1 - i));
        out.add_term("Pic" + j + "m", Rational(i));
    }
    for (int i = 1; 2 * i + 1 <= g + 1; ++i) {
        const std::string j = std::to_string(2 * i + 1);
        out.add_term("Pi" + j + "p", Rational(g - i - 1));
        out.add_term("Pic" + j + "p", Rational(-(g - i)));
        out.add_term("Pic" + j + "m", Rational(i - 1));
        out.add_term("Pi" + j + "m", Rational(-i));
    }
    return out;
}

FormalClass d_class(int g) {
    FormalClass out = xi_class(g);
    out.add_term("S", Rational(g - 1));
    return out;
}

FormalClass e_class(int g) {
    const Space* h = Catalog::get().hurwitz_marked(g);
    FormalClass out(h);
    out.add_term("psi", Rational(2 * g - 1, 2));
    for (int i = 0; 2 * i + 2 <= g + 1; ++i) {
        out -= Rational(g - i - 1) * md(g, 2 * i + 2, true);
        out -= Rational(i) * md(g, 2 * i + 2, false);
    }
    for (int i = 1; 2 * i + 1 <= g + 1; ++i) {
        out -= Rational(g - i - 1) * md(g, 2 * i + 1, true);
        out -= Rational(i - 1) * md(g, 2 * i + 1, false);
    }
    return out;
}

FormalClass m_class(int g) { return d_class(g) + model_pullback(g, e_class(g)); }

FormalClass n_class(int g) { return m_class(g) - r_exceptional(g); }

FormalClass u_class_g3() {
    FormalClass v = Rational(3, 2) * Catalog::get().hurwitz_marked(3)->gen("psi");
    v -= md(3, 2, true);
    v -= md(3, 3, true);
    return collapse_marked(v);
}

FormalClass named_divisor(int g, const std::string& name) {
    if (name == "Xi_k")
        return xi_class(g);
    if (name == "D_k")
        return d_class(g);
    if (name == "E_k")
        return e_class(g);
    if (name == "M")
        return m_class(g);
    if (name == "N")
        return n_class(g);
    if (name == "U") {
        if (g != 3)
            throw UnknownDivisor("U is only defined at genus 3");
        return u_class_g3();
    }
    throw UnknownDivisor(name);
}

FormalClass push_quadratic(const FormalClass& a, const FormalClass& b) {
    const Space* s = a.space() ? a.space() : b.space();
    if (!s)
        throw CalcError("push_quadratic of empty classes");
    if ((a.space() && a.space() != s) || (b.space() && b.space() != s))
        throw SpaceMismatch("push_quadratic on mixed spaces");
    if (!is_marked_model(s))
        throw SpaceMismatch("push_quadratic expects classes on a marked model P{g}2k");
    const int g = genus_of_model(s);
    FormalClass out = Catalog::get().hurwitz_marked(g)->zero();
    for (const auto& [ga, ca] : a.coeffs()) {
        GenInfo ia = parse_gen(ga, g);
        for (const auto& [gb, cb] : b.coeffs()) {
            GenInfo ib = parse_gen(gb, g);
            out += (ca * cb) * pair_push(g, ia, ib);
        }
    }
    return out;
}

FormalClass grr_c1(const FormalClass& line, const FormalClass& r1_correction) {
    const int g = genus_of_model(line.space());
    FormalClass half = push_quadratic(line, line) - push_quadratic(line, omega_class(g));
    half *= Rational(1, 2);
    if (!r1_correction.is_zero())
        half += r1_correction;
    return half;
}

FormalClass section_restrict(const FormalClass& c) {
    const int g = genus_of_model(c.space());
    return push_quadratic(section_class(g), c);
}

std::optional<FormalClass> express_as_pullback(const FormalClass& c) {
    const Space* s = c.space();
    if (!s || is_marked_model(s))
        throw SpaceMismatch("express_as_pullback expects a class on a symmetric model P{g}2");
    const int g = genus_of_model(s);
    FormalClass nf = normal_form(c, Catalog::get().pullback_rels_sym(g));
    for (const auto& [gen, coeff] : nf.coeffs())
        if (gen == "S" || gen == "omega")
            throw CalcError("express_as_pullback: class has a " + gen + " part");
    std::vector<FormalClass> basis;
    for (int j = 2; j <= g + 1; ++j)
        basis.push_back(normal_form(s->gen("pb_" + Delta_name(j)),
                                    Catalog::get().pullback_rels_sym(g)));
    auto sol = solve_in_span(nf, basis);
    if (!sol)
        return std::nullopt;
    FormalClass out = Catalog::get().hurwitz(g)->zero();
    for (int j = 2; j <= g + 1; ++j)
        out.add_term(Delta_name(j), (*sol)[static_cast<size_t>(j - 2)]);
    return out;
}

FormalClass model_symmetrize(const FormalClass& marked) {
    const Space* s = marked.space();
    if (!s || !is_marked_model(s))
        throw SpaceMismatch("model_symmetrize expects a class on P{g}2k");
    const int g = genus_of_model(s);
    const int b = 2 * g + 2, top = g + 1;
    const Space* sym = Catalog::get().model_sym(g);
    FormalClass out(sym);
    for (const auto& [gen, c] : marked.coeffs()) {
        GenInfo info = parse_gen(gen, g);
        switch (info.kind) {
        case Kind::Section:
            out.add_term("S", c);  // the sections sum to the total section class
            break;
        case Kind::Omega:
            out.add_term("omega", Rational(b) * c);
            break;
        case Kind::Pi:
        case Kind::Pic: {
            std::string base = (info.kind == Kind::Pi ? "Pi" : "Pic") + std::to_string(info.j);
            Rational count = info.j == top ? Rational(b / 2)
                                           : Rational(info.plus ? info.j : b - info.j);
            out.add_term(base, count * c);
            break;
        }
        case Kind::R: {
            std::string base = "R" + std::to_string(info.j);
            Rational count = info.marked ? Rational(info.plus ? info.j : b - info.j)
                                         : Rational(b);
            out.add_term(base, count * c);
            break;
        }
        case Kind::Pull: {
            if (info.payload == "psi") {
                // sum over marks of pi^* psi_k is pi^* of the total psi class
                for (const auto& [dg, dc] : hurwitz_psi_total(g).coeffs())
                    out.add_term("pb_" + dg, c * dc);
            } else {
                GenInfo p;  // payload is Delta{j}(p|m) or the top Delta{j}
                std::string name = info.payload;
                size_t digits = 5;
                while (digits < name.size() && std::isdigit(name[digits]))
                    ++digits;
                int j = std::stoi(name.substr(5, digits - 5));
                Rational count;
                if (digits == name.size())
                    count = Rational(b);
                else
                    count = Rational(name[digits] == 'p' ? j : b - j);
                out.add_term("pb_" + Delta_name(j), count * c);
            }
            break;
        }
        }
    }
    return out;
}

std::vector<Rational> fiber_degrees(const FormalClass& c, int j0, bool k_in_lambda) {
    const Space* s = c.space();
    if (!s || !is_marked_model(s))
        throw SpaceMismatch("fiber_degrees expects a class on P{g}2k");
    const int g = genus_of_model(s);
    const int top = g + 1;
    if (j0 == 0) {
        Rational d(0);
        for (const auto& [gen, coeff] : c.coeffs()) {
            GenInfo info = parse_gen(gen, g);
            if (info.kind == Kind::Section)
                d += coeff;
            else if (info.kind == Kind::Omega)
                d += Rational(-2) * coeff;
        }
        return {d};
    }
    if (j0 < 2 || j0 > top)
        throw Unsupported("no boundary stratum of index " + std::to_string(j0));
    if (j0 == top)
        k_in_lambda = true;  // the two sides are exchanged by complementation

    const bool odd = (j0 % 2 == 1);
    const size_t n = odd ? 3 : 2;
    const size_t side_a = 0, side_b = n - 1;  // Lambda side, complement side
    std::vector<Rational> deg(n, Rational(0));
    auto bump = [&](size_t i, const Rational& v) { deg[i] += v; };

    for (const auto& [gen, coeff] : c.coeffs()) {
        GenInfo info = parse_gen(gen, g);
        switch (info.kind) {
        case Kind::Section:
            bump(k_in_lambda ? side_a : side_b, coeff);
            break;
        case Kind::Omega:
            bump(side_a, -coeff);
            bump(side_b, -coeff);
            break;
        case Kind::Pull:
            break;
        default: {
            if (info.j != j0)
                break;
            // A marked generator lives over this stratum only when its mark
            // condition matches; the top stratum folds both conditions.
            const Rational w = (j0 == top) ? Rational(1, 2) : Rational(1);
            bool matches = (j0 == top) || (info.plus == k_in_lambda);
            if (info.kind == Kind::R)
                matches = info.marked ? (info.plus == k_in_lambda) : true;
            if (!matches)
                break;
            // Component self-intersections: a side meets its neighbours once;
            // the exceptional chain is a (-2)-configuration.
            size_t self;
            if (info.kind == Kind::R) {
                bump(side_a, coeff);
                bump(side_b, coeff);
                bump(1, Rational(-2) * coeff);
                break;
            }
            bool on_lambda_side = (info.kind == Kind::Pi);
            if (j0 == top && info.kind == Kind::Pi)
                on_lambda_side = info.plus;  // Pi{top}m is the complement side
            self = on_lambda_side ? side_a : side_b;
            Rational cw = coeff * w;
            bump(self, -cw);
            if (odd)
                bump(1, cw);
            else
                bump(self == side_a ? side_b : side_a, cw);
            break;
        }
        }
    }
    return deg;
}

QClassResult q_class() {
    const int g = 3;
    FormalClass n = n_class(g);
    FormalClass w = -omega_class(g) + pi_side_total(g, 2) + pi_side_total(g, 3);

    // Same restriction to every fiber type: the difference is a pullback.
    for (int j : {0, 2, 3, 4}) {
        for (bool side : {true, false}) {
            if (j == 0 && !side)
                continue;
            if (fiber_degrees(n, j, side) != fiber_degrees(w, j, side))
                throw DerivationMismatch("N and -omega+Pi2+Pi3 differ on stratum " +
                                         std::to_string(j));
        }
    }

    // The pullback part, read off along the marked section; its collapse
    // certifies that it does not depend on the mark.
    FormalClass sn = section_restrict(n);
    if (sn != Rational(1, 2) * Catalog::get().hurwitz_marked(g)->gen("psi"))
        throw DerivationMismatch("sections restrict M to psi/2");
    FormalClass v = sn - section_restrict(w);
    QClassResult out;
    out.u_class = collapse_marked(v);
    if (out.u_class != u_class_g3())
        throw DerivationMismatch("pullback part of N is not U");

    out.a_class = out.u_class - hurwitz_lambda(g);
    FormalClass expected = Rational(4) * hurwitz_lambda(g);
    for (int j = 2; j <= 4; ++j)
        expected.add_term(Delta_name(j), Rational(-1));
    if (out.a_class != expected)
        throw DerivationMismatch("A differs from 4 lambda - (Delta2+Delta3+Delta4)");

    out.q = HClass::divisor(hurwitz_hodge_bundle(g), Rational(2), out.a_class);
    out.weight = weight_from_divisor(out.q, 4);
    return out;
}

Genus2Result genus2_solve() {
    const int g = 2;
    const Space* sym = Catalog::get().model_sym(g);
    const RelationSet& rels = Catalog::get().pullback_rels_sym(g);

    // phi^* O(6) = (sum over marks of D + pi^* E) - 6 R.
    FormalClass phi_o6 = model_symmetrize(m_class(g));
    phi_o6.add_term("R3", Rational(-6));
    phi_o6 = normal_form(phi_o6, rels);
    {
        FormalClass display(sym);
        display.add_term("S", Rational(1));
        display.add_term("Pi2", Rational(12, 5));
        display.add_term("Pic2", Rational(2, 5));
        display.add_term("Pi3", Rational(24, 5));
        display.add_term("R3", Rational(-3, 5));
        if (phi_o6 != display)
            throw DerivationMismatch("phi^* O(6) differs from its expected expansion");
    }

    // phi^* of the section configuration: the six branch sections, plus the
    // components blown down over Delta2 and Delta3 with their multiplicities.
    FormalClass phi_sigma(sym);
    phi_sigma.add_term("S", Rational(1));
    phi_sigma.add_term("Pi2", Rational(2));
    phi_sigma.add_term("Pi3", Rational(6));

    auto residual = express_as_pullback(phi_sigma - phi_o6);
    if (!residual)
        throw DerivationMismatch("phi^*Sigma - phi^*O(6) is not a pullback");

    Genus2Result out;
    out.residual = *residual;
    out.a = residual->coeff("Delta2") / Rational(2);  // delta0 pulls back to 2 Delta2
    out.b = residual->coeff("Delta3");                // delta1 pulls back to Delta3

    const Space* m2 = Catalog::get().mbar(2);
    FormalClass solved(m2);
    solved.add_term("delta0", out.a);
    solved.add_term("delta1", out.b);
    FormalClass paper_form(m2);
    paper_form.add_term("lambda", Rational(8));
    paper_form.add_term("delta0", Rational(-1));
    paper_form.add_term("delta1", Rational(-1));
    if (!equivalent(solved, paper_form, Catalog::get().full_rels_m(2)))
        throw DerivationMismatch("solved genus-2 class is not 8 lambda - delta0 - delta1");
    out.final_class = paper_form;
    out.branch_divisor = HClass::divisor(hodge_bundle(2), Rational(6), paper_form);
    return out;
}

HhResult hh_class() {
    const int g = 3;
    const int b = 2 * g + 2;
    HhResult out;

    FormalClass line = n_class(g) - Rational(2) * section_class(g);
    FormalClass r1 = md(g, 2, true) + md(g, 3, true);
    out.line_c1 = grr_c1(line, r1);

    FormalClass expected = e_class(g) - md(g, 3, true) - md_total(g, 3);
    if (out.line_c1 != expected)
        throw DerivationMismatch("c1 pi_*(N(-2S)) differs from -Delta3(k+) - Delta3 + E_k");

    FormalClass sum_c1 = symmetrize(out.line_c1, b);
    sum_c1 = normal_form(sum_c1, Catalog::get().psi_rels_sym(g));
    FormalClass base = -sum_c1;

    FormalClass expect_base = Rational(8) * hurwitz_lambda(g);
    expect_base.add_term("Delta2", Rational(-2));
    expect_base.add_term("Delta3", Rational(1));
    if (base != expect_base)
        throw DerivationMismatch("[H_h] base differs from 8 lambda - 2 Delta2 + Delta3");
    out.hh = HClass::divisor(hurwitz_hodge_bundle(g), Rational(8), base);

    FormalClass h_pull = boundary_pullback(hypertangent_class().final.coeff(0).base, g);
    out.h_minus_3hh = h_pull - Rational(3) * base;
    FormalClass nine = Catalog::get().hurwitz(g)->zero();
    nine.add_term("Delta3", Rational(9));
    if (out.h_minus_3hh != nine)
        throw DerivationMismatch("[H] - 3[H_h] is not 9 Delta3");
    return out;
}

}  // namespace hodgecalc
