#include "hodgecalc/catalog.hpp"

namespace hodgecalc {

namespace {

constexpr int kMbarMin = 2, kMbarMax = 8;
constexpr int kHbarMin = 2, kHbarMax = 5;
constexpr int kHurwitzMin = 2, kHurwitzMax = 8;
constexpr int kModelMin = 2, kModelMax = 6;

std::string delta_name(int i) { return "delta" + std::to_string(i); }
std::string zeta_name(int i) { return "zeta" + std::to_string(i); }
std::string Delta_name(int j) { return "Delta" + std::to_string(j); }

FormalClass marked_delta_on(const Space* m, int g, int j, bool plus) {
    FormalClass c(m);
    c.add_term(Delta_name(j) + (plus ? "p" : "m"), Rational(1));  // aliases fold j = g+1
    (void)g;
    return c;
}

FormalClass lambda_on(const Space* u, int g) {
    FormalClass c(u);
    for (int i = 0; 2 * i + 2 <= g + 1; ++i)
        c.add_term(Delta_name(2 * i + 2), Rational((i + 1) * (g - i), 2 * (2 * g + 1)));
    for (int i = 1; 2 * i + 1 <= g + 1; ++i)
        c.add_term(Delta_name(2 * i + 1), Rational(i * (g - i), 2 * g + 1));
    return c;
}

FormalClass psi_on(const Space* m, int g) {
    FormalClass c(m);
    const long gg = g, q = gg * (2 * gg + 1);
    for (int i = 0; 2 * i + 2 <= g + 1; ++i) {
        c += Rational((gg - i) * (2 * gg - 2 * i - 1), q) * marked_delta_on(m, g, 2 * i + 2, true);
        c += Rational((i + 1) * (2 * i + 1), q) * marked_delta_on(m, g, 2 * i + 2, false);
    }
    for (int i = 1; 2 * i + 1 <= g + 1; ++i) {
        c += Rational(2 * (gg - i) * (2 * gg - 2 * i + 1), q) * marked_delta_on(m, g, 2 * i + 1, true);
        c += Rational(2 * i * (2 * i + 1), q) * marked_delta_on(m, g, 2 * i + 1, false);
    }
    return c;
}

FormalClass psi_total_on(const Space* u, int g) {
    FormalClass c(u);
    for (int i = 0; 2 * i + 2 <= g + 1; ++i)
        c.add_term(Delta_name(2 * i + 2), Rational(4 * (g - i) * (i + 1), 2 * g + 1));
    for (int i = 1; 2 * i + 1 <= g + 1; ++i)
        c.add_term(Delta_name(2 * i + 1), Rational(2 * (2 * g - 2 * i + 1) * (2 * i + 1), 2 * g + 1));
    return c;
}

FormalClass embed_marked_on(const Space* m, int g, const FormalClass& unmarked) {
    FormalClass out(m);
    for (const auto& [gen, c] : unmarked.coeffs()) {
        if (gen == "psi" || gen == Delta_name(g + 1)) {
            out.add_term(gen, c);
        } else {
            out.add_term(gen + "p", c);
            out.add_term(gen + "m", c);
        }
    }
    return out;
}

}  // namespace

struct Catalog::Impl {
    std::map<std::string, std::unique_ptr<Space>> spaces;
    std::map<int, RelationSet> kappa, full_m, cornalba, psi_marked, psi_sym, pull_sym;
    std::map<const Space*, RelationSet> defaults;
    std::map<const Space*, std::map<std::string, FormalClass>> derived;
    RelationSet empty_rels;
    std::map<std::string, FormalClass> empty_derived;

    Space* add(const std::string& name, std::vector<std::string> gens) {
        auto sp = std::make_unique<Space>(name, std::move(gens));
        Space* raw = sp.get();
        spaces.emplace(name, std::move(sp));
        return raw;
    }
};

const Catalog& Catalog::get() {
    static Catalog c;
    return c;
}

const Space* Catalog::by_name(const std::string& name) const {
    auto it = impl_->spaces.find(name);
    return it == impl_->spaces.end() ? nullptr : it->second.get();
}

std::vector<std::string> Catalog::space_names() const {
    std::vector<std::string> out;
    for (const auto& [n, s] : impl_->spaces)
        out.push_back(n);
    return out;
}

#define SPACE_GETTER(fn, prefix, suffix)                                                      \
    const Space* Catalog::fn(int g) const {                                                   \
        const Space* s = by_name(prefix + std::to_string(g) + suffix);                        \
        if (!s)                                                                               \
            throw Unsupported(std::string(#fn) + " for g=" + std::to_string(g));              \
        return s;                                                                             \
    }

SPACE_GETTER(mbar, std::string("M"), "bar")
SPACE_GETTER(hbar, std::string("H"), "bar")
SPACE_GETTER(hurwitz, std::string("H"), "2")
SPACE_GETTER(hurwitz_marked, std::string("H"), "2k")
SPACE_GETTER(model_marked, std::string("P"), "2k")
SPACE_GETTER(model_sym, std::string("P"), "2")

#undef SPACE_GETTER

#define REL_GETTER(fn, member)                                                                \
    const RelationSet& Catalog::fn(int g) const {                                             \
        auto it = impl_->member.find(g);                                                      \
        if (it == impl_->member.end())                                                        \
            throw Unsupported(std::string(#fn) + " for g=" + std::to_string(g));              \
        return it->second;                                                                    \
    }

REL_GETTER(kappa_rels, kappa)
REL_GETTER(full_rels_m, full_m)
REL_GETTER(cornalba_rels, cornalba)
REL_GETTER(psi_rels_marked, psi_marked)
REL_GETTER(psi_rels_sym, psi_sym)
REL_GETTER(pullback_rels_sym, pull_sym)

#undef REL_GETTER

const RelationSet& Catalog::default_rels(const Space* s) const {
    auto it = impl_->defaults.find(s);
    return it == impl_->defaults.end() ? impl_->empty_rels : it->second;
}

const std::map<std::string, FormalClass>& Catalog::derived(const Space* s) const {
    auto it = impl_->derived.find(s);
    return it == impl_->derived.end() ? impl_->empty_derived : it->second;
}

Catalog::Catalog() : impl_(std::make_shared<Impl>()) {
    auto& I = *impl_;

    // --- moduli of stable curves ---
    for (int g = kMbarMin; g <= kMbarMax; ++g) {
        std::vector<std::string> gens = {"lambda", "kappa1"};
        for (int i = 0; i <= g / 2; ++i)
            gens.push_back(delta_name(i));
        Space* s = I.add("M" + std::to_string(g) + "bar", gens);

        RelationSet kap(s);
        {
            FormalClass rel = s->gen("kappa1");
            rel.add_term("lambda", Rational(-12));
            for (int i = 0; i <= g / 2; ++i)
                rel.add_term(delta_name(i), Rational(1));
            kap.add(rel, "kappa1");
        }
        I.kappa[g] = kap;

        RelationSet full = kap;
        if (g == 2) {
            FormalClass mum(s);
            mum.add_term("lambda", Rational(10));
            mum.add_term("delta0", Rational(-1));
            mum.add_term("delta1", Rational(-2));
            full.add(mum, "lambda");
        }
        I.full_m[g] = full;
        I.defaults[s] = full;
    }

    // --- hyperelliptic loci with Cornalba's generators ---
    for (int g = kHbarMin; g <= kHbarMax; ++g) {
        std::vector<std::string> gens = {"lambda"};
        for (int i = 0; i <= g / 2; ++i)
            gens.push_back(delta_name(i));
        for (int i = 1; i <= (g - 1) / 2; ++i)
            gens.push_back(zeta_name(i));
        Space* s = I.add("H" + std::to_string(g) + "bar", gens);

        RelationSet rels(s);
        FormalClass rel(s);
        rel.add_term("lambda", Rational(8 * g + 4));
        rel.add_term("delta0", Rational(-g));
        for (int i = 1; i <= g / 2; ++i)
            rel.add_term(delta_name(i), Rational(-4 * i * (g - i)));
        for (int i = 1; i <= (g - 1) / 2; ++i)
            rel.add_term(zeta_name(i), Rational(-2 * (i + 1) * (g - i)));
        rels.add(rel, "lambda");
        I.cornalba[g] = rels;
        I.defaults[s] = rels;
    }

    // --- Hurwitz spaces of admissible double covers ---
    for (int g = kHurwitzMin; g <= kHurwitzMax; ++g) {
        const int top = g + 1;  // half the branch points; self-complementary index

        std::vector<std::string> ugens = {"psi"};
        for (int j = 2; j <= top; ++j)
            ugens.push_back(Delta_name(j));
        Space* u = I.add("H" + std::to_string(g) + "2", ugens);
        if (g == 3)
            u->add_alias("Delta1", "Delta3", Rational(1));

        std::vector<std::string> mgens = {"psi"};
        for (int j = 2; j < top; ++j) {
            mgens.push_back(Delta_name(j) + "p");
            mgens.push_back(Delta_name(j) + "m");
        }
        mgens.push_back(Delta_name(top));
        Space* m = I.add("H" + std::to_string(g) + "2k", mgens);
        m->add_alias(Delta_name(top) + "p", Delta_name(top), Rational(1, 2));
        m->add_alias(Delta_name(top) + "m", Delta_name(top), Rational(1, 2));

        {
            RelationSet rels(m);
            rels.add(m->gen("psi") - psi_on(m, g), "psi");
            I.psi_marked[g] = rels;
            I.defaults[m] = rels;
        }
        {
            RelationSet rels(u);
            rels.add(u->gen("psi") - psi_total_on(u, g), "psi");
            I.psi_sym[g] = rels;
            I.defaults[u] = rels;
        }
        I.derived[u]["lambda"] = lambda_on(u, g);
        I.derived[m]["lambda"] = embed_marked_on(m, g, lambda_on(u, g));
    }

    // --- good models over the Hurwitz spaces ---
    for (int g = kModelMin; g <= kModelMax; ++g) {
        const int top = g + 1;
        const bool top_odd = (top % 2 == 1);

        std::vector<std::string> mg = {"S", "omega"};
        for (int j = 2; j < top; ++j) {
            for (const char* side : {"Pi", "Pic"}) {
                mg.push_back(side + std::to_string(j) + "p");
                mg.push_back(side + std::to_string(j) + "m");
            }
            if (j % 2 == 1) {
                mg.push_back("R" + std::to_string(j) + "p");
                mg.push_back("R" + std::to_string(j) + "m");
            }
        }
        mg.push_back("Pi" + std::to_string(top) + "p");
        mg.push_back("Pi" + std::to_string(top) + "m");
        if (top_odd)
            mg.push_back("R" + std::to_string(top));
        mg.push_back("pb_psi");
        for (int j = 2; j < top; ++j) {
            mg.push_back("pb_" + Delta_name(j) + "p");
            mg.push_back("pb_" + Delta_name(j) + "m");
        }
        mg.push_back("pb_" + Delta_name(top));
        Space* pm = I.add("P" + std::to_string(g) + "2k", mg);
        // The j = g+1 stratum is self-complementary: the complement side with
        // the mark is the plain side without it, and the R halves coincide.
        pm->add_alias("Pic" + std::to_string(top) + "p", "Pi" + std::to_string(top) + "m", Rational(1));
        pm->add_alias("Pic" + std::to_string(top) + "m", "Pi" + std::to_string(top) + "p", Rational(1));
        if (top_odd) {
            pm->add_alias("R" + std::to_string(top) + "p", "R" + std::to_string(top), Rational(1, 2));
            pm->add_alias("R" + std::to_string(top) + "m", "R" + std::to_string(top), Rational(1, 2));
        }
        pm->add_alias("pb_" + Delta_name(top) + "p", "pb_" + Delta_name(top), Rational(1, 2));
        pm->add_alias("pb_" + Delta_name(top) + "m", "pb_" + Delta_name(top), Rational(1, 2));

        std::vector<std::string> sg = {"S", "omega"};
        for (int j = 2; j < top; ++j) {
            sg.push_back("Pi" + std::to_string(j));
            sg.push_back("Pic" + std::to_string(j));
            if (j % 2 == 1)
                sg.push_back("R" + std::to_string(j));
        }
        sg.push_back("Pi" + std::to_string(top));
        if (top_odd)
            sg.push_back("R" + std::to_string(top));
        for (int j = 2; j <= top; ++j)
            sg.push_back("pb_" + Delta_name(j));
        Space* ps = I.add("P" + std::to_string(g) + "2", sg);
        ps->add_alias("Pic" + std::to_string(top), "Pi" + std::to_string(top), Rational(1));

        // pb_Delta{j} -> fiber components, for pullback recognition.
        RelationSet prels(ps);
        for (int j = 2; j <= top; ++j) {
            FormalClass rel = ps->gen("pb_" + Delta_name(j));
            if (j < top) {
                rel.add_term("Pi" + std::to_string(j), Rational(-1));
                rel.add_term("Pic" + std::to_string(j), Rational(-1));
                if (j % 2 == 1)
                    rel.add_term("R" + std::to_string(j), Rational(-1));
            } else {
                rel.add_term("Pi" + std::to_string(top), Rational(-2));
                if (top_odd)
                    rel.add_term("R" + std::to_string(top), Rational(-1));
            }
            prels.add(rel, "pb_" + Delta_name(j));
        }
        I.pull_sym[g] = prels;
        I.defaults[ps] = prels;
    }
}

// ---- named classes -------------------------------------------------------

FormalClass hurwitz_lambda(int g) { return lambda_on(Catalog::get().hurwitz(g), g); }

FormalClass hurwitz_psi(int g) { return psi_on(Catalog::get().hurwitz_marked(g), g); }

FormalClass hurwitz_psi_total(int g) { return psi_total_on(Catalog::get().hurwitz(g), g); }

FormalClass kappa1_class(int g) {
    const Space* s = Catalog::get().mbar(g);
    FormalClass c(s);
    c.add_term("lambda", Rational(12));
    for (int i = 0; i <= g / 2; ++i)
        c.add_term(delta_name(i), Rational(-1));
    return c;
}

FormalClass cornalba_lambda(int g) {
    const Space* s = Catalog::get().hbar(g);
    FormalClass c(s);
    const Rational q(1, 8 * g + 4);
    c.add_term("delta0", Rational(g) * q);
    for (int i = 1; i <= g / 2; ++i)
        c.add_term(delta_name(i), Rational(4 * i * (g - i)) * q);
    for (int i = 1; i <= (g - 1) / 2; ++i)
        c.add_term(zeta_name(i), Rational(2 * (i + 1) * (g - i)) * q);
    return c;
}

FormalClass hyperelliptic_class_m3() {
    const Space* s = Catalog::get().mbar(3);
    FormalClass c(s);
    c.add_term("lambda", Rational(9));
    c.add_term("delta0", Rational(-1));
    c.add_term("delta1", Rational(-3));
    return c;
}

FormalClass mumford_relation_m2() {
    const Space* s = Catalog::get().mbar(2);
    FormalClass c(s);
    c.add_term("lambda", Rational(10));
    c.add_term("delta0", Rational(-1));
    c.add_term("delta1", Rational(-2));
    return c;
}

FormalClass c1_ek(int g, int k) {
    const Space* s = Catalog::get().mbar(g);
    FormalClass c(s);
    c.add_term("lambda", Rational(1));
    c += Rational(k * (k - 1), 2) * kappa1_class(g);
    return c;
}

FormalClass known_class(const std::string& name, int g, int k) {
    if (name == "hurwitz_lambda")
        return hurwitz_lambda(g);
    if (name == "hurwitz_psi")
        return hurwitz_psi(g);
    if (name == "hurwitz_psi_total")
        return hurwitz_psi_total(g);
    if (name == "kappa1")
        return kappa1_class(g);
    if (name == "cornalba_lambda")
        return cornalba_lambda(g);
    if (name == "hyperelliptic_class_M3")
        return hyperelliptic_class_m3();
    if (name == "mumford_relation_M2")
        return mumford_relation_m2();
    if (name == "c1_ek")
        return c1_ek(g, k);
    throw UnknownClass(name);
}

// ---- marked operations -----------------------------------------------------

FormalClass marked_delta(int g, int j, bool k_in_lambda) {
    return marked_delta_on(Catalog::get().hurwitz_marked(g), g, j, k_in_lambda);
}

FormalClass marked_delta_total(int g, int j) {
    return marked_delta(g, j, true) + marked_delta(g, j, false);
}

FormalClass unmarked_delta(int g, int j) {
    return Catalog::get().hurwitz(g)->gen(Delta_name(j));
}

FormalClass embed_in_marked(int g, const FormalClass& unmarked) {
    const Space* u = Catalog::get().hurwitz(g);
    if (unmarked.space() != u)
        throw SpaceMismatch("embed_in_marked expects a class on " + u->name());
    return embed_marked_on(Catalog::get().hurwitz_marked(g), g, unmarked);
}

FormalClass symmetrize(const FormalClass& marked, int b) {
    const Space* m = marked.space();
    if (!m)
        throw MarkMismatch("symmetrize on an empty class");
    int g = (b - 2) / 2;
    if (b != 2 * g + 2 || Catalog::get().hurwitz_marked(g) != m)
        throw MarkMismatch("symmetrize expects a class on H" + std::to_string(g) +
                           "2k with b = 2g+2, got space " + m->name());
    const Space* u = Catalog::get().hurwitz(g);
    FormalClass out(u);
    for (const auto& [gen, c] : marked.coeffs()) {
        if (gen == "psi") {
            out.add_term("psi", c);
        } else if (gen == Delta_name(g + 1)) {
            out.add_term(gen, Rational(b) * c);
        } else {
            int j = std::stoi(gen.substr(5, gen.size() - 6));
            bool plus = gen.back() == 'p';
            out.add_term(Delta_name(j), Rational(plus ? j : b - j) * c);
        }
    }
    return out;
}

FormalClass collapse_marked(const FormalClass& marked) {
    const Space* m = marked.space();
    if (!m)
        throw MarkMismatch("collapse_marked on an empty class");
    const std::string& n = m->name();
    if (n.size() < 4 || n.front() != 'H' || n.back() != 'k')
        throw MarkMismatch("collapse_marked expects a marked Hurwitz class, got " + n);
    int g = std::stoi(n.substr(1, n.size() - 3));
    FormalClass c = normal_form(marked, Catalog::get().psi_rels_marked(g));
    const Space* u = Catalog::get().hurwitz(g);
    FormalClass out(u);
    for (int j = 2; j <= g; ++j) {
        Rational p = c.coeff(Delta_name(j) + "p"), q = c.coeff(Delta_name(j) + "m");
        if (p != q)
            throw NotMarkIndependent("Delta" + std::to_string(j) + ": k+ coefficient " + p.str() +
                                     " vs k- coefficient " + q.str());
        out.add_term(Delta_name(j), p);
    }
    out.add_term(Delta_name(g + 1), c.coeff(Delta_name(g + 1)));
    return out;
}

FormalClass boundary_pullback(const FormalClass& c, int g) {
    if (g != 2 && g != 3)
        throw Unsupported("boundary_pullback only for genus 2 and 3");
    if (c.space() != Catalog::get().mbar(g))
        throw SpaceMismatch("boundary_pullback expects a class on M" + std::to_string(g) + "bar");
    FormalClass out = Catalog::get().hurwitz(g)->zero();
    for (const auto& [gen, a] : c.coeffs()) {
        if (gen == "lambda") {
            out += a * hurwitz_lambda(g);
        } else if (gen == "delta0") {
            out.add_term("Delta2", Rational(2) * a);
            if (g == 3)
                out.add_term("Delta4", Rational(2) * a);
        } else if (gen == "delta1") {
            out.add_term("Delta3", a);
        } else {
            throw Unsupported("boundary_pullback of generator " + gen);
        }
    }
    return out;
}

FormalClass hbar_to_hurwitz_g3(const FormalClass& c) {
    if (c.space() != Catalog::get().hbar(3))
        throw SpaceMismatch("hbar_to_hurwitz_g3 expects a class on H3bar");
    FormalClass out = Catalog::get().hurwitz(3)->zero();
    for (const auto& [gen, a] : c.coeffs()) {
        if (gen == "lambda")
            out += a * hurwitz_lambda(3);
        else if (gen == "delta0")
            out.add_term("Delta2", Rational(2) * a);
        else if (gen == "delta1")
            out.add_term("Delta3", a);
        else if (gen == "zeta1")
            out.add_term("Delta4", a);
        else
            throw Unsupported("hbar_to_hurwitz_g3 of generator " + gen);
    }
    return out;
}

}  // namespace hodgecalc
