#include "hodgecalc/plethysm.hpp"

#include <algorithm>
#include <sstream>

namespace hodgecalc {

long GL2Rep::dimension() const {
    long d = 0;
    for (const auto& [a, b] : summands)
        d += a + 1;
    return d;
}

std::string GL2Rep::str() const {
    if (summands.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < summands.size(); ++i) {
        if (i)
            os << " + ";
        os << "W(" << summands[i].first << "," << summands[i].second << ")";
    }
    return os.str();
}

GL2Rep sym_sym2(long n) {
    if (n < 0)
        throw Unsupported("sym_sym2 of negative power");
    GL2Rep rep;
    long dim = 0;
    for (long t = 0; 2 * t <= n; ++t) {
        rep.summands.push_back({2 * n - 4 * t, 2 * t});
        dim += 2 * n - 4 * t + 1;
    }
    if (dim != (n + 1) * (n + 2) / 2)
        throw CalcError("sym_sym2 dimension identity failed");
    return rep;
}

HyperellipticPullback hyperelliptic_pullback_weight(const WeightTuple& w, int g) {
    HyperellipticPullback out;
    if (w.is_scalar()) {
        const long k = w.parts[0];
        out.scalar = true;
        if (g == 3)
            out.invariant_degree = igusa_invariant_degree(k);
        else if (g % 2 == 0)
            out.invariant_degree = Rational(k * (g / 2));  // det(W)^{gk/2} twist
        else
            out.invariant_degree = Rational(k * g);
        return out;
    }
    if (g == 2) {
        // E pulls back to W_{1,0} and det(E) to det(W); Sym^j is irreducible.
        if (w.parts.size() != 2)
            throw Unsupported("genus-2 weights are pairs");
        out.rep.summands.push_back({w.parts[0], w.parts[1]});
        return out;
    }
    if (g == 3) {
        if (w.parts.size() != 3 || w.parts[1] != 0)
            throw Unsupported("only Sym^j(E) x det^k weights pull back here");
        const long j = w.parts[0], k = w.parts[2];
        // E -> W_{2,0}, det(E) -> det(W)^3.
        out.rep = sym_sym2(j);
        for (auto& [a, b] : out.rep.summands)
            b += 3 * k;
        return out;
    }
    throw Unsupported("hyperelliptic pullback of vector weights at genus " + std::to_string(g));
}

Rational igusa_invariant_degree(long k) { return Rational(3 * k, 2); }

long octic_half_twist(long k) {
    if (k % 2 != 0)
        throw ParityError("det(W)^{k/2} twist needs even k, got " + std::to_string(k));
    return k / 2;
}

CovariantInfo covariant_bidegree(const WeightTuple& w) {
    CovariantInfo out;
    if (w.genus != 3)
        throw Unsupported("covariant table is for genus 3");
    long j, k;
    if (w.is_scalar()) {
        j = 0;
        k = w.parts[0];
    } else if (w.parts.size() == 3 && w.parts[1] == 0) {
        j = w.parts[0];
        k = w.parts[2];
    } else {
        throw Unsupported("covariant table entry " + w.str());
    }
    out.order = 2 * j;
    out.coefficient_degree = igusa_invariant_degree(k);
    if (j == 4 && k == 8)
        out.identification = "f(8,-2) * disc";
    else if (j == 2 && k == 4)
        out.identification = "f(4,-1) * disc";
    else if (j == 0 && k == 14)
        out.identification = "disc";
    else
        throw Unsupported("no identified covariant for weight " + w.str());
    return out;
}

long discriminant_weight(int g, long k) {
    if (g < 2)
        throw Unsupported("discriminant_weight needs g >= 2");
    // A quadratic form valued in det^k on a rank-g bundle has determinant
    // valued in det^2 x det^{gk}.
    return g * k + 2;
}

}  // namespace hodgecalc
