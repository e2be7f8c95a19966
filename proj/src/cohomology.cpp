#include "curvecount/cohomology.hpp"

#include <sstream>

namespace curvecount {

RingClass RingClass::one() { return monomial({0, 0, 0}, Polynomial::constant(1)); }
RingClass RingClass::y() { return monomial({1, 0, 0}, Polynomial::constant(1)); }
RingClass RingClass::a() { return monomial({0, 1, 0}, Polynomial::constant(1)); }
RingClass RingClass::l() { return monomial({0, 0, 1}, Polynomial::constant(1)); }

RingClass RingClass::monomial(MonoKey k, Polynomial coeff) {
    RingClass r;
    r.add_term(k, coeff);
    return r;
}

void RingClass::add_term(const MonoKey& k, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, coeff);
        return;
    }
    it->second = poly_add(it->second, coeff);
    if (it->second.is_zero()) terms_.erase(it);
}

bool RingClass::is_normalized() const {
    for (const auto& [k, c] : terms_)
        if (k.aPow > 2 || k.lPow > 1) return false;
    return true;
}

Polynomial RingClass::coeff(const MonoKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Polynomial() : it->second;
}

RingClass ring_add(const RingClass& x, const RingClass& y) {
    RingClass r = x;
    for (const auto& [k, c] : y.terms()) r.add_term(k, c);
    return r;
}

RingClass ring_sub(const RingClass& x, const RingClass& y) {
    RingClass r = x;
    for (const auto& [k, c] : y.terms()) r.add_term(k, poly_neg(c));
    return r;
}

RingClass ring_mul(const RingClass& x, const RingClass& y) {
    RingClass r;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            r.add_term({kx.yPow + ky.yPow, kx.aPow + ky.aPow, kx.lPow + ky.lPow},
                       poly_mul(cx, cy));
    return r;
}

RingClass ring_scale(const RingClass& x, const Polynomial& k) {
    RingClass r;
    for (const auto& [key, c] : x.terms()) r.add_term(key, poly_mul(c, k));
    return r;
}

RingClass normalize(const RingClass& x) {
    RingClass cur = x;
    // Substitute l^2 -> -3 a l - 3 a^2; each pass lowers the top lPow.
    for (;;) {
        bool changed = false;
        RingClass next;
        for (const auto& [k, c] : cur.terms()) {
            if (k.lPow >= 2) {
                changed = true;
                next.add_term({k.yPow, k.aPow + 1, k.lPow - 1}, poly_scale(c, Rat(-3)));
                next.add_term({k.yPow, k.aPow + 2, k.lPow - 2}, poly_scale(c, Rat(-3)));
            } else {
                next.add_term(k, c);
            }
        }
        cur = std::move(next);
        if (!changed) break;
    }
    RingClass out;
    for (const auto& [k, c] : cur.terms())
        if (k.aPow <= 2) out.add_term(k, c);  // a^3 = 0
    return out;
}

RingClass generator_c1(Generator g) {
    switch (g) {
        case Generator::GammaD_dual: return RingClass::y();
        case Generator::GammaP2_dual_d:
            return RingClass::monomial({0, 1, 0}, Polynomial::variable());
        case Generator::GammaP2_dual: return RingClass::a();
        case Generator::GammaTilde_dual: return RingClass::l();
        case Generator::Quotient_dual:
            return ring_sub(RingClass::zero(),
                            ring_add(ring_scale(RingClass::a(), Polynomial::constant(3)),
                                     RingClass::l()));
    }
    throw PreconditionError("unknown generator");
}

std::string generator_name(Generator g) {
    switch (g) {
        case Generator::GammaD_dual: return "GammaD_dual";
        case Generator::GammaP2_dual_d: return "GammaP2_dual_d";
        case Generator::GammaP2_dual: return "GammaP2_dual";
        case Generator::GammaTilde_dual: return "GammaTilde_dual";
        case Generator::Quotient_dual: return "Quotient_dual";
    }
    return "?";
}

RingClass c1_of(const BundleSpec& b) {
    if (b.rank2Cotangent)
        throw NotLineBundle("c1_of(" + b.name + "): rank-2 cotangent twist has no single c1");
    RingClass r;
    for (const auto& [g, pow] : b.factors)
        r = ring_add(r, ring_scale(generator_c1(g), Polynomial::constant(pow)));
    return r;
}

RingClass euler_rank2_twist(const RingClass& c1L, const RingClass& c1E,
                            const RingClass& c2E) {
    RingClass e = ring_add(ring_mul(c1L, c1L), ring_add(ring_mul(c1L, c1E), c2E));
    return normalize(e);
}

RingClass euler_class(const BundleSpec& b) {
    if (!b.rank2Cotangent) {
        if (b.factors.empty()) return RingClass::one();
        return c1_of(b);
    }
    BundleSpec line = b;
    line.rank2Cotangent = false;
    const RingClass c = c1_of(line);
    const RingClass c1E = ring_scale(RingClass::a(), Polynomial::constant(-3));
    const RingClass c2E = RingClass::monomial({0, 2, 0}, Polynomial::constant(3));
    return euler_rank2_twist(c, c1E, c2E);
}

RingClass pushforward(const RingClass& x) {
    RingClass n = normalize(x);
    RingClass out;
    for (const auto& [k, c] : n.terms())
        if (k.lPow == 1) out.add_term({k.yPow, k.aPow, 0}, c);
    return out;
}

std::vector<ExpansionTerm> expansion_coefficients(const RingClass& x) {
    if (!x.is_normalized())
        throw PreconditionError("expansion_coefficients: class is not normalized");
    std::vector<ExpansionTerm> out;
    for (const auto& [k, c] : x.terms())
        out.push_back({k.yPow, k.aPow, k.lPow, c});
    return out;
}

namespace {

std::vector<BundleSpec> make_registry() {
    using G = Generator;
    auto tilde_chain = [](const std::string& name, int tilde, int quot, int base) {
        // (direction bundle)^tilde (x) Quotient_dual^quot (x) (system (x) P^2-degree)^base
        BundleSpec b;
        b.name = name;
        if (tilde) b.factors.push_back({G::GammaTilde_dual, tilde});
        if (quot) b.factors.push_back({G::Quotient_dual, quot});
        b.factors.push_back({G::GammaD_dual, base});
        b.factors.push_back({G::GammaP2_dual_d, base});
        return b;
    };
    std::vector<BundleSpec> r;
    r.push_back({"L_A0", {{G::GammaD_dual, 1}, {G::GammaP2_dual_d, 1}}, false});
    r.push_back({"V_A1", {{G::GammaD_dual, 1}, {G::GammaP2_dual_d, 1}}, true});
    r.push_back({"V_PA2",
                 {{G::GammaTilde_dual, 1}, {G::GammaD_dual, 1}, {G::GammaP2_dual_d, 1}},
                 true});
    // A-family twists: tilde^k (x) quotient^(2k-6) (x) base^(k-2).
    for (int k = 3; k <= 7; ++k)
        r.push_back(tilde_chain("L_PA" + std::to_string(k), k, 2 * k - 6, k - 2));
    r.push_back(tilde_chain("L_PD4", 0, 2, 1));
    r.push_back(tilde_chain("L_PD5", 2, 1, 1));
    r.push_back(tilde_chain("L_PD6", 4, 0, 1));
    r.push_back(tilde_chain("L_PD7", 6, 2, 2));
    r.push_back(tilde_chain("L_PE6", 1, 2, 1));
    r.push_back(tilde_chain("L_PE7", 4, 0, 1));
    return r;
}

}  // namespace

const std::vector<BundleSpec>& bundle_registry() {
    static const std::vector<BundleSpec> reg = make_registry();
    return reg;
}

const BundleSpec& bundle_by_name(const std::string& name) {
    for (const BundleSpec& b : bundle_registry())
        if (b.name == name) return b;
    throw PreconditionError("no bundle named '" + name + "' in the registry");
}

std::string RingClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.yPow) os << "*y" << (k.yPow > 1 ? "^" + std::to_string(k.yPow) : "");
        if (k.aPow) os << "*a" << (k.aPow > 1 ? "^" + std::to_string(k.aPow) : "");
        if (k.lPow) os << "*l" << (k.lPow > 1 ? "^" + std::to_string(k.lPow) : "");
    }
    return os.str();
}

}  // namespace curvecount
