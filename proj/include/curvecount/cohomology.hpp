#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvecount/polynomial.hpp"

namespace curvecount {

// Cohomology of (curve system) x P^2 x (projectivized tangent directions),
// second-factor part.  Generators: y (hyperplane on the system), a (hyperplane
// on P^2), l (the tautological class on the direction bundle).  Relations in
// normal form: a^3 = 0 and l^2 = -3 a l - 3 a^2, so normalized classes have
// aPow <= 2 and lPow <= 1; y-powers are free (they are tracked as offsets, the
// ambient dimension never enters).

struct MonoKey {
    int yPow = 0;
    int aPow = 0;
    int lPow = 0;
    auto operator<=>(const MonoKey&) const = default;
};

class RingClass {
public:
    RingClass() = default;

    static RingClass zero() { return {}; }
    static RingClass one();
    static RingClass monomial(MonoKey k, Polynomial coeff);
    // Generator shorthands.
    static RingClass y();
    static RingClass a();
    static RingClass l();

    // Accumulate; zero-coefficient terms are pruned.
    void add_term(const MonoKey& k, const Polynomial& coeff);

    const std::map<MonoKey, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_normalized() const;  // every aPow <= 2 and lPow <= 1
    Polynomial coeff(const MonoKey& k) const;  // zero if absent

    bool operator==(const RingClass&) const = default;
    std::string str() const;

private:
    std::map<MonoKey, Polynomial> terms_;
};

RingClass ring_add(const RingClass& x, const RingClass& y);
RingClass ring_sub(const RingClass& x, const RingClass& y);
RingClass ring_mul(const RingClass& x, const RingClass& y);
RingClass ring_scale(const RingClass& x, const Polynomial& k);

// Rewrite to normal form: substitute l^2 -> -3 a l - 3 a^2 until lPow <= 1,
// then drop every term with aPow >= 3.  Linear and idempotent.
RingClass normalize(const RingClass& x);

// Line bundle factors on the ambient threefold.  GammaP2_dual_d is the degree-d
// power of the P^2 hyperplane bundle pulled through the curve system (its c1
// carries the symbolic factor d); Quotient_dual is the dual of the tautological
// quotient on the direction bundle, c1 = -(3a + l).
enum class Generator {
    GammaD_dual,      // c1 = y
    GammaP2_dual_d,   // c1 = d * a
    GammaP2_dual,     // c1 = a
    GammaTilde_dual,  // c1 = l
    Quotient_dual,    // c1 = -3a - l
};

RingClass generator_c1(Generator g);
std::string generator_name(Generator g);

// A bundle built as a tensor product of generator powers, optionally twisted
// by the rank-2 cotangent bundle of P^2 (c1 = -3a, c2 = 3a^2).
struct BundleSpec {
    std::string name;
    std::vector<std::pair<Generator, int>> factors;
    bool rank2Cotangent = false;

    bool operator==(const BundleSpec&) const = default;
};

// First Chern class of a line-bundle spec: alpha*y + beta(d)*a + gamma*l with
// integer alpha, gamma.  Throws NotLineBundle when rank2Cotangent is set.
RingClass c1_of(const BundleSpec& b);

// Euler class: a line bundle contributes c1; a rank-2 cotangent twist L (x) E
// contributes c1(L)^2 + c1(L)c1(E) + c2(E) = c1(L)^2 - 3a c1(L) + 3a^2,
// normalized.  The trivial spec (no factors, no twist) gives 1.
RingClass euler_class(const BundleSpec& b);

// Same formula with explicit Chern data of the rank-2 factor; euler_class uses
// (c1E, c2E) = (-3a, 3a^2).  Exposed so the splitting law can be tested
// against an explicit product of line-bundle summands.
RingClass euler_rank2_twist(const RingClass& c1L, const RingClass& c1E,
                            const RingClass& c2E);

// Fiber integration along the direction-bundle projection: 1 -> 0, l -> 1,
// l^2 -> -3a.  Normalizes its input first, then keeps exactly the lPow = 1
// part with the l stripped.
RingClass pushforward(const RingClass& x);

// Read a normalized class as recursion increments: each monomial y^p a^q l^r
// becomes (dy = p, dn = q, dm = r, coeff).  Throws PreconditionError when the
// input is not in normal form.
struct ExpansionTerm {
    int dy = 0;
    int dn = 0;
    int dm = 0;
    Polynomial coeff;
    bool operator==(const ExpansionTerm&) const = default;
};
std::vector<ExpansionTerm> expansion_coefficients(const RingClass& x);

// Named bundles used by the engine (the section twists of the one- and
// two-point loci).  Lookup by name throws PreconditionError if absent.
const std::vector<BundleSpec>& bundle_registry();
const BundleSpec& bundle_by_name(const std::string& name);

}  // namespace curvecount
