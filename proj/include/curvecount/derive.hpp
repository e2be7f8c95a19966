#pragma once

#include <string>
#include <vector>

#include "curvecount/cohomology.hpp"
#include "curvecount/recursion.hpp"

namespace curvecount {

// How a rule's left-hand coefficients are paired out of its bundle:
//  - FullProjectivization: pair over the predecessor cycle upstairs; a line
//    bundle contributes its c1 directly, a rank-2 twist contributes its Euler
//    class times lambda^lambdaLevel pushed down the direction bundle.
//  - DiagonalP2: the node-pair lead term; handled by derive_node_cycle_pattern.
//  - DownstairsD4: pair c1 * lambda and push down (used by the rule that
//    works on P^2 below the direction bundle).
enum class PairingMode { FullProjectivization, DiagonalP2, DownstairsD4 };

struct DerivationTask {
    std::string ruleId;
    BundleSpec bundle;
    PairingMode mode = PairingMode::FullProjectivization;
    int lambdaLevel = 0;  // only meaningful for the rank-2 pushforward rows
};

// Re-derive a rule's left-hand coefficients from its bundle.  Throws
// UnsupportedMode for DiagonalP2 (that shape is not a linear triple).
std::vector<LhsTerm> derive_triple(const DerivationTask& task);

// The node-cycle class expanded in the point factor: coefficients (1, 3(d-1),
// 3(d-1)^2) of (a^0, a^1, a^2).  Verifies internally that the reversed pattern
// equals the nodal closed-form row, so the pair-of-nodes lead term is
// N(A1,0) * N(A1,n); throws PreconditionError if the verification fails.
std::vector<Polynomial> derive_node_cycle_pattern();

// The lambda-level reduction coefficients (-3, -3) from normalize(l^2), with
// sanity checks: normalize(l^2 + 3 a l + 3 a^2) = 0 and normalize(l^3) =
// 6 a^2 l, consistent with the formally iterated chain (9, 18, 9).
std::pair<Polynomial, Polynomial> derive_reduction_rule();

// The canonical derivation task for each rule id.
DerivationTask task_for_rule(const std::string& ruleId);

struct RuleCheck {
    std::string id;
    bool pass = false;
    std::string stored;
    std::string derived;
    std::string detail;
};

struct CrosscheckReport {
    std::vector<RuleCheck> rules;
    int passed = 0;
    bool all() const { return passed == static_cast<int>(rules.size()); }
};

// Compare one rule's stored coefficients against a derivation task.
RuleCheck crosscheck_rule(const RecursionRule& rule, const DerivationTask& task);

// All thirteen rules against their canonical tasks.
CrosscheckReport crosscheck_all();

std::string lhs_terms_str(const std::vector<LhsTerm>& terms);

}  // namespace curvecount
