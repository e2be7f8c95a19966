#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curvecount/basecases.hpp"
#include "curvecount/polynomial.hpp"

namespace curvecount {

// Everything count() can be asked about: the ten two-point targets (a node
// plus a second, possibly direction-decorated singularity) and the thirteen
// one-point base targets.
enum class CountTarget {
    // two-point
    A1A1, A1PA2, A1PA3, A1PA4, A1PA5, A1PA6, A1PD4, A1PD5, A1PD6, A1PE6,
    // one-point (delegated to the base table)
    A1, A2, D4, D5, PA3, PA4, PA5, PA6, PA7, PD6, PD7, PE6, PE7,
};

bool is_base_target(CountTarget t);
BaseTarget to_base_target(CountTarget t);       // PreconditionError if two-point
CountTarget from_base_target(BaseTarget t);
// False exactly for A1A1 and the non-projectivized base targets: their keys
// must carry m = 0.
bool has_lambda_grading(CountTarget t);
std::string count_target_name(CountTarget t);
CountTarget count_target_from_name(const std::string& s);  // PreconditionError

struct CountKey {
    CountTarget target = CountTarget::A1A1;
    int n = 0;
    int m = 0;
    auto operator<=>(const CountKey&) const = default;
};

std::string count_key_str(const CountKey& k);

// One additive contribution on the right-hand side of a rule: coefficient
// times the predecessor count at (n + dn, m + dm).
struct LhsTerm {
    int dn = 0;
    int dm = 0;
    Polynomial coeff;
    bool operator==(const LhsTerm&) const = default;
};

// A subtracted multiplicity term: mult * count(target, n + dn, m') where m' is
// the rule's own m when fixedM is nullopt, else the fixed value.
struct Correction {
    Polynomial mult;
    CountTarget target = CountTarget::A1;
    int dn = 0;
    std::optional<int> fixedM;
    bool operator==(const Correction&) const = default;
};

enum class SpecialForm {
    None,              // linear in predecessor counts minus corrections
    NodePairProduct,   // N(A1,0)*N(A1,n) minus the diagonal corrections
    DownstairsDivThree,// T(n) + (d-9) T(n+1) with T(n) = count(A1PD4, n, 0)/3
};

struct RecursionRule {
    std::string id;           // stable descriptive id, e.g. "a1pd4.m1"
    bool reduction = false;   // the one m >= 2 rewriting rule
    CountTarget target = CountTarget::A1A1;
    int appliesM = -1;        // -1: any m in {0,1}; else exactly this m
    CountTarget predecessor = CountTarget::A1A1;
    std::vector<LhsTerm> lhs;
    std::vector<Correction> corrections;
    SpecialForm special = SpecialForm::None;
};

// Exactly thirteen rules: the lambda-level reduction plus the twelve labeled
// two-point recursions, listed in dependency order.
const std::vector<RecursionRule>& recursion_rules();
const RecursionRule& rule_by_id(const std::string& id);  // PreconditionError

// The ten supported second singularities of the final counts.
enum class Singularity { A1, A2, A3, A4, A5, A6, D4, D5, D6, E6 };

std::vector<Singularity> all_singularities();
std::string sing_name(Singularity s);
Singularity sing_from_name(const std::string& s);  // PreconditionError
// Degree bound from which the count is claimed enumerative: k+3 for A_k,
// k+1 for D_k, 6 for E6.  Attached to results as metadata, never enforced.
int c_bound(Singularity s);
CountTarget final_target(Singularity s);

// Evaluator over a validated base table.  With memoize on (the default) every
// distinct key is computed once; the fill is idempotent, and concurrent use
// over disjoint engines is safe (no shared mutable state).
class Engine {
public:
    explicit Engine(const BaseTable& table, bool memoize = true);

    // Evaluation order: n >= 3 gives zero; m >= 2 applies the reduction rule;
    // base targets consult the table; two-point targets apply their rule.
    Polynomial count(const CountKey& k) const;

    // Count polynomial for curves with one node plus the given singularity,
    // n conditions on the second singular point, together with the degree
    // bound from which it is claimed enumerative.
    std::pair<Polynomial, int> final_count(Singularity s, int n) const;

    // Ordered pair-of-nodes count at n = 0 divided by 2 — the unordered
    // curve count.  Only n = 0 is symmetric under swapping the nodes; with
    // n >= 1 the conditions pin one node and halving loses its meaning (the
    // ordered values there are genuinely odd at some degrees).  Coefficients
    // are half-integers; values at every integer d are exact integers.
    Polynomial unordered_binodal() const;

    std::size_t memo_size() const { return memo_.size(); }
    const BaseTable& table() const { return table_; }

    // Records every base-table row consulted while evaluating key (bypasses
    // the memo so nothing is hidden by caching).
    static std::set<BaseKey> reachable_base_keys(const BaseTable& table,
                                                 const CountKey& key);

private:
    Polynomial eval(const CountKey& k) const;
    const RecursionRule& rule_for(CountTarget t, int m) const;

    const BaseTable& table_;
    bool memoize_;
    mutable std::map<CountKey, Polynomial> memo_;
    mutable std::set<BaseKey>* recorder_ = nullptr;
};

}  // namespace curvecount
