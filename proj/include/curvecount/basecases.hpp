#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "curvecount/polynomial.hpp"

namespace curvecount {

// One-point ingredients of the recursion: counts of degree-d curves with a
// single prescribed singularity, n linear conditions on its position, and for
// the projectivized targets a lambda-level m (a condition on the distinguished
// tangent direction).  Stored rows cover n in {0,1,2} and m in {0,1} (m = 0
// only for the four non-projectivized targets); everything else is reduced to
// the stored rows by the engine-wide rules n >= 3 -> 0 and
// N(n, m) = -3 N(n+1, m-1) - 3 N(n+2, m-2) for m >= 2.
enum class BaseTarget {
    A1, A2, D4, D5,                       // no lambda grading
    PA3, PA4, PA5, PA6, PA7,              // projectivized A-family
    PD6, PD7, PE6, PE7,                   // projectivized D/E-family
};

constexpr int kBaseTargetCount = 13;

bool base_is_projectivized(BaseTarget t);
std::string base_target_name(BaseTarget t);
BaseTarget base_target_from_name(const std::string& s);  // SchemaError if unknown
std::vector<BaseTarget> all_base_targets();

struct BaseKey {
    BaseTarget target = BaseTarget::A1;
    int n = 0;
    int m = 0;
    auto operator<=>(const BaseKey&) const = default;
};

std::string base_key_str(const BaseKey& k);

struct BaseEntry {
    Polynomial coeffs;   // count as a polynomial in d
    std::string source;  // where the row comes from / what corroborates it
    int min_d = 0;       // smallest d for which the row is reliable
    bool operator==(const BaseEntry&) const = default;
};

class BaseTable {
public:
    // Loads and fully validates a data file.  Errors: SchemaError for
    // structural problems, MissingKey listing every absent manifest key,
    // A1Mismatch when the stored nodal rows differ from (3(d-1)^2, 3(d-1), 1).
    static BaseTable load(const std::string& path);
    static BaseTable from_json_text(const std::string& text);

    // Canonical serialization (entries ordered by target, n, m; fixed field
    // order).  from_json_text(to_json_text()) is an identity, bit-exact on
    // re-serialization.
    std::string to_json_text() const;
    void save(const std::string& path) const;

    // Count polynomial for a key.  n >= 3 gives zero without any table access;
    // m >= 2 is reduced recursively.  Negative n/m, or m != 0 on a target with
    // no lambda grading, throws PreconditionError.
    Polynomial lookup(const BaseKey& k) const;

    // Metadata access for a stored row (n in 0..2, m in 0..1 as applicable).
    const BaseEntry& entry(const BaseKey& k) const;

    const std::map<BaseKey, BaseEntry>& entries() const { return entries_; }
    bool operator==(const BaseTable&) const = default;

    // Every key the manifest requires (66 rows).
    static std::vector<BaseKey> manifest();

private:
    std::map<BaseKey, BaseEntry> entries_;
};

}  // namespace curvecount
