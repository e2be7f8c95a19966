#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "curvecount/recursion.hpp"

using namespace curvecount;

namespace {

Polynomial P(std::initializer_list<long long> c) { return Polynomial::ints(c); }

Polynomial from_ll(const std::vector<long long>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (long long x : v) c.emplace_back(x);
    return Polynomial(std::move(c));
}

const BaseTable& table() {
    static const BaseTable t = BaseTable::load(CURVECOUNT_DATA_FILE);
    return t;
}

const Engine& engine() {
    static const Engine e(table());
    return e;
}

// Frozen expectations for every final count (coefficients low-to-high) and for
// the three smallest degrees from the enumerative bound upward.  These values
// were produced by an independent implementation of the same recursion and
// cross-checked against the three classical closed forms; they pin the engine
// bit-for-bit.
struct FinalRow {
    Singularity s;
    std::vector<long long> n0, n1, n2;
    long long v0, v1, v2;  // values at d = bound, bound+1, bound+2 (n = 0)
};

const std::vector<FinalRow>& frozen() {
    static const std::vector<FinalRow> rows = {
        {Singularity::A1,
         {-66, 81, 12, -36, 9}, {30, -1, -27, 9}, {-4, -6, 3},
         450, 1764, 4740},
        {Singularity::A2,
         {-648, 612, 84, -180, 36}, {180, -24, -84, 24}, {-18, -12, 6},
         4512, 13824, 32448},
        {Singularity::A3,
         {-5040, 3876, 546, -876, 150}, {948, -141, -294, 75}, {-69, -30, 15},
         43056, 108528, 226800},
        {Singularity::A4,
         {-30360, 19800, 2820, -3600, 540}, {4116, -596, -936, 216}, {-224, -72, 36},
         308160, 677160, 1294800},
        {Singularity::A5,
         {-163647, 93519, 12888, -14040, 1890}, {16803, -2358, -2970, 630},
         {-711, -180, 90},
         1962297, 3887082, 6920343},
        {Singularity::A6,
         {-826812, 424515, 55587, -53907, 6636}, {66876, -9111, -9597, 1896},
         {-2276, -474, 237},
         11736963, 21430038, 35976339},
        {Singularity::D4,
         {-1884, 1332, 165, -270, 45}, {276, -50, -72, 18}, {-17, -6, 3},
         3276, 12048, 30960},
        {Singularity::D5,
         {-15696, 9768, 1308, -1692, 252}, {1758, -288, -366, 84}, {-84, -24, 12},
         51120, 141468, 312048},
        {Singularity::D6,
         {-62379, 34794, 4452, -4998, 672}, {5481, -843, -906, 192}, {-207, -48, 24},
         298485, 694437, 1376829},
        {Singularity::E6,
         {-20412, 11475, 1683, -1827, 252}, {1836, -279, -333, 72}, {-72, -18, 9},
         40986, 120771, 275868},
    };
    return rows;
}

const std::vector<CountTarget> kGradedTwoPoint = {
    CountTarget::A1PA2, CountTarget::A1PA3, CountTarget::A1PA4,
    CountTarget::A1PA5, CountTarget::A1PA6, CountTarget::A1PD4,
    CountTarget::A1PD5, CountTarget::A1PD6, CountTarget::A1PE6,
};

}  // namespace

TEST_CASE("the rule table has exactly the advertised thirteen rules, in order") {
    const auto& rules = recursion_rules();
    REQUIRE(rules.size() == 13);
    const std::vector<std::string> ids = {
        "lambda-reduction", "a1a1", "a1pa2.m0", "a1pa2.m1", "a1pa3",
        "a1pa4",            "a1pd4.m0", "a1pd4.m1", "a1pd5", "a1pa5",
        "a1pd6",            "a1pe6", "a1pa6"};
    for (std::size_t i = 0; i < rules.size(); ++i) CHECK(rules[i].id == ids[i]);
    CHECK(rule_by_id("a1pa6").target == CountTarget::A1PA6);
    CHECK_THROWS_AS(rule_by_id("a1pa7"), PreconditionError);
    // Exactly one reduction rule, and it is listed first.
    for (std::size_t i = 0; i < rules.size(); ++i)
        CHECK(rules[i].reduction == (i == 0));
}

TEST_CASE("rules only reference targets defined earlier (acyclic dependency order)") {
    const auto& rules = recursion_rules();
    std::map<CountTarget, std::size_t> first_def;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const RecursionRule& r = rules[i];
        if (r.reduction) continue;
        if (!first_def.count(r.target)) first_def[r.target] = i;
        if (r.special == SpecialForm::None) {
            REQUIRE(first_def.count(r.predecessor));
            CHECK(first_def.at(r.predecessor) < i);
        }
        for (const Correction& c : r.corrections) {
            if (is_base_target(c.target)) continue;  // table rows end recursion
            REQUIRE_MESSAGE(first_def.count(c.target), r.id);
            CHECK_MESSAGE(first_def.at(c.target) < i, r.id);
        }
    }
    // Every two-point target has a defining rule.
    for (int t = 0; t <= static_cast<int>(CountTarget::A1PE6); ++t)
        CHECK(first_def.count(static_cast<CountTarget>(t)) == 1);
}

TEST_CASE("per-level rules partition the lambda levels they serve") {
    CHECK(rule_by_id("a1a1").appliesM == 0);
    CHECK(rule_by_id("a1pa2.m0").appliesM == 0);
    CHECK(rule_by_id("a1pa2.m1").appliesM == 1);
    CHECK(rule_by_id("a1pd4.m0").appliesM == 0);
    CHECK(rule_by_id("a1pd4.m1").appliesM == 1);
    CHECK(rule_by_id("a1pa3").appliesM == -1);
    CHECK(rule_by_id("a1pa6").appliesM == -1);
}

TEST_CASE("the three classical closed forms are reproduced by the engine") {
    const Engine& e = engine();
    // Ordered pairs node+node: 3(d-2)(d-1)(3d^2-3d-11).
    CHECK(e.count({CountTarget::A1A1, 0, 0}) ==
          poly_mul(poly_mul(poly_scale(P({-2, 1}), Rat(3)), P({-1, 1})),
                   P({-11, -3, 3})));
    // Node+cusp: 12(d-3)(3d^3-6d^2-11d+18).
    CHECK(e.count({CountTarget::A1PA2, 0, 0}) ==
          poly_mul(poly_scale(P({-3, 1}), Rat(12)), P({18, -11, -6, 3})));
    // Node+tacnode: 6(d-3)(25d^3-71d^2-122d+280).
    CHECK(e.count({CountTarget::A1PA3, 0, 0}) ==
          poly_mul(poly_scale(P({-3, 1}), Rat(6)), P({280, -122, -71, 25})));
}

TEST_CASE("every final count matches its frozen polynomial, bound, and values") {
    const Engine& e = engine();
    for (const FinalRow& row : frozen()) {
        const auto [p0, bound] = e.final_count(row.s, 0);
        const auto [p1, b1] = e.final_count(row.s, 1);
        const auto [p2, b2] = e.final_count(row.s, 2);
        CHECK_MESSAGE(p0 == from_ll(row.n0), sing_name(row.s));
        CHECK_MESSAGE(p1 == from_ll(row.n1), sing_name(row.s));
        CHECK_MESSAGE(p2 == from_ll(row.n2), sing_name(row.s));
        CHECK(bound == c_bound(row.s));
        CHECK(b1 == bound);
        CHECK(b2 == bound);
        CHECK(poly_eval_int(p0, Int(bound)) == Int(row.v0));
        CHECK(poly_eval_int(p0, Int(bound + 1)) == Int(row.v1));
        CHECK(poly_eval_int(p0, Int(bound + 2)) == Int(row.v2));
        // Out of position conditions: identically zero.
        CHECK(e.final_count(row.s, 3).first.is_zero());
        CHECK(e.final_count(row.s, 5).first.is_zero());
    }
}

TEST_CASE("enumerative bounds follow the family pattern") {
    CHECK(c_bound(Singularity::A1) == 4);
    CHECK(c_bound(Singularity::A2) == 5);
    CHECK(c_bound(Singularity::A3) == 6);
    CHECK(c_bound(Singularity::A4) == 7);
    CHECK(c_bound(Singularity::A5) == 8);
    CHECK(c_bound(Singularity::A6) == 9);
    CHECK(c_bound(Singularity::D4) == 5);
    CHECK(c_bound(Singularity::D5) == 6);
    CHECK(c_bound(Singularity::D6) == 7);
    CHECK(c_bound(Singularity::E6) == 6);
}

TEST_CASE("lambda-level reduction holds as a polynomial identity for every target") {
    const Engine& e = engine();
    for (CountTarget t : kGradedTwoPoint) {
        for (int n = 0; n < 3; ++n) {
            Polynomial acc = e.count({t, n, 2});
            acc = poly_add(acc, poly_scale(e.count({t, n + 1, 1}), Rat(3)));
            acc = poly_add(acc, poly_scale(e.count({t, n + 2, 0}), Rat(3)));
            CHECK_MESSAGE(acc.is_zero(),
                          (count_target_name(t) + " n=" + std::to_string(n)));
        }
        // Deeper levels reduce consistently too.
        CHECK(e.count({t, 0, 3}) ==
              poly_add(poly_scale(e.count({t, 1, 2}), Rat(-3)),
                       poly_scale(e.count({t, 2, 1}), Rat(-3))));
    }
}

TEST_CASE("base targets delegate to the table") {
    const Engine& e = engine();
    for (BaseTarget bt : all_base_targets()) {
        const CountTarget t = from_base_target(bt);
        const int mmax = base_is_projectivized(bt) ? 1 : 0;
        for (int n = 0; n < 3; ++n)
            for (int m = 0; m <= mmax; ++m)
                CHECK(e.count({t, n, m}) == table().lookup({bt, n, m}));
    }
}

TEST_CASE("invalid keys are rejected up front") {
    const Engine& e = engine();
    CHECK_THROWS_AS(e.count({CountTarget::A1PA3, -1, 0}), PreconditionError);
    CHECK_THROWS_AS(e.count({CountTarget::A1PA3, 0, -2}), PreconditionError);
    CHECK_THROWS_AS(e.count({CountTarget::A1A1, 0, 1}), PreconditionError);  // ungraded
    CHECK_THROWS_AS(e.count({CountTarget::A2, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(e.final_count(Singularity::A3, -1), PreconditionError);
}

TEST_CASE("unordered pair count: half the ordered one, integral at every degree") {
    const Engine& e = engine();
    const Polynomial ordered = e.count({CountTarget::A1A1, 0, 0});
    const Polynomial half = e.unordered_binodal();
    CHECK(poly_scale(half, Rat(2)) == ordered);
    // The halved polynomial genuinely has non-integer coefficients...
    CHECK_FALSE(half.integer_coefficients());
    // ...yet every integer degree evaluates to an integer value.
    CHECK(poly_eval(half, Rat(2)) == Rat(0));
    CHECK(poly_eval(half, Rat(3)) == Rat(21));
    CHECK(poly_eval(half, Rat(4)) == Rat(225));
    for (int d = 0; d <= 40; ++d) {
        const Rat v = poly_eval(half, Rat(d));
        CHECK(boost::multiprecision::denominator(v) == 1);
    }
    // The symmetry argument stops at n = 0: already at n = 1 the ordered
    // values are odd for some degrees (d = 5 gives 475), which is why no
    // halved view exists there.
    CHECK(poly_eval_int(e.count({CountTarget::A1A1, 1, 0}), Int(5)) == 475);
}

TEST_CASE("memoization is transparent and stable") {
    Engine memo(table());
    CHECK(memo.memo_size() == 0);
    const Polynomial first = memo.final_count(Singularity::A6, 0).first;
    const std::size_t filled = memo.memo_size();
    CHECK(filled > 0);
    const Polynomial second = memo.final_count(Singularity::A6, 0).first;
    CHECK(second == first);
    CHECK(memo.memo_size() == filled);  // nothing recomputed or added

    Engine fresh(table(), /*memoize=*/false);
    CHECK(fresh.memo_size() == 0);
    for (const FinalRow& row : frozen())
        CHECK(fresh.final_count(row.s, 1).first == memo.final_count(row.s, 1).first);
    CHECK(fresh.memo_size() == 0);  // never fills
}

TEST_CASE("reachability reports exactly the table rows an evaluation touches") {
    auto binodal = Engine::reachable_base_keys(table(), {CountTarget::A1A1, 0, 0});
    CHECK(binodal.size() == 3);
    CHECK(binodal.count({BaseTarget::A1, 0, 0}) == 1);
    CHECK(binodal.count({BaseTarget::A1, 1, 0}) == 1);
    CHECK(binodal.count({BaseTarget::A2, 0, 0}) == 1);

    auto d4 = Engine::reachable_base_keys(table(), {CountTarget::A1PD4, 0, 0});
    CHECK(d4.count({BaseTarget::D5, 0, 0}) == 1);
    CHECK(d4.count({BaseTarget::PA4, 0, 1}) == 1);  // via the level-1 chain
    for (const BaseKey& k : d4) CHECK(k.target != BaseTarget::PA5);

    // The deepest A-family evaluation touches the deepest table rows.
    auto a6 = Engine::reachable_base_keys(table(), {CountTarget::A1PA6, 0, 0});
    CHECK(a6.count({BaseTarget::PA7, 0, 0}) == 1);
    CHECK(a6.count({BaseTarget::PE7, 0, 0}) == 1);
}

TEST_CASE("names and gradings") {
    CHECK(count_target_name(CountTarget::A1A1) == "A1A1");
    CHECK(count_target_name(CountTarget::A1PE6) == "A1PE6");
    CHECK(count_target_name(CountTarget::PE7) == "PE7");
    CHECK(count_target_from_name("A1PD5") == CountTarget::A1PD5);
    CHECK_THROWS_AS(count_target_from_name("A1PD8"), PreconditionError);
    CHECK_FALSE(has_lambda_grading(CountTarget::A1A1));
    CHECK_FALSE(has_lambda_grading(CountTarget::A1));
    CHECK_FALSE(has_lambda_grading(CountTarget::D5));
    CHECK(has_lambda_grading(CountTarget::A1PA2));
    CHECK(has_lambda_grading(CountTarget::PA3));
    CHECK(has_lambda_grading(CountTarget::PE7));
    for (Singularity s : all_singularities())
        CHECK(sing_from_name(sing_name(s)) == s);
    CHECK_THROWS_AS(sing_from_name("E7"), PreconditionError);
    CHECK(final_target(Singularity::A1) == CountTarget::A1A1);
    CHECK(final_target(Singularity::D6) == CountTarget::A1PD6);
    CHECK(final_target(Singularity::E6) == CountTarget::A1PE6);
}
