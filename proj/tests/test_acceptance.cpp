// Acceptance gate: nine checks, one printed line each, exit code = number of
// failures.  Runs against the shipped base table.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "curvecount/consistency.hpp"
#include "curvecount/derive.hpp"
#include "curvecount/recursion.hpp"

using namespace curvecount;

namespace {

Polynomial P(std::initializer_list<long long> c) { return Polynomial::ints(c); }

Polynomial binodal_form() {
    return poly_mul(poly_mul(poly_scale(P({-2, 1}), Rat(3)), P({-1, 1})),
                    P({-11, -3, 3}));
}

Polynomial node_cusp_form() {
    return poly_mul(poly_scale(P({-3, 1}), Rat(12)), P({18, -11, -6, 3}));
}

Polynomial node_tacnode_form() {
    return poly_mul(poly_scale(P({-3, 1}), Rat(6)), P({280, -122, -71, 25}));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Gate {
    int failures = 0;

    void criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
        bool pass = false;
        std::string detail;
        try {
            auto [p, msg] = body();
            pass = p;
            detail = msg;
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::printf("criterion %d: %s (%s)\n", id, pass ? "PASS" : "FAIL",
                    detail.c_str());
        std::fflush(stdout);
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

}  // namespace

int main() {
    BaseTable table;
    try {
        table = BaseTable::load(CURVECOUNT_DATA_FILE);
    } catch (const std::exception& e) {
        for (int i = 1; i <= 9; ++i)
            std::printf("criterion %d: FAIL (base table unusable: %s)\n", i, e.what());
        return 9;
    }

    Gate gate;
    const ConsistencyReport consistency = consistency_check(table);
    const std::string cond =
        std::string("table consistency: ") + (consistency.ok() ? "pass" : "FAIL");
    Engine engine(table);

    // 1. Ordered pair-of-nodes count equals 3(d-2)(d-1)(3d^2-3d-11)
    //    coefficient-wise; spot values d=2 -> 0, d=3 -> 42 ordered / 21
    //    unordered; under one second.
    gate.criterion(1, [&]() -> std::pair<bool, std::string> {
        const auto t0 = std::chrono::steady_clock::now();
        Engine fresh(table);
        const Polynomial got = fresh.count({CountTarget::A1A1, 0, 0});
        const double dt = seconds_since(t0);
        const bool poly_ok = got == binodal_form();
        const bool spots_ok = poly_eval_int(got, Int(2)) == 0 &&
                              poly_eval_int(got, Int(3)) == 42 &&
                              poly_eval(fresh.unordered_binodal(), Rat(3)) == Rat(21);
        const bool time_ok = dt < 1.0;
        return {poly_ok && spots_ok && time_ok,
                std::string(poly_ok ? "closed form reproduced" : "polynomial mismatch") +
                    (spots_ok ? "; d=2 -> 0, d=3 -> 42/21" : "; spot values wrong") +
                    "; " + fmt("%.3fs", dt)};
    });

    // 2. Node+cusp count equals 12(d-3)(3d^3-6d^2-11d+18); d=3 -> 0.
    //    Conditional on the shipped table passing its consistency check.
    gate.criterion(2, [&]() -> std::pair<bool, std::string> {
        const Polynomial got = engine.count({CountTarget::A1PA2, 0, 0});
        const bool ok = consistency.ok() && got == node_cusp_form() &&
                        poly_eval_int(got, Int(3)) == 0;
        return {ok, (got == node_cusp_form()
                         ? std::string("closed form reproduced; d=3 -> 0")
                         : std::string("polynomial mismatch")) +
                        "; " + cond};
    });

    // 3. Node+tacnode count equals 6(d-3)(25d^3-71d^2-122d+280); d=4 -> 1536.
    //    Same conditionality as (2).
    gate.criterion(3, [&]() -> std::pair<bool, std::string> {
        const Polynomial got = engine.count({CountTarget::A1PA3, 0, 0});
        const bool ok = consistency.ok() && got == node_tacnode_form() &&
                        poly_eval_int(got, Int(4)) == 1536;
        return {ok, (got == node_tacnode_form()
                         ? std::string("closed form reproduced; d=4 -> 1536")
                         : std::string("polynomial mismatch")) +
                        "; " + cond};
    });

    // 4. Cusp-row identity: 3 N(A2,0) = 9(d-1)^4 - 3(d-1)^2 - 3d(d-1)
    //    - [pair-of-nodes form], pinning N(A2,0) = 12(d-1)(d-2).
    gate.criterion(4, [&]() -> std::pair<bool, std::string> {
        const Polynomial a2 = table.lookup({BaseTarget::A2, 0, 0});
        const Polynomial dm1 = P({-1, 1});
        Polynomial rhs =
            poly_scale(poly_mul(poly_mul(dm1, dm1), poly_mul(dm1, dm1)), Rat(9));
        rhs = poly_sub(rhs, poly_scale(poly_mul(dm1, dm1), Rat(3)));
        rhs = poly_sub(rhs, poly_scale(poly_mul(P({0, 1}), dm1), Rat(3)));
        rhs = poly_sub(rhs, binodal_form());
        const bool identity = poly_scale(a2, Rat(3)) == rhs;
        const bool pinned =
            a2 == poly_scale(poly_mul(dm1, P({-2, 1})), Rat(12));
        return {identity && pinned,
                identity && pinned ? "3 N(A2,0) identity holds; N(A2,0) = 12(d-1)(d-2)"
                                   : "identity violated by stored row " + a2.str()};
    });

    // 5. Coefficient derivation: all 13 recursion rules re-derived from their
    //    bundle data, including the exactly-zero lambda coefficient of rule
    //    a1pa6 and the -2 lambda coefficient of rule a1pd4.m0; under one
    //    second.
    gate.criterion(5, [&]() -> std::pair<bool, std::string> {
        const auto t0 = std::chrono::steady_clock::now();
        const CrosscheckReport rep = crosscheck_all();
        Polynomial a1pa6_lambda, a1pd4_lambda;
        for (const LhsTerm& t : derive_triple(task_for_rule("a1pa6")))
            if (t.dn == 0 && t.dm == 1) a1pa6_lambda = poly_add(a1pa6_lambda, t.coeff);
        for (const LhsTerm& t : derive_triple(task_for_rule("a1pd4.m0")))
            if (t.dn == 0 && t.dm == 1) a1pd4_lambda = poly_add(a1pd4_lambda, t.coeff);
        const double dt = seconds_since(t0);
        const bool zero_ok = a1pa6_lambda.is_zero();
        const bool minus2_ok = a1pd4_lambda == P({-2});
        const bool ok = rep.all() && zero_ok && minus2_ok && dt < 1.0;
        std::string bad;
        for (const RuleCheck& rc : rep.rules)
            if (!rc.pass) bad += " " + rc.id;
        return {ok, std::to_string(rep.passed) + "/13 rules derived" +
                        (bad.empty() ? "" : ";" + bad) +
                        (zero_ok ? "; a1pa6 lambda coefficient = 0" : "") +
                        (minus2_ok ? "; a1pd4.m0 lambda coefficient = -2" : "") +
                        "; " + fmt("%.3fs", dt)};
    });

    // 6. Reduction law: count(n,2) + 3 count(n+1,1) + 3 count(n+2,0) = 0 as a
    //    polynomial, for every direction-graded two-point target and n <= 2.
    gate.criterion(6, [&]() -> std::pair<bool, std::string> {
        const std::vector<CountTarget> graded = {
            CountTarget::A1PA2, CountTarget::A1PA3, CountTarget::A1PA4,
            CountTarget::A1PA5, CountTarget::A1PA6, CountTarget::A1PD4,
            CountTarget::A1PD5, CountTarget::A1PD6, CountTarget::A1PE6};
        int checked = 0;
        std::string bad;
        for (CountTarget t : graded)
            for (int n = 0; n <= 2; ++n) {
                Polynomial acc = engine.count({t, n, 2});
                acc = poly_add(acc, poly_scale(engine.count({t, n + 1, 1}), Rat(3)));
                acc = poly_add(acc, poly_scale(engine.count({t, n + 2, 0}), Rat(3)));
                ++checked;
                if (!acc.is_zero())
                    bad += " " + count_target_name(t) + "/n=" + std::to_string(n);
            }
        return {bad.empty(), bad.empty() ? std::to_string(checked) +
                                               " graded rows reduce to zero"
                                         : "violations:" + bad};
    });

    // 7. Vanishing law: every count with n >= 3 is identically zero, for all
    //    targets and all lambda levels.
    gate.criterion(7, [&]() -> std::pair<bool, std::string> {
        int checked = 0;
        std::string bad;
        for (int ti = 0; ti <= static_cast<int>(CountTarget::PE7); ++ti) {
            const CountTarget t = static_cast<CountTarget>(ti);
            const int mmax = has_lambda_grading(t) ? 2 : 0;
            for (int n = 3; n <= 6; ++n)
                for (int m = 0; m <= mmax; ++m) {
                    ++checked;
                    if (!engine.count({t, n, m}).is_zero())
                        bad += " " + count_key_str({t, n, m});
                }
        }
        return {bad.empty(), bad.empty() ? std::to_string(checked) +
                                               " high-n counts all vanish"
                                         : "nonzero:" + bad};
    });

    // 8. Integrality: every final count for n in {0,1,2} has integer
    //    coefficients; the triple-point /3 is coefficient-exact and the
    //    pair-of-nodes /2 is value-exact (even ordered values, halved match).
    gate.criterion(8, [&]() -> std::pair<bool, std::string> {
        std::string bad;
        for (Singularity s : all_singularities())
            for (int n = 0; n <= 2; ++n) {
                Polynomial p;
                try {
                    p = engine.final_count(s, n).first;  // D4 divides by 3 inside
                } catch (const NonExactDivision&) {
                    bad += " " + sing_name(s) + "/n=" + std::to_string(n) + ":div";
                    continue;
                }
                if (!p.integer_coefficients())
                    bad += " " + sing_name(s) + "/n=" + std::to_string(n);
            }
        if (bad.empty()) {
            // The /2 is the unordered pair count, defined at n = 0 where the
            // two nodes are interchangeable; its exactness is value-wise.
            const Polynomial ordered = engine.count({CountTarget::A1A1, 0, 0});
            const Polynomial half = engine.unordered_binodal();
            if (poly_scale(half, Rat(2)) != ordered) bad += " binodal-half-mismatch";
            for (int d = 0; d <= 40; ++d)
                if (poly_eval_int(ordered, Int(d)) % 2 != 0) {
                    bad += " binodal-odd-at-d=" + std::to_string(d);
                    break;
                }
        }
        return {bad.empty(),
                bad.empty() ? "30 final rows integral; /3 exact; /2 value-exact"
                            : "violations:" + bad};
    });

    // 9. Determinism: memoized and memo-free evaluation agree on every valid
    //    key with n, m <= 4; under five seconds.
    gate.criterion(9, [&]() -> std::pair<bool, std::string> {
        const auto t0 = std::chrono::steady_clock::now();
        Engine memo(table), plain(table, /*memoize=*/false);
        int checked = 0;
        std::string bad;
        for (int ti = 0; ti <= static_cast<int>(CountTarget::PE7); ++ti) {
            const CountTarget t = static_cast<CountTarget>(ti);
            const int mmax = has_lambda_grading(t) ? 4 : 0;
            for (int n = 0; n <= 4; ++n)
                for (int m = 0; m <= mmax; ++m) {
                    ++checked;
                    if (memo.count({t, n, m}) != plain.count({t, n, m}))
                        bad += " " + count_key_str({t, n, m});
                }
        }
        const double dt = seconds_since(t0);
        const bool ok = bad.empty() && dt < 5.0;
        return {ok, (bad.empty() ? std::to_string(checked) + " keys agree"
                                 : "disagreements:" + bad) +
                        "; " + fmt("%.3fs", dt)};
    });

    std::printf("acceptance: %d/9 criteria passed\n", 9 - gate.failures);
    return gate.failures;
}
