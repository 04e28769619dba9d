// Acceptance gate: one line per criterion, nonzero exit if any fail.

#include "oracles.hpp"
#include "suq/certificate.hpp"
#include "suq/classifier.hpp"
#include "suq/duality.hpp"
#include "suq/paper_props.hpp"
#include "suq/report_json.hpp"

#include <chrono>
#include <iostream>
#include <set>

using namespace suq;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, double ms) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << idx << ": " << what << " ("
              << static_cast<long long>(ms) << " ms)\n";
    if (!ok) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& what, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::cout << "       exception: " << e.what() << "\n";
        ok = false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    report(idx, what, ok, std::chrono::duration<double, std::milli>(t1 - t0).count());
}

Weight fund(int r, std::vector<std::pair<int, long long>> entries) {
    std::vector<long long> a(r, 0);
    for (auto [i, v] : entries) a[i - 1] += v;
    return weight_from_fundamental(a);
}

} // namespace

int main() {
    criterion(1, "r=6 phi_3 counts: 35/13/22/32, 44 > 38, margin 6", [] {
        const Weight lam = fund(6, {{3, 1}});
        const auto omega = paper_omega(PaperOmega::thi, 6);
        const auto res = evaluate_nosm(lam, omega);
        const auto* c = std::get_if<Certificate>(&res);
        if (!c) return false;
        const long long total = orbit_size(lam);
        return total == 35 && total - c->lambda_outside == 13 &&
               c->lambda_outside == 22 && c->roots_outside_count == 32 &&
               2 * c->lambda_outside == 44 && c->roots_outside_count + 6 == 38 &&
               c->margin == 6 && reverify(*c);
    });

    criterion(2, "r=7 phi_3 counts: 56/18/38, 76 > |Delta\\H|+6", [] {
        const Weight lam = fund(7, {{3, 1}});
        const auto res = evaluate_nosm(lam, paper_omega(PaperOmega::ths, 7));
        const auto* c = std::get_if<Certificate>(&res);
        if (!c) return false;
        const long long total = orbit_size(lam);
        return total == 56 && total - c->lambda_outside == 18 &&
               c->lambda_outside == 38 &&
               2 * c->lambda_outside > c->roots_outside_count + 6 && reverify(*c);
    });

    criterion(3, "r=3 phi_1+phi_2+phi_3: 24/12/4/20 > 18, delta=1 branch", [] {
        const Weight lam = fund(3, {{1, 1}, {2, 1}, {3, 1}});
        const auto omega = paper_omega(PaperOmega::all, 3);
        const ConditionReport cond = omega_conditions(lam, omega);
        const auto res = evaluate_nosm(lam, omega);
        const auto* c = std::get_if<Certificate>(&res);
        if (!c) return false;
        return orbit_size(lam) == 24 && make_root_datum(3).roots.size() == 12 &&
               orbit_size(lam) - c->lambda_outside == 4 && c->lambda_outside == 20 &&
               c->lambda_outside > 18 && c->delta == 1 && cond.diff_free &&
               cond.sum_free && cond.two_lambda_ok && reverify(*c);
    });

    criterion(4, "alg construction passes for every r in 3..8", [] {
        for (int r = 3; r <= 8; ++r) {
            const Weight lam = fund(r, {{2, 1}, {r, 1}});
            const auto omega = paper_omega(PaperOmega::alg, r);
            const ConditionReport cond = omega_conditions(lam, omega);
            if (!cond.subset_of_orbit || !cond.codim1_span || !cond.diff_free)
                return false;
            const auto res = evaluate_nosm(lam, omega);
            const auto* c = std::get_if<Certificate>(&res);
            if (!c || 2 * c->inn_outside_weighted <= c->roots_outside_count + 6)
                return false;
        }
        return true;
    });

    criterion(5, "verify-paper at n<=6, coord 3, height 4: zero counterexamples", [] {
        if (!verify_cmb1(12).empty() || !verify_cmb2(12).empty()) return false;
        VerifyOptions opt;
        opt.max_n = 6;
        opt.coord_bound = 3;
        opt.height_bound = 4;
        if (!verify_est(opt).empty()) return false;
        if (!verify_la2_elst(opt).empty()) return false;
        if (!verify_esn_es2n_ampl_eson(opt).empty()) return false;
        return verify_lah({3, 4, 5}, opt).empty();
    });

    criterion(6, "sweep r 2..8 height <= 2: candidate set exact, rest certified", [] {
        SweepOptions opt;
        opt.r_min = 2;
        opt.r_max = 8;
        opt.height_max = 2;
        const auto reports = sweep(opt);
        auto expected = [](int r, const std::vector<long long>& a) {
            auto is = [&](std::vector<std::pair<int, long long>> entries) {
                std::vector<long long> b(r, 0);
                for (auto [i, v] : entries) b[i - 1] += v;
                return a == b;
            };
            return is({{1, 1}}) || is({{r, 1}}) || is({{1, 2}}) || is({{r, 2}}) ||
                   is({{2, 1}}) || is({{r - 1, 1}}) || is({{1, 1}, {r, 1}}) ||
                   (r == 3 && is({{2, 2}})) || (r == 5 && is({{3, 1}})) ||
                   (r == 7 && is({{4, 1}}));
        };
        for (const Report& rep : reports) {
            const bool member = expected(rep.rank, fundamental_coords(rep.input));
            if (rep.verdict == Verdict::UNRESOLVED) return false;
            if (member != (rep.verdict == Verdict::CANDIDATE_SMOOTH)) return false;
            if (!member) {
                if (rep.verdict != Verdict::NOT_SMOOTH || !rep.certificate)
                    return false;
                if (!reverify(*rep.certificate)) return false;
            }
        }
        // phi_4 at r=7 and phi_3 at r=5 explicitly:
        return classify(7, fund(7, {{4, 1}})).verdict == Verdict::CANDIDATE_SMOOTH &&
               classify(5, fund(5, {{3, 1}})).verdict == Verdict::CANDIDATE_SMOOTH;
    });

    criterion(7, "property suites against independent oracles", [] {
        // Dimension consistency, coords <= 2, r <= 6.
        for (int r = 2; r <= 6; ++r) {
            std::vector<long long> a(r, 0);
            while (true) {
                int i = 0;
                while (i < r && a[i] == 2) a[i++] = 0;
                if (i == r) break;
                ++a[i];
                const Weight lam = weight_from_fundamental(a);
                long long total = 0;
                for (const auto& [d, m] : dominant_multiplicities(lam).dominant_mults)
                    total += m * orbit_size(d);
                if (total != dimension(lam)) return false;
            }
        }
        // Freudenthal vs the Kostant-partition oracle on A2/A3.
        for (const Weight& lam : {fund(2, {{1, 2}, {2, 2}}), fund(3, {{1, 1}, {2, 1}, {3, 1}}),
                                  fund(3, {{2, 2}})}) {
            for (const auto& [mu, m] : dominant_multiplicities(lam).dominant_mults)
                if (m != oracle::kostant_multiplicity(lam, mu)) return false;
        }
        // Saturation membership vs the exact LP hull oracle (n <= 5).
        for (const Weight& lam : {fund(2, {{1, 1}, {2, 1}}), fund(3, {{2, 1}, {3, 1}}),
                                  fund(4, {{1, 1}, {4, 1}})}) {
            const auto pts = orbit(lam).elements;
            for (const Weight& mu : inn_enumerate(lam)) {
                if (!oracle::convex_hull_contains(pts, mu)) return false;
                const Weight outside = mu + 2 * root_weight(lam.n(), 1, lam.n());
                const bool expect = mu.coset_class() == lam.coset_class() &&
                                    oracle::convex_hull_contains(pts, outside);
                if (inn_contains(lam, outside) != expect) return false;
            }
        }
        // Frobenius-Schur formula vs the Sym^2/Alt^2 oracle (dim <= 200).
        for (int r = 2; r <= 7; ++r)
            for (int i = 1; i <= r; ++i)
                for (int j = i; j <= r; ++j) {
                    const Weight lam = fund(r, {{i, 1}, {j, 1}});
                    if (dual_weight(lam) != lam || dimension(lam) > 200) continue;
                    if (frobenius_schur(lam) != oracle::fs_oracle(lam)) return false;
                }
        return true;
    });

    criterion(8, "sweep output byte-identical across thread counts", [] {
        SweepOptions serial;
        serial.r_min = 2;
        serial.r_max = 6;
        serial.height_max = 2;
        serial.parallel = false;
        SweepOptions parallel = serial;
        parallel.parallel = true;
        return sweep_csv(sweep(serial)) == sweep_csv(sweep(parallel));
    });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED\n";
    return 1;
}
