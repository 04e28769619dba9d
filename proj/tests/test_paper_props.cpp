#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suq/hyperplane.hpp"
#include "suq/paper_props.hpp"

using namespace suq;

TEST_CASE("dominant lattice enumeration is exhaustive and deterministic") {
    const auto pts = enumerate_dominant_lattice(4, 2);
    for (const Weight& w : pts) {
        CHECK(w.in_lattice());
        CHECK(w.is_dominant());
        CHECK_FALSE(w.is_zero());
        for (long long v : w.s) CHECK(std::abs(v) <= 8);
    }
    CHECK(pts == enumerate_dominant_lattice(4, 2));
    // The highest root (4,0,0,-4) and phi_1 = (3,-1,-1,-1) must both appear.
    CHECK(std::find(pts.begin(), pts.end(), Weight({4, 0, 0, -4})) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), Weight({3, -1, -1, -1})) != pts.end());
}

TEST_CASE("orbit-count bounds hold on the desk-scale range") {
    VerifyOptions opt;
    opt.max_n = 6;
    opt.coord_bound = 3;
    CHECK(verify_est(opt).empty());
}

TEST_CASE("the >= 2 bounds and equality patterns hold") {
    VerifyOptions opt;
    opt.max_n = 6;
    opt.coord_bound = 3;
    CHECK(verify_la2_elst(opt).empty());
}

TEST_CASE("the >= 2n family holds") {
    VerifyOptions opt;
    opt.max_n = 6;
    opt.coord_bound = 3;
    CHECK(verify_esn_es2n_ampl_eson(opt).empty());
}

TEST_CASE("short-list lemma scan is empty (r in 4..8, height <= 3)") {
    VerifyOptions opt;
    opt.height_bound = 3;
    CHECK(verify_lah({4, 5, 6, 7, 8}, opt).empty());
}

TEST_CASE("serial and parallel runs agree") {
    VerifyOptions serial;
    serial.max_n = 5;
    serial.parallel = false;
    VerifyOptions parallel = serial;
    parallel.parallel = true;
    CHECK(verify_est(serial).size() == verify_est(parallel).size());
    CHECK(verify_la2_elst(serial).size() == verify_la2_elst(parallel).size());
}

TEST_CASE("self-test: tightening a bound produces counterexamples") {
    VerifyOptions opt;
    opt.max_n = 5;
    opt.coord_bound = 2;
    opt.bound_shift = 1;
    // Equality instances exist for these claims, so a +1 perturbation of
    // the claimed bound must surface violations.
    CHECK_FALSE(verify_est(opt).empty());
    CHECK_FALSE(verify_la2_elst(opt).empty());
    CHECK_FALSE(verify_esn_es2n_ampl_eson(opt).empty());
    // The fundamental-weight bound at r = 8 has slack 70 vs 36; a large
    // shift must flip it.
    VerifyOptions lah_opt;
    lah_opt.height_bound = 2;
    lah_opt.bound_shift = 1000;
    CHECK_FALSE(verify_lah({8}, lah_opt).empty());
}

TEST_CASE("the r = 8 fundamental-weight count: 70 > 4n = 36") {
    const RootDatum d = make_root_datum(8);
    const Weight lam = d.fundamental[3]; // phi_4
    std::vector<Weight> span_vecs = {lam};
    for (int i = 1; i <= 6; ++i) span_vecs.push_back(d.simple[i - 1]);
    const Hyperplane h = hyperplane_from_span(span_vecs);
    CHECK(orbit_count_outside(lam, h) == 70);
    CHECK(verify_lah({8}, VerifyOptions{8, 3, 2, 0, true}).empty());
}
