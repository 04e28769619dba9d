#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suq/certificate.hpp"
#include "suq/hyperplane.hpp"
#include "suq/orbit.hpp"
#include "suq/weights.hpp"

using namespace suq;

namespace {

Weight fund(int r, std::vector<std::pair<int, long long>> entries) {
    std::vector<long long> a(r, 0);
    for (auto [i, v] : entries) a[i - 1] += v;
    return weight_from_fundamental(a);
}

} // namespace

TEST_CASE("normal canonicalization") {
    // Adding a multiple of the all-ones vector does not change the class.
    CHECK(hyperplane_from_normal({1, 0, 3, 0}) ==
          hyperplane_from_normal({2, 1, 4, 1}));
    // Scaling does not change the class; first nonzero entry made positive.
    CHECK(hyperplane_from_normal({0, -2, 4, -2}) ==
          hyperplane_from_normal({0, 1, -2, 1}));
    CHECK_THROWS_AS(hyperplane_from_normal({5, 5, 5, 5}), std::invalid_argument);
}

TEST_CASE("span normals of the published constructions") {
    const Hyperplane h_thi = hyperplane_from_span(paper_omega(PaperOmega::thi, 6));
    CHECK(h_thi.normal == Coords{1, -1, 1, -1, 0, 0, 0}); // x1 + x3 = x2 + x4
    CHECK(roots_outside(7, h_thi) == 32);                 // n^2 - (9 + 4 + 4)

    const Hyperplane h_all = hyperplane_from_span(paper_omega(PaperOmega::all, 3));
    CHECK(h_all == hyperplane_from_normal({1, 0, 3, 0})); // x1 + 3 x3 = 0
}

TEST_CASE("span normal is orthogonal to every input") {
    const Weight lam = fund(6, {{3, 1}});
    const RootDatum d = make_root_datum(6);
    std::vector<Weight> span_vecs = {lam};
    for (int i = 2; i <= 5; ++i) span_vecs.push_back(d.simple[i - 1]);
    CHECK(span_rank(span_vecs) == 5);
    const Hyperplane h = hyperplane_from_span(span_vecs);
    for (const Weight& v : span_vecs) CHECK(dot(v.s, h.normal) == 0);
}

TEST_CASE("wrong codimension is rejected with the actual dimension") {
    const RootDatum d = make_root_datum(4);
    CHECK_THROWS_WITH_AS(hyperplane_from_span({d.simple[0]}),
                         doctest::Contains("span dimension 1"),
                         std::invalid_argument);
}

TEST_CASE("ratio-family hyperplanes") {
    const Weight lam = fund(8, {{4, 1}}); // lambda_{n-1} = lambda_n
    const Hyperplane h = hyperplane_from_pq_ratio(lam, 9, 8);
    CHECK(h == hyperplane_from_normal({0, 0, 0, 0, 0, 0, 0, 1, -1}));
    CHECK(roots_outside(9, h) == 30); // 72 roots minus 42 among the first 7

    const Weight lam2 = fund(3, {{2, 1}}); // lambda_1 = lambda_2
    CHECK(hyperplane_from_pq_ratio(lam2, 1, 2) ==
          hyperplane_from_normal({1, -1, 0, 0}));

    CHECK_THROWS_AS(hyperplane_from_pq_ratio(lam2, 2, 2), std::invalid_argument);
    const Weight zero_first({0, 0, 9, -9, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(hyperplane_from_pq_ratio(zero_first, 1, 2), std::invalid_argument);
}

TEST_CASE("counting identities") {
    const Weight lam = fund(6, {{3, 1}});
    const Hyperplane h = hyperplane_from_span(paper_omega(PaperOmega::thi, 6));
    const auto elements = orbit(lam).elements;
    const long long outside = count_outside(elements, h);
    long long inside = 0;
    for (const Weight& w : elements)
        if (on_hyperplane(w, h)) ++inside;
    CHECK(inside + outside == static_cast<long long>(elements.size()));
    CHECK(weighted_count_outside(lam, h) >= orbit_count_outside(lam, h));
    // Roots come in +/- pairs, so the count off any hyperplane is even.
    for (int n = 3; n <= 7; ++n) {
        Coords v(n, 0);
        v[0] = 2;
        v[1] = -1;
        CHECK(roots_outside(n, hyperplane_from_normal(v)) % 2 == 0);
    }
}

TEST_CASE("multinomials and their exhaustive inequalities") {
    CHECK(multinomial(4, {2, 2}) == 6);
    for (int n = 2; n <= 9; ++n) CHECK(multinomial(n, {1, n - 1}) == n);
    CHECK_THROWS_AS(multinomial(4, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(multinomial(4, {0, 4}), std::invalid_argument);
    CHECK(verify_cmb1(12).empty());
    CHECK(verify_cmb2(12).empty());
}

TEST_CASE("rank tracker push/pop") {
    RankTracker rt;
    CHECK(rt.push({1, -1, 0, 0}));
    CHECK(rt.rank() == 1);
    CHECK_FALSE(rt.push({2, -2, 0, 0})); // dependent
    CHECK(rt.push({0, 1, -1, 0}));
    CHECK(rt.rank() == 2);
    rt.pop_independent();
    CHECK(rt.rank() == 1);
    CHECK(rt.push({0, 1, -1, 0}));
    CHECK(rt.push({0, 0, 1, -1}));
    CHECK(rt.rank() == 3);
}
