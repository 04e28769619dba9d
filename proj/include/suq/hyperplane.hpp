#pragma once

#include "suq/orbit.hpp"
#include "suq/weights.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace suq {

// Codimension-1 subspace of <Delta>, H = {x : (x, normal) = 0}.  The normal
// is a shift-class representative: integer vector with zero sum, gcd 1,
// first nonzero entry positive.
struct Hyperplane {
    Coords normal;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// Canonicalize an arbitrary integer functional (shift plus scale).
Hyperplane hyperplane_from_normal(const Coords& v);

// Normal to span(vectors) inside <Delta>; requires span dimension r-1.
Hyperplane hyperplane_from_span(const std::vector<Weight>& vectors);

// H = {x in <Delta> : x_q = c * x_p}, c = lam_q / lam_p (1-based p, q).
Hyperplane hyperplane_from_pq_ratio(const Weight& lam, int p, int q);

// Exact rank of the span of the given weights.
int span_rank(const std::vector<Weight>& vectors);

bool on_hyperplane(const Weight& w, const Hyperplane& h);
long long count_outside(const std::vector<Weight>& set, const Hyperplane& h);
long long roots_outside(int n, const Hyperplane& h);

// || Inn(Lambda) \ H ||: weighted by the multiplicities of the irrep.
long long weighted_count_outside(const InnData& data, const Hyperplane& h);
long long weighted_count_outside(const Weight& lam, const Hyperplane& h);

// |Lambda \ H| for the orbit of lam.
long long orbit_count_outside(const Weight& lam, const Hyperplane& h);

long long multinomial(int n, const std::vector<int>& parts);

struct CmbViolation {
    int n = 0;
    std::vector<int> parts;
    long long value = 0;
};
// Exhaustive checks of the two multinomial inequalities; expected empty.
std::vector<CmbViolation> verify_cmb1(int n_max);
std::vector<CmbViolation> verify_cmb2(int n_max);

// Incremental exact rank tracking over the rational field (for backtracking
// searches): push returns true iff the vector enlarged the span.
class RankTracker {
  public:
    bool push(const Coords& v); // appends an echelon row when independent
    void pop_independent();     // undoes the latest independent push
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    using Rat = boost::rational<boost::multiprecision::cpp_int>;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> pivots_;
};

} // namespace suq
