#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace suq {

using Coords = std::vector<long long>;

// Point of the weight space of A_r, stored as n-scaled integer
// epsilon-coordinates (n = r+1): s = n*x with sum(s) = 0.  Lattice points
// of P have all coordinates congruent to one another mod n; the common
// residue identifies the P/Q coset.
struct Weight {
    Coords s;

    Weight() = default;
    explicit Weight(Coords c);

    int n() const { return static_cast<int>(s.size()); }
    int rank() const { return n() - 1; }
    bool is_zero() const;
    bool is_dominant() const;      // coordinates non-increasing (lies in C)
    bool in_lattice() const;       // member of P
    long long coset_class() const; // t in [0, n); member of Q iff t == 0

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(long long k, const Weight& a);

// Sorted set of simple-root indices, subset of {1..r} in the path-graph
// numbering alpha_1 .. alpha_r.
struct SimpleSubset {
    std::vector<int> indices;

    bool contains(int i) const;
    bool connected() const;       // indices form an interval
    friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;
};

struct RootDatum {
    int r = 0;
    int n = 0;
    std::vector<std::pair<int, int>> roots; // (i,j), 1-based, i != j: eps_i - eps_j
    std::vector<Weight> simple;             // alpha_1 .. alpha_r
    std::vector<Weight> fundamental;        // phi_1 .. phi_r
    Weight rho;                             // half-sum of positive roots
};

RootDatum make_root_datum(int r);

// eps_i - eps_j as a scaled weight (1-based indices).
Weight root_weight(int n, int i, int j);

// <lam | eps_i - eps_j> = (s_i - s_j)/n.  Throws if lam is not in P.
long long pairing(const Weight& lam, int i, int j);
long long pairing(const Weight& lam, const Weight& root);

Weight dominant_representative(const Weight& w);

// Coordinates a_i = <lam | alpha_i> in the basis of fundamental weights.
std::vector<long long> fundamental_coords(const Weight& lam);
Weight weight_from_fundamental(const std::vector<long long>& a);

// The distinguished boundary subset of the simple roots: {1,2,r-1,r} for
// r >= 6, the whole of Pi otherwise.
SimpleSubset boundary_subset(int r);
// Same rule applied to the subpath (lo..hi).
SimpleSubset boundary_of_interval(int lo, int hi);

// The family Pc: all connected simple-root subsets of order r-2, i.e. the
// three intervals (1..r-2), (2..r-1), (3..r).  Empty for r < 3.
std::vector<SimpleSubset> corank2_connected_subsets(int r);

// Indices of simple roots with nonzero pairing against lam.
SimpleSubset pi_lambda(const Weight& lam);

long long dot(const Coords& a, const Coords& b);

} // namespace suq
