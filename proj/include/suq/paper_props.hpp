#pragma once

#include "suq/hyperplane.hpp"
#include "suq/orbit.hpp"
#include "suq/weights.hpp"

#include <string>
#include <vector>

namespace suq {

// One violated claim from the exhaustive desk-scale verifiers.  Records exist
// only when the observed value contradicts the claimed bound (or an equality
// instance matches none of the allowed coordinate patterns).
struct CounterexampleRecord {
    std::string prop;  // which claim: est, la2, elst, esn, es2n, ampl, eson, lah, lah1
    Weight x;          // the enumerated dominant lattice vector
    int p = 0, q = 0;  // hyperplane family indices (0 when H comes from a span)
    long long c_num = 0, c_den = 1; // ratio c = x_q / x_p in scaled coordinates
    long long observed = 0;
    long long claimed = 0;
    std::string tags;  // which sub-case / hypothesis class fired
};

struct VerifyOptions {
    int max_n = 7;       // ambient dimension bound (n = r+1 >= 3)
    int coord_bound = 3; // |x_i| <= coord_bound (unscaled)
    int height_bound = 4;
    // Self-test knob: tightens every claimed bound and loosens every
    // hypothesis threshold by this amount.  Nonzero values must surface
    // spurious "violations" -- guards against a vacuously green harness.
    long long bound_shift = 0;
    bool parallel = true;
};

// All nonzero dominant lattice points of P in the trace-zero hyperplane of
// R^n with |x_i| <= coord_bound, deterministic order (coset class, then
// decreasing lexicographic in scaled coordinates).
std::vector<Weight> enumerate_dominant_lattice(int n, int coord_bound);

// Orbit-count lower bounds for vectors with >= 3 distinct coordinate values.
std::vector<CounterexampleRecord> verify_est(const VerifyOptions& opt);

// |Wx \ H| >= 2 and the weighted version, with their equality-case patterns.
std::vector<CounterexampleRecord> verify_la2_elst(const VerifyOptions& opt);

// The >= 2n bound, the two-valued gap case, the > 2n corollary, and the
// symmetric-orbit pin-down to n = 4, x = (1,1,-1,-1).
std::vector<CounterexampleRecord> verify_esn_es2n_ampl_eson(const VerifyOptions& opt);

// Hyperplanes spanned by {lambda} u Pi': the short-list lemma (any highest
// weight outside {2phi_1, 2phi_r, phi_1+phi_{r-1}, phi_2+phi_r, 2phi_2@r=3}
// violates the count hypotheses) and the > 4n bound for phi_j at r >= 8.
std::vector<CounterexampleRecord> verify_lah(const std::vector<int>& r_set,
                                             const VerifyOptions& opt);

} // namespace suq
