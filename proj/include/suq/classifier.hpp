#pragma once

#include "suq/certificate.hpp"
#include "suq/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suq {

enum class Verdict { CANDIDATE_SMOOTH, NOT_SMOOTH, NOT_MANIFOLD, UNRESOLVED };

std::string to_string(Verdict v);

struct Report {
    int rank = 0;
    Weight input;
    Weight normalized;
    int delta = 2;
    Verdict verdict = Verdict::UNRESOLVED;
    std::optional<Certificate> certificate;
    std::string mechanism;            // annotation or certificate route
    bool candidate_list_member = false;     // on the candidate-smooth short list
    std::string mechanism_annotation;  // cited mechanism class, or em dash
};

// Replace lambda by its dual when the convention prefers the dual form:
// fundamental phi_j with j <= n/2; phi_1+phi_{r-1} becomes phi_2+phi_r;
// self-dual weights stay put; otherwise the lexicographically smaller
// fundamental-coordinate vector of the pair.  Involution-consistent:
// normalize_outer(dual(lam)) == normalize_outer(lam).
Weight normalize_outer(const Weight& lam);

struct ExceptionalStatus {
    bool member = false;
    std::string annotation = "—"; // em dash when not exceptional
};

// Membership in the candidate-smooth short list, with the cited mechanism.
ExceptionalStatus exceptional_status(int r, const Weight& normalized);

struct ConditionFlags {
    bool con1 = false;
    bool con2 = false;
};

// Syntactic side conditions on (lambda, Pi'), Pi' a corank-2 interval:
// con1: lambda in {phi_3..phi_{r-2}} and (Pi' = (1..r-2) implies r < 8);
// con2: Pi_lambda /\ Pi' is a singleton {alpha} on the boundary of Pi'
//       with <lambda|alpha> = 1.
ConditionFlags condition_check(const Weight& lam, const SimpleSubset& pi_prime);

// Normalize, check the exceptional short list, otherwise search for a
// non-smoothness certificate.
Report classify(int r, const Weight& lam, long long budget = kDefaultSearchBudget);

struct SweepOptions {
    int r_min = 2;
    int r_max = 8;
    int height_max = 2;
    long long budget = kDefaultSearchBudget;
    bool parallel = true;
};

// Classify every dominant nonzero weight with coordinate-sum <= height_max
// per rank; deterministic row order (rank, then lexicographic coordinates).
std::vector<Report> sweep(const SweepOptions& opt);

// All fundamental-coordinate tuples with 1 <= sum <= height_max,
// lexicographically ascending.
std::vector<std::vector<long long>> dominant_fundamental_tuples(int r, int height_max);

} // namespace suq
