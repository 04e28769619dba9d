#pragma once

#include "suq/duality.hpp"
#include "suq/hyperplane.hpp"
#include "suq/orbit.hpp"
#include "suq/weights.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace suq {

enum class CertKind { NOSM, NOM };

struct ConditionReport {
    bool subset_of_orbit = false;
    bool codim1_span = false;
    bool diff_free = false;
    bool sum_free = false;
    bool two_lambda_ok = false;
    int span_dim = 0;

    bool required_ok(int delta) const {
        return subset_of_orbit && codim1_span && diff_free &&
               (delta == 2 || (sum_free && two_lambda_ok));
    }
};

struct Certificate {
    Weight lambda;
    int delta = 2;
    std::vector<Weight> omega;
    Hyperplane hyperplane;
    long long inn_outside_weighted = 0;
    long long lambda_outside = 0;
    long long roots_outside_count = 0;
    CertKind kind = CertKind::NOSM;
    long long margin = 0;
    std::string route; // which branch of the search produced it
};

struct Rejection {
    std::string reason;
};

using CertResult = std::variant<Certificate, Rejection>;

ConditionReport omega_conditions(const Weight& lam, const std::vector<Weight>& omega);

// delta * ||Inn \ H|| > |Delta \ H| + 6 with the Omega side conditions.
CertResult evaluate_nosm(const Weight& lam, const std::vector<Weight>& omega);

// The exact-equality variant: Inn = Lambda, H-perp root-free, and
// delta * |Lambda \ H| = |Delta \ H| + 2.
CertResult evaluate_nom(const Weight& lam, const std::vector<Weight>& omega);

enum class PaperOmega { alg, all, thi, ths };

// The published Omega constructions, as literal scaled coordinates.
std::vector<Weight> paper_omega(PaperOmega kind, int r);

inline constexpr long long kDefaultSearchBudget = 1'000'000;

// Deterministic search: paper constructions, then Pc-spanned hyperplanes,
// then the (p,q,c) family, then unrestricted greedy-rank backtracking.
std::optional<Certificate> search_certificate(const Weight& lam,
                                              long long budget = kDefaultSearchBudget);

// Re-run every condition and count on the certificate's own data.
bool reverify(const Certificate& cert);

} // namespace suq
