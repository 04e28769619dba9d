#include "suq/classifier.hpp"

#include "suq/duality.hpp"

#include <algorithm>
#include <stdexcept>

namespace suq {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::CANDIDATE_SMOOTH: return "CANDIDATE_SMOOTH";
    case Verdict::NOT_SMOOTH: return "NOT_SMOOTH";
    case Verdict::NOT_MANIFOLD: return "NOT_MANIFOLD";
    case Verdict::UNRESOLVED: return "UNRESOLVED";
    }
    return "UNRESOLVED";
}

namespace {

std::vector<long long> unit(int r, int j, long long c = 1) {
    std::vector<long long> a(r, 0);
    a[j - 1] = c;
    return a;
}

bool is_fund(const std::vector<long long>& a, int j) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != (static_cast<int>(i) + 1 == j ? 1 : 0)) return false;
    return true;
}

} // namespace

Weight normalize_outer(const Weight& lam) {
    const Weight d = dominant_representative(lam);
    if (d.is_zero() || !d.in_lattice())
        throw std::invalid_argument("invalid-weight: need a nonzero lattice weight");
    const int r = d.rank();
    const int n = d.n();
    const Weight dual = dual_weight(d);
    if (dual == d) return d;
    const auto a = fundamental_coords(d);
    const auto b = fundamental_coords(dual);
    // Pure fundamental: prefer phi_j with 2j <= n.
    for (int j = 1; j <= r; ++j) {
        if (is_fund(a, j)) return 2 * j <= n ? d : dual;
        if (is_fund(b, j)) return 2 * j <= n ? dual : d;
    }
    // The adjoint-adjacent pair: phi_1+phi_{r-1} is written as phi_2+phi_r.
    if (r >= 3) {
        std::vector<long long> first(r, 0), second(r, 0);
        first[0] = 1;
        first[r - 2] += 1;
        second[1] += 1;
        second[r - 1] += 1;
        if (a == first || a == second) return a == second ? d : dual;
    }
    return a < b ? d : dual;
}

ExceptionalStatus exceptional_status(int r, const Weight& normalized) {
    const auto a = fundamental_coords(normalized);
    auto is = [&](std::vector<std::pair<int, long long>> entries) {
        std::vector<long long> b(r, 0);
        for (auto [i, v] : entries) b[i - 1] += v;
        return a == b;
    };
    if (is({{1, 1}, {r, 1}})) return {true, "polar (adjoint)"};
    if (is({{1, 1}}) || is({{r, 1}})) return {true, "polar (φ₁⊕dual)"};
    if (r == 3 && is({{2, 1}})) return {true, "polar (SO₆ cases r=3)"};
    if (r == 3 && is({{2, 2}})) return {true, "polar (SO₆ cases r=3)"};
    if (r == 7 && is({{4, 1}})) return {true, "polar (φ₄, r=7)"};
    if (r == 5 && is({{3, 1}})) return {true, "slice (φ₃, r=5)"};
    if (is({{1, 2}}) || is({{r, 2}})) return {true, "slice (2φ₁/φ₂ symmetric-space)"};
    if (r > 3 && (is({{2, 1}}) || is({{r - 1, 1}})))
        return {true, "slice (2φ₁/φ₂ symmetric-space)"};
    return {false, "—"};
}

ConditionFlags condition_check(const Weight& lam, const SimpleSubset& pi_prime) {
    const Weight d = dominant_representative(lam);
    const int r = d.rank();
    if (r < 3 || pi_prime.indices.empty() || !pi_prime.connected() ||
        static_cast<int>(pi_prime.indices.size()) != r - 2)
        throw std::invalid_argument("invalid-input: Pi' must be a corank-2 interval");
    const auto a = fundamental_coords(d);
    ConditionFlags flags;

    bool mid_fund = false;
    for (int j = 3; j <= r - 2; ++j)
        if (is_fund(a, j)) mid_fund = true;
    const bool starts_at_1 = pi_prime.indices.front() == 1;
    flags.con1 = mid_fund && (!starts_at_1 || r < 8);

    const SimpleSubset support = pi_lambda(d);
    std::vector<int> inter;
    for (int i : support.indices)
        if (pi_prime.contains(i)) inter.push_back(i);
    if (inter.size() == 1) {
        const int alpha = inter.front();
        const SimpleSubset bd =
            boundary_of_interval(pi_prime.indices.front(), pi_prime.indices.back());
        flags.con2 = bd.contains(alpha) && a[alpha - 1] == 1;
    }
    return flags;
}

Report classify(int r, const Weight& lam, long long budget) {
    if (lam.rank() != r)
        throw std::invalid_argument("invalid-input: weight rank mismatch");
    if (!lam.in_lattice() || !lam.is_dominant() || lam.is_zero())
        throw std::invalid_argument("invalid-input: need a dominant nonzero lattice weight");
    Report rep;
    rep.rank = r;
    rep.input = lam;
    rep.normalized = normalize_outer(lam);
    rep.delta = delta(rep.normalized);
    const ExceptionalStatus ex = exceptional_status(r, rep.normalized);
    rep.candidate_list_member = ex.member;
    rep.mechanism_annotation = ex.annotation;
    if (ex.member) {
        rep.verdict = Verdict::CANDIDATE_SMOOTH;
        rep.mechanism = ex.annotation;
        return rep;
    }
    std::optional<Certificate> cert = search_certificate(rep.normalized, budget);
    if (cert) {
        rep.verdict = Verdict::NOT_SMOOTH;
        rep.mechanism = cert->route;
        rep.certificate = std::move(cert);
    } else {
        rep.verdict = Verdict::UNRESOLVED;
        rep.mechanism = "search budget exhausted (" + std::to_string(budget) + " nodes)";
    }
    return rep;
}

std::vector<std::vector<long long>> dominant_fundamental_tuples(int r, int height_max) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> a(r, 0);
    auto gen = [&](auto&& self, int i, long long rest) -> void {
        if (i == r) {
            for (long long v : a)
                if (v > 0) {
                    out.push_back(a);
                    return;
                }
            return;
        }
        for (long long v = 0; v <= rest; ++v) {
            a[i] = v;
            self(self, i + 1, rest - v);
        }
        a[i] = 0;
    };
    gen(gen, 0, height_max);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Report> sweep(const SweepOptions& opt) {
    if (opt.r_min < 2 || opt.r_max < opt.r_min || opt.height_max < 1)
        throw std::invalid_argument("invalid-input: bad sweep bounds");
    std::vector<std::pair<int, std::vector<long long>>> jobs;
    for (int r = opt.r_min; r <= opt.r_max; ++r)
        for (auto& a : dominant_fundamental_tuples(r, opt.height_max))
            jobs.emplace_back(r, std::move(a));

    std::vector<Report> slots(jobs.size());
    const long long total = static_cast<long long>(jobs.size());
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < total; ++i)
            slots[i] = classify(jobs[i].first,
                                weight_from_fundamental(jobs[i].second), opt.budget);
    } else {
        for (long long i = 0; i < total; ++i)
            slots[i] = classify(jobs[i].first,
                                weight_from_fundamental(jobs[i].second), opt.budget);
    }
    return slots;
}

} // namespace suq
