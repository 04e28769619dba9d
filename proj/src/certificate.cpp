#include "suq/certificate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace suq {

namespace {

bool is_root_coords(const Coords& c) {
    const int n = static_cast<int>(c.size());
    int pos = 0, neg = 0, nz = 0;
    for (long long v : c) {
        if (v == 0) continue;
        ++nz;
        if (v == n) ++pos;
        else if (v == -n) ++neg;
    }
    return nz == 2 && pos == 1 && neg == 1;
}

bool diff_is_root(const Weight& a, const Weight& b) {
    Coords c(a.s);
    for (int i = 0; i < a.n(); ++i) c[i] -= b.s[i];
    return is_root_coords(c);
}

bool sum_is_root(const Weight& a, const Weight& b) {
    Coords c(a.s);
    for (int i = 0; i < a.n(); ++i) c[i] += b.s[i];
    return is_root_coords(c);
}

void require_valid_highest(const Weight& lam) {
    if (!lam.in_lattice()) throw std::invalid_argument("invalid-weight: not in P");
    if (!lam.is_dominant()) throw std::invalid_argument("invalid-weight: not dominant");
    if (lam.is_zero()) throw std::invalid_argument("invalid-weight: zero weight");
}

} // namespace

ConditionReport omega_conditions(const Weight& lam, const std::vector<Weight>& omega) {
    if (omega.empty()) throw std::invalid_argument("invalid-weight: empty Omega");
    ConditionReport rep;
    const Weight dom = dominant_representative(lam);
    rep.subset_of_orbit =
        std::all_of(omega.begin(), omega.end(), [&](const Weight& w) {
            return w.n() == lam.n() && dominant_representative(w) == dom;
        });
    rep.span_dim = span_rank(omega);
    rep.codim1_span = rep.span_dim == lam.rank() - 1;
    rep.diff_free = true;
    rep.sum_free = true;
    for (size_t i = 0; i < omega.size(); ++i)
        for (size_t j = i; j < omega.size(); ++j) {
            if (i != j && diff_is_root(omega[i], omega[j])) rep.diff_free = false;
            if (sum_is_root(omega[i], omega[j])) rep.sum_free = false;
        }
    rep.two_lambda_ok = two_lambda_outside(dom);
    return rep;
}

CertResult evaluate_nosm(const Weight& lam, const std::vector<Weight>& omega) {
    require_valid_highest(lam);
    const ConditionReport rep = omega_conditions(lam, omega);
    const int d = delta(lam);
    if (!rep.subset_of_orbit) return Rejection{"Omega is not a subset of the orbit"};
    if (!rep.codim1_span)
        return Rejection{"span dimension " + std::to_string(rep.span_dim) +
                         ", expected " + std::to_string(lam.rank() - 1)};
    if (!rep.diff_free) return Rejection{"(Omega - Omega) meets Delta"};
    if (d == 1 && !rep.sum_free) return Rejection{"(Omega + Omega) meets Delta"};
    if (d == 1 && !rep.two_lambda_ok) return Rejection{"2*lambda in Delta u (Delta+Delta)"};

    Certificate cert;
    cert.lambda = lam;
    cert.delta = d;
    cert.omega = omega;
    cert.hyperplane = hyperplane_from_span(omega);
    const InnData inn = dominant_multiplicities(lam);
    cert.inn_outside_weighted = weighted_count_outside(inn, cert.hyperplane);
    cert.lambda_outside = orbit_count_outside(lam, cert.hyperplane);
    cert.roots_outside_count = roots_outside(lam.n(), cert.hyperplane);
    cert.kind = CertKind::NOSM;
    cert.margin = d * cert.inn_outside_weighted - (cert.roots_outside_count + 6);
    if (cert.margin <= 0)
        return Rejection{"counting inequality fails: delta*" +
                         std::to_string(cert.inn_outside_weighted) + " <= " +
                         std::to_string(cert.roots_outside_count) + "+6"};
    cert.route = "explicit";
    return cert;
}

CertResult evaluate_nom(const Weight& lam, const std::vector<Weight>& omega) {
    require_valid_highest(lam);
    const ConditionReport rep = omega_conditions(lam, omega);
    const int d = delta(lam);
    if (!rep.subset_of_orbit) return Rejection{"Omega is not a subset of the orbit"};
    if (!rep.codim1_span)
        return Rejection{"span dimension " + std::to_string(rep.span_dim) +
                         ", expected " + std::to_string(lam.rank() - 1)};
    if (!rep.diff_free) return Rejection{"(Omega - Omega) meets Delta"};
    if (d == 1 && !rep.sum_free) return Rejection{"(Omega + Omega) meets Delta"};
    if (d == 1 && !rep.two_lambda_ok) return Rejection{"2*lambda in Delta u (Delta+Delta)"};
    if (dominant_below(lam).size() != 1) return Rejection{"Inn(Lambda) != Lambda"};

    Certificate cert;
    cert.lambda = lam;
    cert.delta = d;
    cert.omega = omega;
    cert.hyperplane = hyperplane_from_span(omega);
    // H-perp /\ Delta empty: the normal line must not contain a root.
    if (is_root_coords(cert.hyperplane.normal)) {
        return Rejection{"H-perp contains a root"};
    } else {
        Coords neg(cert.hyperplane.normal);
        for (auto& v : neg) v = -v;
        if (is_root_coords(neg)) return Rejection{"H-perp contains a root"};
    }
    cert.lambda_outside = orbit_count_outside(lam, cert.hyperplane);
    cert.inn_outside_weighted = cert.lambda_outside;
    cert.roots_outside_count = roots_outside(lam.n(), cert.hyperplane);
    cert.kind = CertKind::NOM;
    cert.margin = 0;
    if (d * cert.lambda_outside != cert.roots_outside_count + 2)
        return Rejection{"exact equality fails: delta*" +
                         std::to_string(cert.lambda_outside) + " != " +
                         std::to_string(cert.roots_outside_count) + "+2"};
    cert.route = "explicit";
    return cert;
}

std::vector<Weight> paper_omega(PaperOmega kind, int r) {
    const int n = r + 1;
    auto lam_set = [&](std::vector<int> idx) {
        const int k = static_cast<int>(idx.size());
        Coords c(n, -k);
        for (int i : idx) c[i - 1] += n;
        return Weight(std::move(c));
    };
    switch (kind) {
    case PaperOmega::alg: {
        if (r < 3) throw std::invalid_argument("not-applicable: alg needs r >= 3");
        std::vector<Weight> out;
        for (int i = 2; i <= r; ++i) {
            // lambda^{(i+1)}_{(i-1,i)}
            Coords c(n, -1);
            c[i - 2] += n;
            c[i - 1] += n;
            c[i] -= n;
            out.push_back(Weight(std::move(c)));
        }
        return out;
    }
    case PaperOmega::all: {
        if (r != 3) throw std::invalid_argument("not-applicable: all needs r = 3");
        return {Weight({6, 2, -2, -6}), Weight({6, -6, -2, 2})};
    }
    case PaperOmega::thi: {
        if (r != 6) throw std::invalid_argument("not-applicable: thi needs r = 6");
        return {lam_set({1, 2, 5}), lam_set({3, 4, 5}), lam_set({1, 4, 6}),
                lam_set({2, 3, 6}), lam_set({5, 6, 7})};
    }
    case PaperOmega::ths: {
        if (r != 7) throw std::invalid_argument("not-applicable: ths needs r = 7");
        return {lam_set({1, 2, 7}), lam_set({3, 4, 7}), lam_set({5, 6, 7}),
                lam_set({4, 5, 8}), lam_set({1, 6, 8}), lam_set({2, 3, 8})};
    }
    }
    throw std::invalid_argument("not-applicable: unknown construction");
}

namespace {

struct Search {
    const Weight& lam;
    int n;
    int r;
    int delta_;
    bool need_sum_free;
    long long budget;
    bool exhausted = false;
    std::vector<Weight> chosen;
    RankTracker rank;

    bool compatible(const Weight& w) const {
        for (const Weight& c : chosen) {
            if (diff_is_root(w, c)) return false;
            if (need_sum_free && sum_is_root(w, c)) return false;
        }
        if (need_sum_free && sum_is_root(w, w)) return false;
        return true;
    }

    // Find a rank-increasing, difference-free subset of cands reaching the
    // target rank; `accept` validates a completed subset (and may reject,
    // in which case the search keeps going).
    template <typename Accept>
    bool backtrack(const std::vector<Weight>& cands, size_t start, int target,
                   Accept&& accept) {
        if (rank.rank() == target) return accept(chosen);
        for (size_t idx = start; idx < cands.size(); ++idx) {
            if (budget <= 0) { exhausted = true; return false; }
            --budget;
            const Weight& w = cands[idx];
            if (!compatible(w)) continue;
            if (!rank.push(w.s)) continue;
            chosen.push_back(w);
            if (backtrack(cands, idx + 1, target, accept)) return true;
            chosen.pop_back();
            rank.pop_independent();
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

std::optional<Certificate> search_certificate(const Weight& lam, long long budget) {
    require_valid_highest(lam);
    const int n = lam.n();
    const int r = lam.rank();
    const int d = delta(lam);
    const auto a = fundamental_coords(lam);

    // Route 1: published constructions.
    {
        std::optional<PaperOmega> kind;
        std::string name;
        std::vector<long long> phi2_phir(r, 0), all3 = {1, 1, 1}, phi3(r, 0);
        if (r >= 2) { phi2_phir[1] = 1; phi2_phir[r - 1] += 1; }
        if (r >= 3) phi3[2] = 1;
        if (r >= 3 && a == phi2_phir) { kind = PaperOmega::alg; name = "paper:alg"; }
        else if (r == 3 && a == all3) { kind = PaperOmega::all; name = "paper:all"; }
        else if (r == 6 && a == phi3) { kind = PaperOmega::thi; name = "paper:thi"; }
        else if (r == 7 && a == phi3) { kind = PaperOmega::ths; name = "paper:ths"; }
        if (kind) {
            CertResult res = evaluate_nosm(lam, paper_omega(*kind, r));
            if (auto* cert = std::get_if<Certificate>(&res)) {
                cert->route = name;
                return *cert;
            }
        }
    }

    if (d == 1 && !two_lambda_outside(lam)) return std::nullopt;

    const InnData inn = dominant_multiplicities(lam);
    const std::vector<Weight> elements = orbit(lam).elements;
    const long long all_roots = static_cast<long long>(n) * (n - 1);
    std::set<Coords> tried;
    Search search{lam, n, r, d, d == 1, budget};

    auto try_hyperplane = [&](const Hyperplane& h,
                              const std::string& route) -> std::optional<Certificate> {
        if (!tried.insert(h.normal).second) return std::nullopt;
        const long long ro = roots_outside(n, h);
        const long long w = weighted_count_outside(inn, h);
        const long long margin = static_cast<long long>(d) * w - (ro + 6);
        if (margin <= 0) return std::nullopt;
        std::vector<Weight> on_h;
        for (const Weight& e : elements)
            if (on_hyperplane(e, h)) on_h.push_back(e);
        if (static_cast<int>(on_h.size()) < r - 1) return std::nullopt;
        std::optional<Certificate> found;
        search.chosen.clear();
        search.rank = RankTracker{};
        search.backtrack(on_h, 0, r - 1, [&](const std::vector<Weight>& omega) {
            Certificate cert;
            cert.lambda = lam;
            cert.delta = d;
            cert.omega = omega;
            cert.hyperplane = h;
            cert.inn_outside_weighted = w;
            cert.lambda_outside = count_outside(elements, h);
            cert.roots_outside_count = ro;
            cert.kind = CertKind::NOSM;
            cert.margin = margin;
            cert.route = route;
            found = std::move(cert);
            return true;
        });
        return found;
    };

    // Route 2: hyperplanes spanned by {lambda} u Pi', Pi' in Pc.
    const RootDatum datum = make_root_datum(r);
    for (const SimpleSubset& sub : corank2_connected_subsets(r)) {
        std::vector<Weight> span_vecs = {lam};
        for (int i : sub.indices) span_vecs.push_back(datum.simple[i - 1]);
        if (span_rank(span_vecs) != r - 1) continue;
        auto cert = try_hyperplane(hyperplane_from_span(span_vecs), "pc-span");
        if (cert) return cert;
        if (search.exhausted) return std::nullopt;
    }

    // Route 3: the (p,q,c) family derived from lambda itself.
    for (auto [p, q] : {std::pair{1, 2}, std::pair{1, n}, std::pair{n, n - 1}}) {
        if (lam.s[p - 1] == 0) continue;
        auto cert = try_hyperplane(hyperplane_from_pq_ratio(lam, p, q), "pq-family");
        if (cert) return cert;
        if (search.exhausted) return std::nullopt;
    }

    // Route 4: unrestricted greedy-rank backtracking over the whole orbit.
    {
        std::optional<Certificate> found;
        search.chosen.clear();
        search.rank = RankTracker{};
        search.backtrack(elements, 0, r - 1, [&](const std::vector<Weight>& omega) {
            Hyperplane h = hyperplane_from_span(omega);
            if (!tried.insert(h.normal).second) return false;
            const long long ro = roots_outside(n, h);
            const long long w = weighted_count_outside(inn, h);
            const long long margin = static_cast<long long>(d) * w - (ro + 6);
            if (margin <= 0) return false;
            Certificate cert;
            cert.lambda = lam;
            cert.delta = d;
            cert.omega = omega;
            cert.hyperplane = h;
            cert.inn_outside_weighted = w;
            cert.lambda_outside = count_outside(elements, h);
            cert.roots_outside_count = ro;
            cert.kind = CertKind::NOSM;
            cert.margin = margin;
            cert.route = "generic";
            found = std::move(cert);
            return true;
        });
        if (found) return found;
    }
    (void)all_roots;
    return std::nullopt;
}

bool reverify(const Certificate& cert) {
    try {
        CertResult res = cert.kind == CertKind::NOSM
                             ? evaluate_nosm(cert.lambda, cert.omega)
                             : evaluate_nom(cert.lambda, cert.omega);
        const auto* fresh = std::get_if<Certificate>(&res);
        if (!fresh) return false;
        return fresh->hyperplane == cert.hyperplane && fresh->delta == cert.delta &&
               fresh->inn_outside_weighted == cert.inn_outside_weighted &&
               fresh->lambda_outside == cert.lambda_outside &&
               fresh->roots_outside_count == cert.roots_outside_count &&
               fresh->margin == cert.margin;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace suq
