#include "suq/paper_props.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace suq {

namespace {

bool is_root_vec(const Weight& x) {
    const int n = x.n();
    int pos = 0, neg = 0, nz = 0;
    for (long long v : x.s) {
        if (v == 0) continue;
        ++nz;
        if (v == n) ++pos;
        else if (v == -n) ++neg;
    }
    return nz == 2 && pos == 1 && neg == 1;
}

struct HView {
    int p, q;
    long long c_num, c_den;
    Hyperplane h;
};

// The (p,q,c) hyperplane family derived from x itself: c = x_q/x_p, with
// degenerate instances (x_p = 0) skipped.
std::vector<HView> hyperplanes_for(const Weight& x) {
    const int n = x.n();
    std::vector<HView> out;
    for (auto [p, q] : {std::pair{1, 2}, std::pair{1, n}, std::pair{n, n - 1}}) {
        if (x.s[p - 1] == 0) continue;
        out.push_back({p, q, x.s[q - 1], x.s[p - 1], hyperplane_from_pq_ratio(x, p, q)});
    }
    return out;
}

long long weighted_outside(const WeightSystem& ws, const Hyperplane& h) {
    long long total = 0;
    for (const auto& [w, m] : ws.entries)
        if (!on_hyperplane(w, h)) total += m;
    return total;
}

enum : unsigned {
    EST = 1u,
    LA2 = 2u,
    ELST = 4u,
    ESN = 8u,
    ES2N = 16u,
    AMPL = 32u,
    ESON = 64u
};

void check_props(const Weight& x, unsigned mask, const VerifyOptions& opt,
                 std::vector<CounterexampleRecord>& out) {
    const int n = x.n();
    const long long N = n; // scaled unit: a real-coordinate difference of 1
    const long long shift = opt.bound_shift;

    // Distinct-value statistics K, k, m(t), m_0.
    std::map<long long, int> m;
    for (long long v : x.s) ++m[v];
    const int k = static_cast<int>(m.size());
    int m0 = 0;
    for (const auto& [t, c] : m) m0 = std::max(m0, c);

    auto seq_eq = [&](int lo, int hi) { // x_lo = ... = x_hi (1-based, inclusive)
        for (int i = lo; i < hi; ++i)
            if (x.s[i - 1] != x.s[i]) return false;
        return true;
    };
    const bool in_delta = is_root_vec(x);
    bool symmetric = true;
    for (int i = 0; i < n; ++i)
        if (x.s[n - 1 - i] != -x.s[i]) symmetric = false;

    const bool need_inn = mask & (ELST | ESN | ES2N | AMPL | ESON);
    const std::vector<Weight> elements = orbit(x).elements;
    WeightSystem ws;
    if (need_inn) ws = weight_system(x);

    for (const HView& hv : hyperplanes_for(x)) {
        const long long orbit_out = count_outside(elements, hv.h);
        const long long inn_out = need_inn ? weighted_outside(ws, hv.h) : 0;

        auto rec = [&](const char* prop, long long observed, long long claimed,
                       std::string tags) {
            out.push_back({prop, x, hv.p, hv.q, hv.c_num, hv.c_den, observed,
                           claimed, std::move(tags)});
        };

        if ((mask & EST) && k >= 3) {
            if (orbit_out < 2 * n - 2 + shift)
                rec("est", orbit_out, 2 * n - 2 + shift, "k>=3");
            if (m0 != n - 2 && orbit_out < 5 * (n - 2) + shift)
                rec("est", orbit_out, 5 * (n - 2) + shift, "m0!=n-2");
            if (k >= 4 && orbit_out < 4 * n + shift)
                rec("est", orbit_out, 4 * n + shift, "k>=4");
        }

        if (mask & LA2) {
            if (orbit_out < 2 + shift)
                rec("la2", orbit_out, 2 + shift, "lower-bound");
            if (orbit_out == 2) {
                const bool c1 = seq_eq(2, n);
                const bool c2 = seq_eq(1, n - 1);
                const bool c3 = n == 4 && seq_eq(1, 2) && seq_eq(3, 4);
                if (!c1 && !c2 && !c3)
                    rec("la2", orbit_out, 2, "equality-case-unmatched");
            }
        }

        if (mask & ELST) {
            if (inn_out < 2 + shift)
                rec("elst", inn_out, 2 + shift, "lower-bound");
            if (inn_out == 2) {
                const bool c1 = x.s[0] - x.s[1] == N && seq_eq(2, n);
                const bool c2 = seq_eq(1, n - 1) && x.s[n - 2] - x.s[n - 1] == N;
                const bool c3 = n == 4 && seq_eq(1, 2) && x.s[1] - x.s[2] == N &&
                                seq_eq(3, 4);
                if (!c1 && !c2 && !c3)
                    rec("elst", inn_out, 2, "equality-case-unmatched");
            }
        }

        if ((mask & ESN) && !in_delta && k >= 3) {
            if (inn_out < 2 * n + shift)
                rec("esn", inn_out, 2 * n + shift, "lower-bound");
            if (inn_out == 2 * n) {
                const bool c1 = seq_eq(1, 2) && seq_eq(3, n - 1) &&
                                x.s[1] - x.s[2] == N && x.s[n - 2] - x.s[n - 1] == N;
                const bool c2 = seq_eq(2, n - 2) && seq_eq(n - 1, n) &&
                                x.s[0] - x.s[1] == N && x.s[n - 3] - x.s[n - 2] == N;
                if (!c1 && !c2)
                    rec("esn", inn_out, 2 * n, "equality-case-unmatched");
            }
        }

        if ((mask & ES2N) && k == 2 && x.s[0] - x.s[n - 1] > N &&
            inn_out <= 2 * n + shift) {
            const bool c1 = x.s[0] - x.s[1] == 2 * N && seq_eq(2, n);
            const bool c2 = seq_eq(1, n - 1) && x.s[n - 2] - x.s[n - 1] == 2 * N;
            const bool c3 = n == 4 && x.s == Coords{N, N, -N, -N};
            if (!c1 && !c2 && !c3)
                rec("es2n", inn_out, 2 * n, "case-list-unmatched");
        }

        if ((mask & AMPL) && x.s[0] - x.s[n - 1] > 2 * N) {
            if (inn_out <= 2 * n + shift)
                rec("ampl", inn_out, 2 * n + 1 + shift, "inn-strict");
            if (orbit_out < 2 + shift)
                rec("ampl", orbit_out, 2 + shift, "orbit-lower");
        }

        if ((mask & ESON) && !in_delta && x.s[0] - x.s[n - 1] > N && symmetric &&
            inn_out <= 4 * n + shift) {
            if (!(n == 4 && x.s == Coords{N, N, -N, -N}))
                rec("eson", inn_out, 4 * n, "symmetric-case-unmatched");
        }
    }
}

std::vector<CounterexampleRecord> run_over_lattice(unsigned mask,
                                                   const VerifyOptions& opt) {
    std::vector<Weight> xs;
    for (int n = 3; n <= opt.max_n; ++n) {
        std::vector<Weight> v = enumerate_dominant_lattice(n, opt.coord_bound);
        xs.insert(xs.end(), v.begin(), v.end());
    }
    std::vector<std::vector<CounterexampleRecord>> slots(xs.size());
    const long long total = static_cast<long long>(xs.size());
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < total; ++i)
            check_props(xs[i], mask, opt, slots[i]);
    } else {
        for (long long i = 0; i < total; ++i)
            check_props(xs[i], mask, opt, slots[i]);
    }
    std::vector<CounterexampleRecord> merged;
    for (auto& s : slots)
        for (auto& r : s) merged.push_back(std::move(r));
    return merged;
}

} // namespace

std::vector<Weight> enumerate_dominant_lattice(int n, int coord_bound) {
    std::vector<Weight> out;
    const long long B = static_cast<long long>(coord_bound) * n;
    for (int t = 0; t < n; ++t) {
        // Candidate coordinate values, descending: v ≡ t (mod n), |v| <= B.
        std::vector<long long> vals;
        for (long long v = B; v >= -B; --v)
            if (((v % n) + n) % n == t) vals.push_back(v);
        Coords cur(n);
        auto rec = [&](auto&& self, int i, size_t start, long long psum) -> void {
            if (i == n) {
                if (psum == 0) {
                    Weight w{Coords(cur)};
                    if (!w.is_zero()) out.push_back(std::move(w));
                }
                return;
            }
            const int rest = n - i;
            for (size_t vi = start; vi < vals.size(); ++vi) {
                const long long v = vals[vi];
                // Remaining coordinates are <= v and >= -B.
                if (psum + v + static_cast<long long>(rest - 1) * (-B) > 0) continue;
                if (psum + v + static_cast<long long>(rest - 1) * v < 0) break;
                cur[i] = v;
                self(self, i + 1, vi, psum + v);
            }
        };
        rec(rec, 0, 0, 0);
    }
    return out;
}

std::vector<CounterexampleRecord> verify_est(const VerifyOptions& opt) {
    return run_over_lattice(EST, opt);
}

std::vector<CounterexampleRecord> verify_la2_elst(const VerifyOptions& opt) {
    return run_over_lattice(LA2 | ELST, opt);
}

std::vector<CounterexampleRecord> verify_esn_es2n_ampl_eson(const VerifyOptions& opt) {
    return run_over_lattice(ESN | ES2N | AMPL | ESON, opt);
}

namespace {

bool in_short_list(int r, const std::vector<long long>& a) {
    auto is = [&](std::vector<std::pair<int, long long>> entries) {
        std::vector<long long> b(r, 0);
        for (auto [i, v] : entries) b[i - 1] += v;
        return a == b;
    };
    if (is({{1, 2}}) || is({{r, 2}})) return true;                // 2phi_1, 2phi_r
    if (is({{1, 1}, {r - 1, 1}}) || is({{2, 1}, {r, 1}})) return true;
    if (r == 3 && is({{2, 2}})) return true;
    return false;
}

void check_lah_weight(int r, const std::vector<long long>& a, const VerifyOptions& opt,
                      std::vector<CounterexampleRecord>& out) {
    const int n = r + 1;
    const long long shift = opt.bound_shift;
    const Weight lam = weight_from_fundamental(a);
    const long long height = [&] {
        long long h = 0;
        for (long long v : a) h += v;
        return h;
    }();
    if (height == 0 || height == 1) return; // zero or pure fundamental
    if (is_root_vec(lam)) return;           // lam in Delta (the highest root)
    if (in_short_list(r, a)) return;        // allowed list: excluded from the scan
    const bool symmetric = dominant_representative(-lam) == lam;
    const WeightSystem ws = weight_system(lam);
    const RootDatum datum = make_root_datum(r);
    for (const SimpleSubset& sub : corank2_connected_subsets(r)) {
        std::vector<Weight> span_vecs = {lam};
        for (int i : sub.indices) span_vecs.push_back(datum.simple[i - 1]);
        if (span_rank(span_vecs) != r - 1) continue;
        const Hyperplane h = hyperplane_from_span(span_vecs);
        const long long inn_out = weighted_outside(ws, h);
        // The lemma's count hypotheses must fail for every such H.
        if (inn_out <= 4 * n + shift && (symmetric || inn_out <= 2 * n + shift)) {
            out.push_back({"lah", lam, 0, 0, 0, 1, inn_out, 4 * n + shift,
                           "Pi'=(" + std::to_string(sub.indices.front()) + ".." +
                               std::to_string(sub.indices.back()) + ")"});
        }
    }
}

} // namespace

std::vector<CounterexampleRecord> verify_lah(const std::vector<int>& r_set,
                                             const VerifyOptions& opt) {
    std::vector<int> rs(r_set);
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

    // Flatten the (r, fundamental coordinates) jobs for the parallel loop.
    std::vector<std::pair<int, std::vector<long long>>> jobs;
    for (int r : rs) {
        if (r < 3) continue;
        std::vector<long long> a(r, 0);
        auto gen = [&](auto&& self, int i, long long rest) -> void {
            if (i == r) {
                jobs.emplace_back(r, a);
                return;
            }
            for (long long v = 0; v <= rest; ++v) {
                a[i] = v;
                self(self, i + 1, rest - v);
            }
            a[i] = 0;
        };
        gen(gen, 0, opt.height_bound);
    }

    std::vector<std::vector<CounterexampleRecord>> slots(jobs.size());
    const long long total = static_cast<long long>(jobs.size());
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < total; ++i)
            check_lah_weight(jobs[i].first, jobs[i].second, opt, slots[i]);
    } else {
        for (long long i = 0; i < total; ++i)
            check_lah_weight(jobs[i].first, jobs[i].second, opt, slots[i]);
    }
    std::vector<CounterexampleRecord> merged;
    for (auto& s : slots)
        for (auto& rec : s) merged.push_back(std::move(rec));

    // The fundamental-weight bound at r >= 8: phi_j, 3 <= j <= r-2,
    // Pi' = (1..r-2) forces strictly more than 4n weights off H.
    const RootDatum* datum = nullptr;
    for (int r : rs) {
        if (r < 8) continue;
        const int n = r + 1;
        const RootDatum d = make_root_datum(r);
        (void)datum;
        for (int j = 3; j <= r - 2; ++j) {
            const Weight lam = d.fundamental[j - 1];
            std::vector<Weight> span_vecs = {lam};
            for (int i = 1; i <= r - 2; ++i) span_vecs.push_back(d.simple[i - 1]);
            if (span_rank(span_vecs) != r - 1) continue;
            const Hyperplane h = hyperplane_from_span(span_vecs);
            // phi_j is minuscule: every weight has multiplicity one.
            const long long inn_out = orbit_count_outside(lam, h);
            if (!(inn_out > 4 * n + opt.bound_shift))
                merged.push_back({"lah1", lam, 0, 0, 0, 1, inn_out,
                                  4 * n + opt.bound_shift + 1,
                                  "phi_" + std::to_string(j)});
        }
    }
    return merged;
}

} // namespace suq
