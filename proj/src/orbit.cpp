#include "suq/orbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace suq {

namespace {

using boost::multiprecision::cpp_int;

Coords scaled_rho(int n) {
    // rho_i = (n+1)/2 - i, scaled by n (always integral).
    Coords rho(n);
    for (int i = 1; i <= n; ++i) rho[i - 1] = static_cast<long long>(n) * (n + 1 - 2 * i) / 2;
    return rho;
}

void require_dominant_lattice(const Weight& lam) {
    if (!lam.in_lattice()) throw std::invalid_argument("invalid-weight: not in P");
    if (!lam.is_dominant()) throw std::invalid_argument("invalid-weight: not dominant");
}

} // namespace

Orbit orbit(const Weight& lam) {
    if (!lam.in_lattice()) throw std::invalid_argument("invalid-weight: not in P");
    Orbit o;
    o.dominant = dominant_representative(lam);
    Coords c = o.dominant.s;
    do {
        o.elements.push_back(Weight(c));
    } while (std::prev_permutation(c.begin(), c.end()));
    return o;
}

long long orbit_size(const Weight& lam) {
    Coords c = lam.s;
    std::sort(c.begin(), c.end());
    const int n = lam.n();
    long long result = 1;
    long long remaining = n;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && c[j] == c[i]) ++j;
        const int m = j - i;
        // multiply by C(remaining, m)
        for (int k = 1; k <= m; ++k) result = result * (remaining - m + k) / k;
        remaining -= m;
        i = j;
    }
    return result;
}

bool inn_contains(const Weight& lam, const Weight& mu) {
    require_dominant_lattice(lam);
    if (mu.n() != lam.n()) throw std::invalid_argument("invalid-weight: rank mismatch");
    if (!mu.in_lattice()) throw std::invalid_argument("invalid-weight: mu not in P");
    if (mu.coset_class() != lam.coset_class()) return false;
    Coords c = mu.s;
    std::sort(c.begin(), c.end(), std::greater<long long>());
    long long pl = 0, pm = 0;
    for (int i = 0; i < lam.n(); ++i) {
        pl += lam.s[i];
        pm += c[i];
        if (pm > pl) return false;
    }
    return true;
}

std::vector<Weight> dominant_below(const Weight& lam) {
    require_dominant_lattice(lam);
    const int n = lam.n();
    const long long t = lam.coset_class();
    std::vector<long long> prefix(n);
    long long acc = 0;
    for (int i = 0; i < n; ++i) { acc += lam.s[i]; prefix[i] = acc; }

    std::vector<Weight> out;
    Coords cur(n);
    // Enumerate non-increasing coordinate vectors, congruent to t mod n,
    // sum zero, prefix-dominated by lam.
    auto rec = [&](auto&& self, int i, long long psum) -> void {
        if (i == n - 1) {
            const long long last = -psum;
            if (last <= cur[i - 1] && ((last % n) + n) % n == t) {
                cur[i] = last;
                out.push_back(Weight(cur));
            }
            return;
        }
        long long hi = (i == 0) ? prefix[0] : std::min(cur[i - 1], prefix[i] - psum);
        // align hi down to the congruence class t mod n
        long long shift = ((hi - t) % n + n) % n;
        hi -= shift;
        // remaining coordinates are each <= cur[i]; feasibility bound:
        // s_i * (n - i) >= -psum  =>  s_i >= ceil(-psum / (n - i))
        for (long long v = hi;; v -= n) {
            if (v * (n - i) < -psum) break;
            cur[i] = v;
            self(self, i + 1, psum + v);
        }
    };
    rec(rec, 0, 0);

    const Coords rho = scaled_rho(n);
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const long long da = dot(a.s, rho), db = dot(b.s, rho);
        if (da != db) return da > db;
        return a.s > b.s;
    });
    return out;
}

std::vector<Weight> inn_enumerate(const Weight& lam) {
    std::vector<Weight> out;
    for (const Weight& d : dominant_below(lam)) {
        Orbit o = orbit(d);
        out.insert(out.end(), o.elements.begin(), o.elements.end());
    }
    std::sort(out.begin(), out.end(), std::greater<Weight>());
    return out;
}

InnData dominant_multiplicities(const Weight& lam) {
    require_dominant_lattice(lam);
    if (lam.is_zero()) throw std::invalid_argument("invalid-weight: zero highest weight");
    const int n = lam.n();
    const Coords rho = scaled_rho(n);

    InnData data;
    data.highest = lam;
    std::vector<Weight> doms = dominant_below(lam);
    std::map<Weight, long long> mult;

    Coords lam_rho(n);
    for (int i = 0; i < n; ++i) lam_rho[i] = lam.s[i] + rho[i];
    const long long top = dot(lam_rho, lam_rho);

    for (const Weight& mu : doms) {
        long long m;
        if (mu == lam) {
            m = 1;
        } else {
            Coords mu_rho(n);
            for (int i = 0; i < n; ++i) mu_rho[i] = mu.s[i] + rho[i];
            const long long denom = top - dot(mu_rho, mu_rho);
            long long num = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    // alpha = eps_i - eps_j, scaled coords n at i, -n at j
                    Coords nu = mu.s;
                    for (long long k = 1;; ++k) {
                        nu[i] += n;
                        nu[j] -= n;
                        Weight w(nu);
                        if (!inn_contains(lam, w)) break;
                        const long long pair_dot =
                            static_cast<long long>(n) * (nu[i] - nu[j]);
                        num += 2 * pair_dot * mult.at(dominant_representative(w));
                    }
                }
            }
            if (denom <= 0 || num % denom != 0)
                throw std::logic_error("Freudenthal recursion: inexact division");
            m = num / denom;
        }
        mult[mu] = m;
        data.dominant_mults.emplace_back(mu, m);
    }
    return data;
}

long long multiplicity(const InnData& data, const Weight& mu) {
    if (mu.n() != data.highest.n()) throw std::invalid_argument("invalid-weight: rank mismatch");
    if (!mu.in_lattice()) return 0;
    const Weight d = dominant_representative(mu);
    for (const auto& [w, m] : data.dominant_mults)
        if (w == d) return m;
    return 0;
}

long long multiplicity(const Weight& lam, const Weight& mu) {
    if (!mu.in_lattice() || mu.coset_class() != lam.coset_class() || !inn_contains(lam, mu))
        return 0;
    return multiplicity(dominant_multiplicities(lam), mu);
}

long long dimension(const Weight& lam) {
    require_dominant_lattice(lam);
    const int n = lam.n();
    cpp_int num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= (lam.s[i] - lam.s[j]) / n + (j - i);
            den *= j - i;
        }
    }
    const cpp_int d = num / den;
    if (num % den != 0 || d > std::numeric_limits<long long>::max())
        throw std::overflow_error("dimension out of range");
    return static_cast<long long>(d);
}

WeightSystem weight_system(const Weight& lam) {
    WeightSystem ws;
    ws.highest = lam;
    ws.dim = 0;
    for (const auto& [d, m] : dominant_multiplicities(lam).dominant_mults) {
        for (const Weight& w : orbit(d).elements) {
            ws.entries.emplace_back(w, m);
            ws.dim += m;
        }
    }
    std::sort(ws.entries.begin(), ws.entries.end());
    return ws;
}

} // namespace suq
