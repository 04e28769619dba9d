#include "suq/hyperplane.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace suq {

namespace {

using boost::multiprecision::cpp_int;
using Rat = boost::rational<cpp_int>;

long long to_ll(const cpp_int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("normal coordinate out of range");
    return static_cast<long long>(v);
}

// Shift to the trace-zero representative and reduce to primitive form.
// Returns an empty vector when the functional vanishes on <Delta>.
Coords canonical_normal(const std::vector<cpp_int>& v) {
    const int n = static_cast<int>(v.size());
    cpp_int sum = 0;
    for (const auto& x : v) sum += x;
    std::vector<cpp_int> w(n);
    for (int i = 0; i < n; ++i) w[i] = cpp_int(n) * v[i] - sum;
    cpp_int g = 0;
    for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return {};
    for (auto& x : w) x /= g;
    for (const auto& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : w) y = -y;
        break;
    }
    Coords out(n);
    for (int i = 0; i < n; ++i) out[i] = to_ll(w[i]);
    return out;
}

struct Rref {
    std::vector<std::vector<Rat>> rows; // reduced echelon rows
    std::vector<int> pivot_cols;
    int cols = 0;
};

Rref rref_of(const std::vector<Weight>& vectors) {
    Rref m;
    if (vectors.empty()) return m;
    m.cols = vectors[0].n();
    for (const Weight& w : vectors) {
        std::vector<Rat> row(m.cols);
        for (int i = 0; i < m.cols; ++i) row[i] = Rat(w.s[i]);
        for (size_t k = 0; k < m.rows.size(); ++k) {
            const Rat f = row[m.pivot_cols[k]];
            if (f != Rat(0))
                for (int i = 0; i < m.cols; ++i) row[i] -= f * m.rows[k][i];
        }
        int p = -1;
        for (int i = 0; i < m.cols; ++i)
            if (row[i] != Rat(0)) { p = i; break; }
        if (p < 0) continue;
        const Rat inv = row[p];
        for (int i = 0; i < m.cols; ++i) row[i] /= inv;
        for (size_t k = 0; k < m.rows.size(); ++k) {
            const Rat f = m.rows[k][p];
            if (f != Rat(0))
                for (int i = 0; i < m.cols; ++i) m.rows[k][i] -= f * row[i];
        }
        m.rows.push_back(std::move(row));
        m.pivot_cols.push_back(p);
    }
    return m;
}

} // namespace

Hyperplane hyperplane_from_normal(const Coords& v) {
    std::vector<cpp_int> w(v.begin(), v.end());
    Coords c = canonical_normal(w);
    if (c.empty())
        throw std::invalid_argument("wrong-codimension: functional vanishes on <Delta>");
    return Hyperplane{std::move(c)};
}

int span_rank(const std::vector<Weight>& vectors) {
    return static_cast<int>(rref_of(vectors).rows.size());
}

Hyperplane hyperplane_from_span(const std::vector<Weight>& vectors) {
    if (vectors.empty())
        throw std::invalid_argument("wrong-codimension: empty span (dimension 0)");
    const int n = vectors[0].n();
    const Rref m = rref_of(vectors);
    const int rank = static_cast<int>(m.rows.size());
    if (rank != n - 2)
        throw std::invalid_argument("wrong-codimension: span dimension " +
                                    std::to_string(rank) + ", expected " +
                                    std::to_string(n - 2));
    // Kernel has dimension 2 and contains the all-ones vector; any kernel
    // vector with a nonzero trace-zero reduction is the normal.
    for (int f = 0; f < n; ++f) {
        if (std::find(m.pivot_cols.begin(), m.pivot_cols.end(), f) != m.pivot_cols.end())
            continue;
        std::vector<Rat> x(n, Rat(0));
        x[f] = Rat(1);
        for (int k = 0; k < rank; ++k) x[m.pivot_cols[k]] = -m.rows[k][f];
        cpp_int lcm = 1;
        for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, v.denominator());
        std::vector<cpp_int> w(n);
        for (int i = 0; i < n; ++i) w[i] = x[i].numerator() * (lcm / x[i].denominator());
        Coords c = canonical_normal(w);
        if (!c.empty()) return Hyperplane{std::move(c)};
    }
    throw std::logic_error("kernel reduced to the all-ones line");
}

Hyperplane hyperplane_from_pq_ratio(const Weight& lam, int p, int q) {
    const int n = lam.n();
    if (p < 1 || q < 1 || p > n || q > n || p == q)
        throw std::invalid_argument("undefined-ratio: degenerate index pair");
    if (lam.s[p - 1] == 0)
        throw std::invalid_argument("undefined-ratio: lambda_p = 0");
    // x_q = c x_p with c = lam_q/lam_p, cleared: lam_p * x_q - lam_q * x_p = 0.
    Coords v(n, 0);
    v[q - 1] = lam.s[p - 1];
    v[p - 1] = -lam.s[q - 1];
    return hyperplane_from_normal(v);
}

bool on_hyperplane(const Weight& w, const Hyperplane& h) {
    return dot(w.s, h.normal) == 0;
}

long long count_outside(const std::vector<Weight>& set, const Hyperplane& h) {
    long long c = 0;
    for (const Weight& w : set)
        if (!on_hyperplane(w, h)) ++c;
    return c;
}

long long roots_outside(int n, const Hyperplane& h) {
    long long inside = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && h.normal[i] == h.normal[j]) ++inside;
    return static_cast<long long>(n) * (n - 1) - inside;
}

long long orbit_count_outside(const Weight& lam, const Hyperplane& h) {
    return count_outside(orbit(lam).elements, h);
}

long long weighted_count_outside(const InnData& data, const Hyperplane& h) {
    long long total = 0;
    for (const auto& [d, m] : data.dominant_mults)
        total += m * count_outside(orbit(d).elements, h);
    return total;
}

long long weighted_count_outside(const Weight& lam, const Hyperplane& h) {
    return weighted_count_outside(dominant_multiplicities(lam), h);
}

long long multinomial(int n, const std::vector<int>& parts) {
    long long sum = 0;
    for (int m : parts) {
        if (m < 1) throw std::invalid_argument("invalid-partition: parts must be >= 1");
        sum += m;
    }
    if (sum != n) throw std::invalid_argument("invalid-partition: parts must sum to n");
    long long result = 1, remaining = n;
    for (int m : parts) {
        for (int k = 1; k <= m; ++k) result = result * (remaining - m + k) / k;
        remaining -= m;
    }
    return result;
}

namespace {

template <typename F>
void for_each_composition(int n, F&& f) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            f(parts);
            return;
        }
        for (int m = 1; m <= rest; ++m) {
            parts.push_back(m);
            self(self, rest - m);
            parts.pop_back();
        }
    };
    rec(rec, n);
}

} // namespace

std::vector<CmbViolation> verify_cmb1(int n_max) {
    std::vector<CmbViolation> out;
    for (int n = 1; n <= n_max; ++n) {
        for_each_composition(n, [&](const std::vector<int>& parts) {
            const long long v = multinomial(n, parts);
            const bool trivial = parts.size() == 1 && parts[0] == n;
            if (v < n && !trivial) out.push_back({n, parts, v});
        });
    }
    return out;
}

std::vector<CmbViolation> verify_cmb2(int n_max) {
    std::vector<CmbViolation> out;
    for (int n = 1; n <= n_max; ++n) {
        for_each_composition(n, [&](const std::vector<int>& parts) {
            if (parts.size() < 2) return;
            const long long v = multinomial(n, parts);
            if (v > 2LL * (n - 1)) return;
            const bool one_rest = parts.size() == 2 &&
                                  std::min(parts[0], parts[1]) == std::min(1, n - 1) &&
                                  std::max(parts[0], parts[1]) == std::max(1, n - 1);
            const bool two_two =
                n == 4 && parts.size() == 2 && parts[0] == 2 && parts[1] == 2;
            if (!one_rest && !two_two) out.push_back({n, parts, v});
        });
    }
    return out;
}

bool RankTracker::push(const Coords& v) {
    const int cols = static_cast<int>(v.size());
    std::vector<Rat> row(cols);
    for (int i = 0; i < cols; ++i) row[i] = Rat(cpp_int(v[i]));
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat f = row[pivots_[k]];
        if (f != Rat(0))
            for (int i = 0; i < cols; ++i) row[i] -= f * rows_[k][i];
    }
    int p = -1;
    for (int i = 0; i < cols; ++i)
        if (row[i] != Rat(0)) { p = i; break; }
    if (p < 0) return false;
    const Rat inv = row[p];
    for (int i = 0; i < cols; ++i) row[i] /= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

void RankTracker::pop_independent() {
    rows_.pop_back();
    pivots_.pop_back();
}

} // namespace suq
