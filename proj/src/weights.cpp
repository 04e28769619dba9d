#include "suq/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace suq {

Weight::Weight(Coords c) : s(std::move(c)) {
    if (s.size() < 2)
        throw std::invalid_argument("invalid-weight: need at least 2 coordinates");
    long long sum = std::accumulate(s.begin(), s.end(), 0LL);
    if (sum != 0)
        throw std::invalid_argument("invalid-weight: coordinates must sum to zero");
}

bool Weight::is_zero() const {
    return std::all_of(s.begin(), s.end(), [](long long v) { return v == 0; });
}

bool Weight::is_dominant() const {
    return std::is_sorted(s.begin(), s.end(), std::greater<long long>());
}

bool Weight::in_lattice() const {
    const long long m = n();
    const long long t = ((s[0] % m) + m) % m;
    return std::all_of(s.begin(), s.end(),
                       [&](long long v) { return ((v % m) + m) % m == t; });
}

long long Weight::coset_class() const {
    const long long m = n();
    return ((s[0] % m) + m) % m;
}

static void check_same_n(const Weight& a, const Weight& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("invalid-weight: rank mismatch");
}

Weight operator+(const Weight& a, const Weight& b) {
    check_same_n(a, b);
    Coords c(a.s);
    for (int i = 0; i < a.n(); ++i) c[i] += b.s[i];
    return Weight(std::move(c));
}

Weight operator-(const Weight& a, const Weight& b) {
    check_same_n(a, b);
    Coords c(a.s);
    for (int i = 0; i < a.n(); ++i) c[i] -= b.s[i];
    return Weight(std::move(c));
}

Weight operator-(const Weight& a) {
    Coords c(a.s);
    for (auto& v : c) v = -v;
    return Weight(std::move(c));
}

Weight operator*(long long k, const Weight& a) {
    Coords c(a.s);
    for (auto& v : c) v *= k;
    return Weight(std::move(c));
}

bool SimpleSubset::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

bool SimpleSubset::connected() const {
    if (indices.empty()) return false;
    return indices.back() - indices.front() + 1 == static_cast<int>(indices.size());
}

Weight root_weight(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("invalid root indices");
    Coords c(n, 0);
    c[i - 1] = n;
    c[j - 1] = -n;
    return Weight(std::move(c));
}

RootDatum make_root_datum(int r) {
    if (r < 2) throw std::invalid_argument("invalid-rank: r must be >= 2");
    RootDatum d;
    d.r = r;
    d.n = r + 1;
    for (int i = 1; i <= d.n; ++i)
        for (int j = 1; j <= d.n; ++j)
            if (i != j) d.roots.emplace_back(i, j);
    for (int i = 1; i <= r; ++i)
        d.simple.push_back(root_weight(d.n, i, i + 1));
    // phi_j = (eps_1 + ... + eps_j) - (j/n) * sum(eps); scaled by n.
    for (int j = 1; j <= r; ++j) {
        Coords c(d.n);
        for (int i = 0; i < d.n; ++i) c[i] = (i < j) ? d.n - j : -j;
        d.fundamental.push_back(Weight(std::move(c)));
    }
    Coords rho(d.n, 0);
    for (const auto& phi : d.fundamental)
        for (int i = 0; i < d.n; ++i) rho[i] += phi.s[i];
    d.rho = Weight(std::move(rho));
    return d;
}

long long pairing(const Weight& lam, int i, int j) {
    if (!lam.in_lattice())
        throw std::invalid_argument("non-integral-pairing: weight not in P");
    const long long num = lam.s[i - 1] - lam.s[j - 1];
    return num / lam.n();
}

long long pairing(const Weight& lam, const Weight& root) {
    // root is a scaled eps_i - eps_j; recover the index pair.
    int i = -1, j = -1;
    const int n = root.n();
    for (int k = 0; k < n; ++k) {
        if (root.s[k] == n) i = k + 1;
        else if (root.s[k] == -n) j = k + 1;
        else if (root.s[k] != 0) throw std::invalid_argument("not a root");
    }
    if (i < 0 || j < 0) throw std::invalid_argument("not a root");
    return pairing(lam, i, j);
}

Weight dominant_representative(const Weight& w) {
    Coords c(w.s);
    std::sort(c.begin(), c.end(), std::greater<long long>());
    return Weight(std::move(c));
}

std::vector<long long> fundamental_coords(const Weight& lam) {
    if (!lam.in_lattice())
        throw std::invalid_argument("non-integral-pairing: weight not in P");
    std::vector<long long> a(lam.rank());
    for (int i = 1; i <= lam.rank(); ++i)
        a[i - 1] = (lam.s[i - 1] - lam.s[i]) / lam.n();
    return a;
}

Weight weight_from_fundamental(const std::vector<long long>& a) {
    const int r = static_cast<int>(a.size());
    if (r < 2) throw std::invalid_argument("invalid-rank: r must be >= 2");
    const int n = r + 1;
    Coords c(n, 0);
    for (int j = 1; j <= r; ++j)
        for (int i = 0; i < n; ++i)
            c[i] += a[j - 1] * ((i < j) ? n - j : -j);
    return Weight(std::move(c));
}

SimpleSubset boundary_of_interval(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    SimpleSubset b;
    if (hi - lo + 1 >= 6) {
        b.indices = {lo, lo + 1, hi - 1, hi};
    } else {
        for (int i = lo; i <= hi; ++i) b.indices.push_back(i);
    }
    return b;
}

SimpleSubset boundary_subset(int r) {
    if (r < 2) throw std::invalid_argument("invalid-rank: r must be >= 2");
    return boundary_of_interval(1, r);
}

std::vector<SimpleSubset> corank2_connected_subsets(int r) {
    std::vector<SimpleSubset> out;
    if (r < 3) return out;
    for (int lo = 1; lo + (r - 2) - 1 <= r; ++lo) {
        SimpleSubset s;
        for (int i = lo; i <= lo + r - 3; ++i) s.indices.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

SimpleSubset pi_lambda(const Weight& lam) {
    const auto a = fundamental_coords(lam);
    SimpleSubset s;
    for (int i = 1; i <= lam.rank(); ++i)
        if (a[i - 1] != 0) s.indices.push_back(i);
    return s;
}

long long dot(const Coords& a, const Coords& b) {
    long long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

} // namespace suq
