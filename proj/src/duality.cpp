#include "suq/duality.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace suq {

Weight dual_weight(const Weight& lam) {
    if (!lam.in_lattice()) throw std::invalid_argument("invalid-weight: not in P");
    return dominant_representative(-dominant_representative(lam));
}

int frobenius_schur(const Weight& lam) {
    if (dual_weight(lam) != dominant_representative(lam))
        throw std::invalid_argument("not-applicable: weight is not self-dual");
    const auto a = fundamental_coords(dominant_representative(lam));
    const long long n = lam.n();
    long long parity = 0;
    for (long long i = 1; i <= lam.rank(); ++i) parity += a[i - 1] * i * (n - i);
    return parity % 2 == 0 ? 1 : -1;
}

DualityInfo duality_info(const Weight& lam) {
    DualityInfo info;
    const Weight d = dominant_representative(lam);
    info.dual = dual_weight(lam);
    info.self_dual = (info.dual == d);
    info.fs_indicator = info.self_dual ? frobenius_schur(d) : 0;
    info.delta = (info.self_dual && info.fs_indicator == 1) ? 1 : 2;
    return info;
}

int delta(const Weight& lam) {
    if (lam.is_zero()) throw std::invalid_argument("invalid-weight: zero weight");
    return duality_info(lam).delta;
}

namespace {

// Delta u (Delta + Delta) as scaled coordinate vectors, cached per rank.
const std::set<Coords>& root_sums(int n) {
    static std::unordered_map<int, std::set<Coords>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::set<Coords> s;
    std::vector<Coords> roots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                Coords c(n, 0);
                c[i] = n;
                c[j] = -n;
                roots.push_back(c);
            }
    for (const auto& a : roots) s.insert(a);
    for (const auto& a : roots)
        for (const auto& b : roots) {
            Coords c(a);
            for (int i = 0; i < n; ++i) c[i] += b[i];
            s.insert(std::move(c));
        }
    return cache.emplace(n, std::move(s)).first->second;
}

} // namespace

bool two_lambda_outside(const Weight& lam) {
    if (!lam.in_lattice()) throw std::invalid_argument("invalid-weight: not in P");
    Coords twice(lam.s);
    for (auto& v : twice) v *= 2;
    return root_sums(lam.n()).count(twice) == 0;
}

} // namespace suq
