#pragma once

#include "suq/weights.hpp"

#include <vector>

namespace suq {

// Weyl orbit of a lattice weight: all distinct coordinate permutations.
struct Orbit {
    Weight dominant;
    std::vector<Weight> elements; // decreasing lexicographic order
};

Orbit orbit(const Weight& lam);
long long orbit_size(const Weight& lam); // multinomial, no enumeration

// Saturation membership: mu in Inn(Lambda) = conv(Lambda) /\ (Lambda + Q).
// Coset equality plus majorization of sorted coordinates.
bool inn_contains(const Weight& lam, const Weight& mu);

// Dominant members of Inn(Lambda), sorted by decreasing (.,rho) with
// decreasing lexicographic tie-break; lam comes first.
std::vector<Weight> dominant_below(const Weight& lam);

// All of Inn(Lambda), decreasing lexicographic order.
std::vector<Weight> inn_enumerate(const Weight& lam);

// Weight multiplicities of the irrep with highest weight lam, one entry per
// dominant weight of Inn(Lambda), in dominant_below order (Freudenthal).
struct InnData {
    Weight highest;
    std::vector<std::pair<Weight, long long>> dominant_mults;
};
InnData dominant_multiplicities(const Weight& lam);

long long multiplicity(const Weight& lam, const Weight& mu);
long long multiplicity(const InnData& data, const Weight& mu);

// Weyl dimension formula.
long long dimension(const Weight& lam);

// Full weight diagram, entries in increasing lexicographic order.
struct WeightSystem {
    Weight highest;
    long long dim = 0;
    std::vector<std::pair<Weight, long long>> entries;
};
WeightSystem weight_system(const Weight& lam);

} // namespace suq
