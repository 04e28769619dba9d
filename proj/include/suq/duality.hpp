#pragma once

#include "suq/weights.hpp"

namespace suq {

struct DualityInfo {
    Weight dual;
    bool self_dual = false;
    int fs_indicator = 0; // +1 orthogonal, -1 symplectic, 0 when not self-dual
    int delta = 2;        // 1 iff self-dual and orthogonal
};

// -w0 * lam: negate, then dominant-sort. Reverses fundamental coordinates.
Weight dual_weight(const Weight& lam);

// Closed parity formula (-1)^{sum_i a_i * i * (n-i)} for self-dual lam.
int frobenius_schur(const Weight& lam);

int delta(const Weight& lam);

DualityInfo duality_info(const Weight& lam);

// 2*lam not in Delta u (Delta + Delta).
bool two_lambda_outside(const Weight& lam);

} // namespace suq
