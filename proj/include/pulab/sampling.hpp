#pragma once

#include <cmath>
#include <random>

#include "pulab/params.hpp"

namespace pulab {

// Shared random parameter convention: Omega ~ U[-2,2], nu2 = Omega + delta
// with delta ~ U[0.1,10], resampled while |nu2+Omega| < 0.05.
inline ModelParams sample_params(std::mt19937_64& rng, int eta) {
    std::uniform_real_distribution<double> uOm(-2.0, 2.0);
    std::uniform_real_distribution<double> uDelta(0.1, 10.0);
    for (;;) {
        const double Omega = uOm(rng);
        const double nu2 = Omega + uDelta(rng);
        if (std::abs(nu2 + Omega) < 0.05) continue;
        return derive_params(nu2, Omega, eta);
    }
}

inline ModelParams sample_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    const int eta = coin(rng) == 0 ? +1 : -1;
    return sample_params(rng, eta);
}

} // namespace pulab
