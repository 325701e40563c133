#pragma once

#include "mmis/exact.hpp"

namespace mmis {

// sign * sqrt(square), the exact form of a Clebsch-Gordan coefficient.
struct ExactSqrt {
    int sign = 0;          // -1, 0, +1
    Rational square = 0;   // >= 0
    double value() const;
};

// <j1 m1; j2 m2 | J M> in the Condon-Shortley convention, exact. All
// angular momenta passed as twice their value to stay integral. Triangle
// violations and M != m1+m2 give an exact zero; malformed (j, m) pairs
// (|m| > j or mismatched parity) throw ConfigError.
ExactSqrt clebsch_gordan(long tj1, long tm1, long tj2, long tm2, long tJ, long tM);

// Entanglement of formation of the maximally mixed state in the (j, m)
// sector of N spin-1/2 sites across the cut N_A : N - N_A.
double jm_sector_entanglement(long N, long tj, long tm, long N_A);

}  // namespace mmis
