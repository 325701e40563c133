#pragma once

#include <vector>

#include "mmis/exact.hpp"

namespace mmis {

// Young diagram with N boxes and at most d rows, encoded by the row-length
// differences p_i = mu_i - mu_{i+1} (i = 1..d-1) plus the bottom-row length
// a, so mu_i = a + p_i + ... + p_{d-1}. Rows are weakly decreasing top-down.
struct YoungDiagram {
    long d = 0;
    std::vector<long> p;       // size d-1
    long N = 0;
    long a = 0;                // bottom-row length
    std::vector<long> rows;    // mu_1 >= ... >= mu_d >= 0

    // Builds the diagram for weight p with N boxes; returns an invalid
    // diagram (valid() == false) when N is incompatible with p, i.e. when
    // a = (N - sum_i i*p_i)/d is not a non-negative integer.
    static YoungDiagram from_weight(long d, const std::vector<long>& p, long N);

    bool valid() const { return d > 0; }

    // Dimension of the S_N irrep labeled by this diagram (hook lengths);
    // this is the multiplicity of the SU(d) irrep in the N-fold fundamental.
    BigInt sn_dimension() const;

    // Dimension of the SU(d) irrep with this highest weight.
    BigInt sud_dimension() const;
};

// SU(d) irrep dimension directly from the weight (no box count needed).
BigInt weyl_dimension(long d, const std::vector<long>& p);

}  // namespace mmis
