#include "mmis/young.hpp"

#include <numeric>

#include "mmis/errors.hpp"

namespace mmis {

YoungDiagram YoungDiagram::from_weight(long d, const std::vector<long>& p, long N) {
    if (d < 2 || static_cast<long>(p.size()) != d - 1) throw ConfigError("bad SU(d) weight vector");
    for (long pi : p)
        if (pi < 0) throw ConfigError("negative SU(d) weight entry");
    long weighted = 0;
    for (long i = 1; i < d; ++i) weighted += i * p[i - 1];
    YoungDiagram y;
    if (N < 0 || (N - weighted) % d != 0 || N < weighted) return y;  // invalid
    y.d = d;
    y.p = p;
    y.N = N;
    y.a = (N - weighted) / d;
    y.rows.assign(d, y.a);
    for (long i = 0; i < d; ++i)
        for (long k = i; k < d - 1; ++k) y.rows[i] += p[k];
    return y;
}

BigInt YoungDiagram::sn_dimension() const {
    if (!valid()) return 0;
    // column lengths for hook computation
    std::vector<long> cols;
    if (!rows.empty() && rows[0] > 0) {
        cols.assign(rows[0], 0);
        for (long r : rows)
            for (long j = 0; j < r; ++j) ++cols[j];
    }
    BigInt hooks = 1;
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < rows[i]; ++j) hooks *= (rows[i] - j) + (cols[j] - i) - 1;
    BigInt num = factorial(N);
    if (num % hooks != 0) throw Error("hook-length division not exact");
    return num / hooks;
}

BigInt YoungDiagram::sud_dimension() const {
    if (!valid()) return 0;
    return weyl_dimension(d, p);
}

BigInt weyl_dimension(long d, const std::vector<long>& p) {
    if (d < 2 || static_cast<long>(p.size()) != d - 1) throw ConfigError("bad SU(d) weight vector");
    // mu_i - mu_j = p_i + ... + p_{j-1} (1-based)
    BigInt num = 1, den = 1;
    for (long i = 1; i < d; ++i)
        for (long j = i + 1; j <= d; ++j) {
            long diff = 0;
            for (long k = i; k < j; ++k) diff += p[k - 1];
            num *= diff + (j - i);
            den *= j - i;
        }
    if (num % den != 0) throw Error("Weyl dimension division not exact");
    return num / den;
}

}  // namespace mmis
