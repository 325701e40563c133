#include "mmis/clebsch.hpp"

#include <algorithm>
#include <cmath>

#include "mmis/errors.hpp"
#include "mmis/multiplicity.hpp"

namespace mmis {

double ExactSqrt::value() const { return sign * std::sqrt(to_double(square)); }

namespace {

// factorial of a twice-integer that must be even and non-negative
BigInt fact2(long twice) {
    if (twice < 0 || twice % 2 != 0) throw Error("non-integral factorial argument");
    return factorial(twice / 2);
}

void check_jm(long tj, long tm) {
    if (tj < 0 || std::abs(tm) > tj || (tj - tm) % 2 != 0)
        throw ConfigError("invalid (j, m) pair");
}

}  // namespace

ExactSqrt clebsch_gordan(long tj1, long tm1, long tj2, long tm2, long tJ, long tM) {
    check_jm(tj1, tm1);
    check_jm(tj2, tm2);
    if (tJ < 0) throw ConfigError("invalid (j, m) pair");
    ExactSqrt result;
    // |M| > J (or a parity mismatch) is a selection rule, not a config error
    if (std::abs(tM) > tJ || (tJ - tM) % 2 != 0) return result;
    if (tm1 + tm2 != tM) return result;
    if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2 || (tj1 + tj2 + tJ) % 2 != 0) return result;

    // Racah's closed form: prefactor under the root times a rational sum
    Rational pref = Rational(tJ + 1) * Rational(fact2(tJ + tj1 - tj2)) *
                    Rational(fact2(tJ - tj1 + tj2)) * Rational(fact2(tj1 + tj2 - tJ)) /
                    Rational(fact2(tj1 + tj2 + tJ + 2));
    pref *= Rational(fact2(tJ + tM)) * Rational(fact2(tJ - tM)) * Rational(fact2(tj1 - tm1)) *
            Rational(fact2(tj1 + tm1)) * Rational(fact2(tj2 - tm2)) * Rational(fact2(tj2 + tm2));

    Rational sum = 0;
    for (long tk = 0;; tk += 2) {
        long a = tj1 + tj2 - tJ - tk;
        long b = tj1 - tm1 - tk;
        long c = tj2 + tm2 - tk;
        long d = tJ - tj2 + tm1 + tk;
        long e = tJ - tj1 - tm2 + tk;
        if (a < 0 && b < 0 && c < 0) break;
        if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0) {
            if (a < 0 || b < 0 || c < 0) break;
            continue;
        }
        Rational term(1, fact2(tk) * fact2(a) * fact2(b) * fact2(c) * fact2(d) * fact2(e));
        if ((tk / 2) % 2 != 0) term = -term;
        sum += term;
    }
    if (sum == 0) return result;
    result.sign = sum > 0 ? 1 : -1;
    result.square = sum * sum * pref;
    result.square.canonicalize();
    return result;
}

double jm_sector_entanglement(long N, long tj, long tm, long N_A) {
    check_jm(tj, tm);
    if (N_A < 0 || N_A > N) throw ConfigError("cut outside [0, N]");
    long N_B = N - N_A;
    auto g = GroupModel::su2();
    BigInt C_sector = multiplicity(g, Irrep::spin_twice(tj), N);
    if (C_sector == 0) throw EmptySectorError("(j, m) sector is empty");
    // p(j_a, j_b) = C_{j_a}^{N_A} C_{j_b}^{N_B} / C_j^N over admissible pairs;
    // each |j_a j_b; j m> has Schmidt weights |C^{jm}_{j_a m_a, j_b m-m_a}|^2
    double E = 0;
    BigInt weight_check = 0;
    for (long ta = N_A % 2; ta <= N_A; ta += 2) {
        BigInt ca = multiplicity(g, Irrep::spin_twice(ta), N_A);
        if (ca == 0) continue;
        for (long tb = N_B % 2; tb <= N_B; tb += 2) {
            if (tj < std::abs(ta - tb) || tj > ta + tb) continue;
            BigInt cb = multiplicity(g, Irrep::spin_twice(tb), N_B);
            if (cb == 0) continue;
            weight_check += ca * cb;
            Rational p(ca * cb, C_sector);
            double S = 0;
            for (long tma = -ta; tma <= ta; tma += 2) {
                long tmb = tm - tma;
                if (std::abs(tmb) > tb) continue;
                auto cg = clebsch_gordan(ta, tma, tb, tmb, tj, tm);
                if (cg.sign == 0) continue;
                double w = to_double(cg.square);
                S -= w * std::log(w);
            }
            E += to_double(p) * S;
        }
    }
    if (weight_check != C_sector)
        throw OracleMismatch("(j, m) sector multiplicity factorization failed");
    return E;
}

}  // namespace mmis
