#pragma once

#include <string>
#include <vector>

namespace mmis {

// An irrep label for one of the supported symmetry families:
//  - Finite: index into a character table
//  - Spin:   SU(2) spin j, stored as 2j to stay integral
//  - Weight: SU(d) highest weight (p_1..p_{d-1}), non-negative integers
struct Irrep {
    enum class Kind { Finite, Spin, Weight };

    Kind kind = Kind::Finite;
    int finite_index = 0;
    long twice_j = 0;
    std::vector<long> p;

    static Irrep finite(int index) {
        Irrep r;
        r.kind = Kind::Finite;
        r.finite_index = index;
        return r;
    }
    static Irrep spin_twice(long twice_j) {
        Irrep r;
        r.kind = Kind::Spin;
        r.twice_j = twice_j;
        return r;
    }
    static Irrep weight(std::vector<long> p) {
        Irrep r;
        r.kind = Kind::Weight;
        r.p = std::move(p);
        return r;
    }

    bool operator==(const Irrep& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Finite: return finite_index == o.finite_index;
            case Kind::Spin: return twice_j == o.twice_j;
            case Kind::Weight: return p == o.p;
        }
        return false;
    }
    bool operator<(const Irrep& o) const {
        if (kind != o.kind) return kind < o.kind;
        switch (kind) {
            case Kind::Finite: return finite_index < o.finite_index;
            case Kind::Spin: return twice_j < o.twice_j;
            case Kind::Weight: return p < o.p;
        }
        return false;
    }
};

}  // namespace mmis
