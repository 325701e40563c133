#pragma once

#include <memory>
#include <string>

#include "mmis/character_table.hpp"
#include "mmis/irrep.hpp"

namespace mmis {

// A symmetry family together with the irrep carried by a single site.
struct GroupModel {
    enum class Family { Finite, SU2, SUd };

    Family family = Family::SU2;
    std::string id;                          // "su2", "su3", "s3", ...
    std::shared_ptr<CharacterTable> table;   // Finite family only
    long d = 2;                              // SUd rank parameter
    Irrep onsite;
    long onsite_dim = 2;
    long dim_g = 3, dim_h = 1;               // Lie families only

    bool is_lie() const { return family != Family::Finite; }

    // SU(2) with spin-1/2 sites.
    static GroupModel su2();
    // SU(d) with fundamental-representation sites.
    static GroupModel sud(long d);
    // Finite group acting through the given onsite irrep (by label).
    static GroupModel finite(CharacterTable table, const std::string& onsite_label);
    // By id: "su2", "su<d>", or a builtin finite table name; finite groups
    // act through their unique faithful-by-default irrep ("2d" for S3, "E"
    // for D4, "sgn"/"w" for Z2/Z3).
    static GroupModel named(const std::string& id);
};

}  // namespace mmis
