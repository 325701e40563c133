#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mmis/exact.hpp"

namespace mmis {

struct ConjugacyClass {
    long size = 0;
    std::string label;
};

struct IrrepInfo {
    std::string label;
    long dim = 0;
};

// Exact character table of a finite group. Characters are stored as exact
// values in Q(i, sqrt3); all consistency checks are exact identities.
class CharacterTable {
   public:
    std::string name;
    long order = 0;
    long center_order = 0;
    std::vector<ConjugacyClass> classes;
    std::vector<IrrepInfo> irreps;
    // chars[irrep][class]
    std::vector<std::vector<CharValue>> chars;

    std::size_t num_classes() const { return classes.size(); }
    std::size_t num_irreps() const { return irreps.size(); }

    // Throws CorruptTableError unless class sizes sum to |G|, the rows are
    // exactly orthonormal, and sum d_J^2 = |G|.
    void validate() const;

    int identity_class() const;
    int index_of(const std::string& irrep_label) const;

    // Index of the irrep with complex-conjugated characters.
    int conjugate_index(int irrep) const;

    // Classes of central elements: singleton classes on which every irrep
    // character has modulus d_J.
    std::vector<int> center_classes() const;

    // An irrep is faithful iff its kernel {g : chi(g) = d} is trivial.
    bool irrep_faithful(int irrep) const;

    // True iff the irrep restricts to the identity on the center.
    bool irrep_trivial_on_center(int irrep) const;

    nlohmann::json to_json() const;
    static CharacterTable from_json(const nlohmann::json& j);
    static CharacterTable load_file(const std::string& path);

    static CharacterTable z2();
    static CharacterTable z3();
    static CharacterTable s3();
    static CharacterTable d4();

    // Shipped tables by name ("z2", "z3", "s3", "d4"); throws ConfigError.
    static const CharacterTable& builtin(const std::string& name);
};

}  // namespace mmis
