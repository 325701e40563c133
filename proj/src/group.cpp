#include "mmis/group.hpp"

#include "mmis/errors.hpp"
#include "mmis/young.hpp"

namespace mmis {

GroupModel GroupModel::su2() {
    GroupModel g;
    g.family = Family::SU2;
    g.id = "su2";
    g.d = 2;
    g.onsite = Irrep::spin_twice(1);
    g.onsite_dim = 2;
    g.dim_g = 3;
    g.dim_h = 1;
    return g;
}

GroupModel GroupModel::sud(long d) {
    if (d < 2) throw ConfigError("SU(d) requires d >= 2");
    GroupModel g;
    g.family = Family::SUd;
    g.id = "su" + std::to_string(d);
    g.d = d;
    std::vector<long> fund(d - 1, 0);
    fund[0] = 1;
    g.onsite = Irrep::weight(fund);
    g.onsite_dim = d;
    g.dim_g = d * d - 1;
    g.dim_h = d - 1;
    return g;
}

GroupModel GroupModel::finite(CharacterTable table, const std::string& onsite_label) {
    table.validate();
    GroupModel g;
    g.family = Family::Finite;
    g.id = table.name;
    for (char& c : g.id) c = static_cast<char>(std::tolower(c));
    int idx = table.index_of(onsite_label);
    g.onsite = Irrep::finite(idx);
    g.onsite_dim = table.irreps[idx].dim;
    g.table = std::make_shared<CharacterTable>(std::move(table));
    g.dim_g = 0;
    g.dim_h = 0;
    return g;
}

GroupModel GroupModel::named(const std::string& id) {
    if (id == "su2") return su2();
    if (id.rfind("su", 0) == 0) {
        try {
            long d = std::stol(id.substr(2));
            return sud(d);
        } catch (const std::exception&) {
            throw ConfigError("bad group id: '" + id + "'");
        }
    }
    if (id == "s3") return finite(CharacterTable::s3(), "2d");
    if (id == "d4") return finite(CharacterTable::d4(), "E");
    if (id == "z2") return finite(CharacterTable::z2(), "sgn");
    if (id == "z3") return finite(CharacterTable::z3(), "w");
    throw ConfigError("unknown group id: '" + id + "'");
}

}  // namespace mmis
