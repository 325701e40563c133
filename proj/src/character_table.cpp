#include "mmis/character_table.hpp"

#include <cctype>
#include <fstream>

#include "mmis/errors.hpp"

namespace mmis {

void CharacterTable::validate() const {
    if (order <= 0 || center_order <= 0) throw CorruptTableError(name + ": bad group/center order");
    long class_sum = 0;
    for (const auto& c : classes) class_sum += c.size;
    if (class_sum != order) throw CorruptTableError(name + ": class sizes do not sum to |G|");
    if (num_irreps() != num_classes())
        throw CorruptTableError(name + ": #irreps != #classes");
    long dim_sq = 0;
    for (const auto& ir : irreps) dim_sq += ir.dim * ir.dim;
    if (dim_sq != order) throw CorruptTableError(name + ": sum of d_J^2 != |G|");
    for (std::size_t j = 0; j < num_irreps(); ++j) {
        if (chars[j].size() != num_classes()) throw CorruptTableError(name + ": ragged character row");
        for (std::size_t k = 0; k < num_irreps(); ++k) {
            CharValue acc(0);
            for (std::size_t c = 0; c < num_classes(); ++c)
                acc += CharValue(classes[c].size) * chars[j][c] * chars[k][c].conj();
            CharValue expected(j == k ? order : 0);
            if (!(acc == expected))
                throw CorruptTableError(name + ": row orthogonality fails for (" + irreps[j].label +
                                        ", " + irreps[k].label + ")");
        }
    }
    long center_sum = 0;
    for (int c : center_classes()) center_sum += classes[c].size;
    if (center_sum != center_order) throw CorruptTableError(name + ": center order mismatch");
}

int CharacterTable::identity_class() const {
    for (std::size_t c = 0; c < num_classes(); ++c) {
        if (classes[c].size != 1) continue;
        bool all_dims = true;
        for (std::size_t j = 0; j < num_irreps(); ++j)
            if (!(chars[j][c] == CharValue(irreps[j].dim))) all_dims = false;
        if (all_dims) return static_cast<int>(c);
    }
    throw CorruptTableError(name + ": no identity class");
}

int CharacterTable::index_of(const std::string& irrep_label) const {
    for (std::size_t j = 0; j < num_irreps(); ++j)
        if (irreps[j].label == irrep_label) return static_cast<int>(j);
    throw ConfigError(name + ": unknown irrep '" + irrep_label + "'");
}

int CharacterTable::conjugate_index(int irrep) const {
    for (std::size_t k = 0; k < num_irreps(); ++k) {
        bool match = true;
        for (std::size_t c = 0; c < num_classes(); ++c)
            if (!(chars[k][c] == chars[irrep][c].conj())) match = false;
        if (match) return static_cast<int>(k);
    }
    throw CorruptTableError(name + ": conjugate irrep not in table");
}

std::vector<int> CharacterTable::center_classes() const {
    std::vector<int> result;
    for (std::size_t c = 0; c < num_classes(); ++c) {
        if (classes[c].size != 1) continue;
        bool central = true;
        for (std::size_t j = 0; j < num_irreps(); ++j) {
            Rational d2(irreps[j].dim);
            d2 *= irreps[j].dim;
            if (chars[j][c].abs2() != d2) central = false;
        }
        if (central) result.push_back(static_cast<int>(c));
    }
    return result;
}

bool CharacterTable::irrep_faithful(int irrep) const {
    int id = identity_class();
    for (std::size_t c = 0; c < num_classes(); ++c) {
        if (static_cast<int>(c) == id) continue;
        if (chars[irrep][c] == CharValue(irreps[irrep].dim)) return false;
    }
    return true;
}

bool CharacterTable::irrep_trivial_on_center(int irrep) const {
    for (int c : center_classes())
        if (!(chars[irrep][c] == CharValue(irreps[irrep].dim))) return false;
    return true;
}

nlohmann::json CharacterTable::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["order"] = order;
    j["center_order"] = center_order;
    j["classes"] = nlohmann::json::array();
    for (const auto& c : classes) j["classes"].push_back({{"size", c.size}, {"label", c.label}});
    j["irreps"] = nlohmann::json::array();
    for (const auto& ir : irreps) j["irreps"].push_back({{"label", ir.label}, {"dim", ir.dim}});
    j["characters"] = nlohmann::json::array();
    for (const auto& row : chars)
        for (const auto& v : row) j["characters"].push_back({v.str_re(), v.str_im()});
    return j;
}

CharacterTable CharacterTable::from_json(const nlohmann::json& j) {
    CharacterTable t;
    try {
        t.name = j.at("name").get<std::string>();
        t.order = j.at("order").get<long>();
        t.center_order = j.at("center_order").get<long>();
        for (const auto& c : j.at("classes"))
            t.classes.push_back({c.at("size").get<long>(), c.at("label").get<std::string>()});
        for (const auto& ir : j.at("irreps"))
            t.irreps.push_back({ir.at("label").get<std::string>(), ir.at("dim").get<long>()});
        const auto& flat = j.at("characters");
        if (flat.size() != t.classes.size() * t.irreps.size())
            throw CorruptTableError(t.name + ": characters array has wrong length");
        std::size_t pos = 0;
        for (std::size_t r = 0; r < t.irreps.size(); ++r) {
            std::vector<CharValue> row;
            for (std::size_t c = 0; c < t.classes.size(); ++c, ++pos)
                row.push_back(CharValue::parse(flat[pos][0].get<std::string>(),
                                               flat[pos][1].get<std::string>()));
            t.chars.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad character table JSON: ") + e.what());
    }
    t.validate();
    return t;
}

CharacterTable CharacterTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open character table file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad JSON in ") + path + ": " + e.what());
    }
    return from_json(j);
}

namespace {
CharValue rat(long num, long den = 1) {
    return CharValue(Rational(num, den), 0, 0, 0);
}
// num/den * omega^k with omega = exp(2 pi i / 3)
CharValue omega() { return CharValue(Rational(-1, 2), 0, 0, Rational(1, 2)); }
}  // namespace

CharacterTable CharacterTable::z2() {
    CharacterTable t;
    t.name = "Z2";
    t.order = 2;
    t.center_order = 2;
    t.classes = {{1, "e"}, {1, "g"}};
    t.irreps = {{"triv", 1}, {"sgn", 1}};
    t.chars = {{rat(1), rat(1)}, {rat(1), rat(-1)}};
    return t;
}

CharacterTable CharacterTable::z3() {
    CharacterTable t;
    t.name = "Z3";
    t.order = 3;
    t.center_order = 3;
    t.classes = {{1, "e"}, {1, "g"}, {1, "g2"}};
    CharValue w = omega(), w2 = omega() * omega();
    t.irreps = {{"triv", 1}, {"w", 1}, {"w2", 1}};
    t.chars = {{rat(1), rat(1), rat(1)}, {rat(1), w, w2}, {rat(1), w2, w}};
    return t;
}

CharacterTable CharacterTable::s3() {
    CharacterTable t;
    t.name = "S3";
    t.order = 6;
    t.center_order = 1;
    t.classes = {{1, "e"}, {2, "rot"}, {3, "refl"}};
    t.irreps = {{"inv", 1}, {"sgn", 1}, {"2d", 2}};
    t.chars = {{rat(1), rat(1), rat(1)},
               {rat(1), rat(1), rat(-1)},
               {rat(2), rat(-1), rat(0)}};
    return t;
}

CharacterTable CharacterTable::d4() {
    CharacterTable t;
    t.name = "D4";
    t.order = 8;
    t.center_order = 2;
    t.classes = {{1, "e"}, {1, "r2"}, {2, "r"}, {2, "s"}, {2, "sd"}};
    t.irreps = {{"A1", 1}, {"A2", 1}, {"B1", 1}, {"B2", 1}, {"E", 2}};
    t.chars = {{rat(1), rat(1), rat(1), rat(1), rat(1)},
               {rat(1), rat(1), rat(1), rat(-1), rat(-1)},
               {rat(1), rat(1), rat(-1), rat(1), rat(-1)},
               {rat(1), rat(1), rat(-1), rat(-1), rat(1)},
               {rat(2), rat(-2), rat(0), rat(0), rat(0)}};
    return t;
}

const CharacterTable& CharacterTable::builtin(const std::string& name) {
    static const CharacterTable tables[] = {z2(), z3(), s3(), d4()};
    for (const auto& t : tables) {
        std::string lower;
        for (char ch : t.name) lower += static_cast<char>(std::tolower(ch));
        if (lower == name) return t;
    }
    throw ConfigError("unknown builtin character table: '" + name + "'");
}

}  // namespace mmis
