#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "para/fock.hpp"
#include "para/lie.hpp"
#include "para/report.hpp"
#include "para/text.hpp"

namespace para {

/// Lie spec file schema. Rationals travel as "num/den" strings and indices
/// are 1-based:
///   {"dim": 3, "names": ["E","F","H"], "constants": [[1,2,3,"1/1"], ...]}
inline LieAlgebraSpec lie_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim"))
        throw std::invalid_argument("Lie spec: missing 'dim'");
    int dim = j.at("dim").get<int>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    std::vector<LieAlgebraSpec::Entry> entries;
    if (j.contains("constants")) {
        for (const auto& row : j.at("constants")) {
            if (!row.is_array() || row.size() != 4)
                throw std::invalid_argument("Lie spec: constants rows must be [i,j,k,\"num/den\"]");
            LieAlgebraSpec::Entry e;
            e.i = row[0].get<int>();
            e.j = row[1].get<int>();
            e.k = row[2].get<int>();
            e.value = scalar_from_string(row[3].get<std::string>());
            entries.push_back(std::move(e));
        }
    }
    return LieAlgebraSpec(dim, std::move(names), entries);
}

inline nlohmann::json lie_to_json(const LieAlgebraSpec& L) {
    nlohmann::json j;
    j["dim"] = L.dimension();
    std::vector<std::string> names;
    for (int i = 1; i <= L.dimension(); ++i) names.push_back(L.name(i));
    j["names"] = names;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, v] : L.constants()) {
        auto [i, jj, k] = key;
        if (i < jj)  // store one representative; antisymmetry restores the rest
            rows.push_back({i, jj, k, fraction_string(v)});
    }
    j["constants"] = rows;
    return j;
}

inline LieAlgebraSpec load_lie_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Lie spec file: " + path);
    nlohmann::json j;
    in >> j;
    return lie_from_json(j);
}

inline nlohmann::json matrix_to_json(const RepMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, v] : m.entries())
        entries.push_back({key.first, key.second, fraction_string(v)});
    j["entries"] = entries;
    nlohmann::json overflow = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.column_overflowed(c)) overflow.push_back(c);
    j["overflow_columns"] = overflow;
    return j;
}

inline RepMatrix matrix_from_json(const nlohmann::json& j) {
    RepMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& row : j.at("entries"))
        m.add(row[0].get<std::size_t>(), row[1].get<std::size_t>(),
              scalar_from_string(row[2].get<std::string>()));
    for (const auto& c : j.at("overflow_columns"))
        m.mark_overflow(c.get<std::size_t>());
    return m;
}

inline nlohmann::json basis_to_json(const FockBasis& basis) {
    nlohmann::json words = nlohmann::json::array();
    for (const Word& w : basis.words()) {
        nlohmann::json syms = nlohmann::json::array();
        for (GenSym s : w) syms.push_back(to_string(s));
        words.push_back(syms);
    }
    return words;
}

inline nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j;
    j["suite"] = r.suite();
    j["passed"] = r.passed();
    j["failed"] = r.failed();
    j["elapsed_ms"] = r.elapsed_ms();
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : r.records()) {
        nlohmann::json e;
        e["id"] = rec.id;
        e["pass"] = rec.pass;
        if (!rec.pass && !rec.witness.empty()) e["witness"] = rec.witness;
        records.push_back(e);
    }
    j["records"] = records;
    return j;
}

}  // namespace para
