#include "minorb/format.hpp"

#include "json.hpp"

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minorb::format {

using json = nlohmann::ordered_json;
using zlinalg::FGAbelianGroup;
using zlinalg::Int;
using zlinalg::IntMatrix;

namespace {

/// Prime-power factors (p, q = p^k) of n ≥ 2, ordered by ascending prime.
std::vector<std::pair<Int, Int>> prime_power_factors(Int n) {
    std::vector<std::pair<Int, Int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        Int q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        out.emplace_back(p, q);
    }
    if (n > 1) out.emplace_back(n, n);
    return out;
}

std::string cyclic_text(const Int& q, std::size_t multiplicity) {
    std::ostringstream out;
    if (multiplicity == 1) {
        out << "ℤ/" << q;
    } else {
        out << "(ℤ/" << q << ")^" << multiplicity;
    }
    return out.str();
}

json int_to_json(const Int& v) {
    if (v <= Int(std::numeric_limits<long long>::max())) {
        return v.convert_to<long long>();
    }
    return v.str();
}

Int json_to_int(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw std::invalid_argument("torsion entry must be an integer or integer string");
}

rootsys::Family family_from_letter(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': return rootsys::Family::A;
            case 'B': return rootsys::Family::B;
            case 'C': return rootsys::Family::C;
            case 'D': return rootsys::Family::D;
            case 'E': return rootsys::Family::E;
            case 'F': return rootsys::Family::F;
            case 'G': return rootsys::Family::G;
            default: break;
        }
    }
    throw std::invalid_argument("unknown type letter \"" + s + "\" (expected A..G)");
}

json groups_to_json(const gysin::GradedCohomology& coh) {
    json groups = json::array();
    for (const auto& [degree, group] : coh.groups) {
        if (group.is_zero()) continue;
        json entry;
        entry["degree"] = degree;
        entry["free_rank"] = static_cast<long long>(group.free_rank);
        json torsion = json::array();
        for (const Int& d : group.torsion) torsion.push_back(int_to_json(d));
        entry["torsion"] = std::move(torsion);
        groups.push_back(std::move(entry));
    }
    return groups;
}

json matrix_rows_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string group_text(const FGAbelianGroup& g) {
    if (g.is_zero()) return "0";
    std::vector<std::string> parts;
    if (g.free_rank == 1) {
        parts.push_back("ℤ");
    } else if (g.free_rank > 1) {
        parts.push_back("ℤ^" + std::to_string(g.free_rank));
    }
    // Collapse the invariant factors into prime powers with multiplicities,
    // grouped by prime so the 2-primary part prints first.
    std::map<std::pair<Int, Int>, std::size_t> powers;
    for (const Int& d : g.torsion) {
        for (const auto& pq : prime_power_factors(d)) ++powers[pq];
    }
    for (const auto& [pq, count] : powers) parts.push_back(cyclic_text(pq.second, count));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += " ⊕ ";
        out += parts[i];
    }
    return out;
}

std::string table_text(const gysin::GradedCohomology& coh) {
    std::ostringstream out;
    for (const auto& [degree, group] : coh.groups) {
        if (group.is_zero()) continue;
        out << "H^" << degree << " = " << group_text(group) << "\n";
    }
    return out.str();
}

std::string cohomology_json(rootsys::Family family, int rank, int h_dual,
                            const gysin::GradedCohomology& coh) {
    json j;
    j["type"] = std::string(1, family_letter(family));
    j["rank"] = rank;
    j["h_dual"] = h_dual;
    j["groups"] = groups_to_json(coh);
    return j.dump(2) + "\n";
}

ParsedCohomology parse_cohomology_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad cohomology JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j.contains("rank") || !j.contains("h_dual") ||
        !j.contains("groups") || !j["groups"].is_array()) {
        throw std::invalid_argument("bad cohomology JSON: missing type/rank/h_dual/groups");
    }
    ParsedCohomology out;
    out.family = family_from_letter(j["type"].get<std::string>());
    out.rank = j["rank"].get<int>();
    out.h_dual = j["h_dual"].get<int>();
    out.table.top_degree = 4 * out.h_dual - 5;
    for (const json& entry : j["groups"]) {
        if (!entry.contains("degree") || !entry.contains("free_rank") || !entry.contains("torsion")) {
            throw std::invalid_argument("bad cohomology JSON: malformed group entry");
        }
        FGAbelianGroup group;
        group.free_rank = static_cast<std::size_t>(entry["free_rank"].get<long long>());
        for (const json& d : entry["torsion"]) group.torsion.push_back(json_to_int(d));
        if (group.is_zero()) continue;
        out.table.groups[entry["degree"].get<int>()] = std::move(group);
    }
    return out;
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    if (m.rows() == 1 && m.cols() >= 1) {
        out << "(";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ",";
            out << m.at(0, c);
        }
        out << ")";
        return out.str();
    }
    if (m.cols() == 1 && m.rows() > 1) {
        out << "(";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r > 0) out << ";";
            out << m.at(r, 0);
        }
        out << ")";
        return out.str();
    }
    out << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0) out << ",";
        out << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ",";
            out << m.at(r, c);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string matrices_text(const orbitposet::LevelDiagram& d) {
    const int top = 2 * d.system().dual_coxeter_number() - 2;
    std::ostringstream out;
    for (int i = 1; i < top; ++i) {
        out << "D_" << i << " = " << matrix_text(orbitposet::differential_matrix(d, i).matrix)
            << "\n";
    }
    return out.str();
}

std::string matrices_json(rootsys::Family family, int rank, const orbitposet::LevelDiagram& d) {
    const int top = 2 * d.system().dual_coxeter_number() - 2;
    json j;
    j["type"] = std::string(1, family_letter(family));
    j["rank"] = rank;
    json matrices = json::array();
    for (int i = 1; i < top; ++i) {
        json entry;
        entry["index"] = i;
        entry["rows"] = matrix_rows_json(orbitposet::differential_matrix(d, i).matrix);
        matrices.push_back(std::move(entry));
    }
    j["matrices"] = std::move(matrices);
    return j.dump(2) + "\n";
}

std::string diagram_text(const orbitposet::LevelDiagram& d) {
    const rootsys::RootSystem& rs = d.system();
    std::ostringstream out;
    for (int lvl = 0; lvl < d.num_levels(); ++lvl) {
        out << lvl << ":";
        for (int idx : d.levels()[lvl]) out << " " << orbitposet::root_label(rs, idx);
        out << "\n";
    }
    out << "edges:\n";
    for (const auto& e : d.edges()) {
        out << "  " << orbitposet::root_label(rs, e.beta) << " -> "
            << orbitposet::root_label(rs, e.alpha) << "  m=" << e.m << "\n";
    }
    return out.str();
}

std::string diagram_json(rootsys::Family family, int rank, const orbitposet::LevelDiagram& d) {
    const rootsys::RootSystem& rs = d.system();
    json j;
    j["type"] = std::string(1, family_letter(family));
    j["rank"] = rank;
    json levels = json::array();
    for (const auto& bucket : d.levels()) {
        json row = json::array();
        for (int idx : bucket) row.push_back(orbitposet::root_label(rs, idx));
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    json edges = json::array();
    for (const auto& e : d.edges()) {
        json entry;
        entry["from"] = orbitposet::root_label(rs, e.beta);
        entry["to"] = orbitposet::root_label(rs, e.alpha);
        entry["m"] = e.m;
        edges.push_back(std::move(entry));
    }
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

}  // namespace minorb::format
