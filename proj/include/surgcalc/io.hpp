#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "surgcalc/diagram.hpp"
#include "surgcalc/matrix.hpp"
#include "surgcalc/numbers.hpp"
#include "surgcalc/slope.hpp"

namespace surgcalc {
namespace io {

using nlohmann::json;

/// Integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted on input. Exactness
/// is never traded for convenience.
inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw validation_error(where + ": not an integer: " + j.dump());
        }
    }
    throw validation_error(where + ": expected an integer, got " + j.dump());
}

/// Rationals travel as "num/den" strings (or bare integer strings/numbers).
inline json rational_to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
    if (j.is_array()) {
        if (j.size() != 2) throw validation_error(where + ": rational array needs [num, den]");
        return Rational(int_from_json(j[0], where), int_from_json(j[1], where));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw validation_error(where + ": not a rational: " + s);
        }
    }
    throw validation_error(where + ": expected a rational, got " + j.dump());
}

inline IntVector int_vector_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw validation_error(where + ": expected an array");
    IntVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(int_from_json(e, where));
    return v;
}

inline json int_vector_to_json(const IntVector& v) {
    json a = json::array();
    for (const Int& e : v) a.push_back(int_to_json(e));
    return a;
}

struct DiagramFile {
    SurgeryDiagram diagram;
    std::optional<AuxKnot> aux;
};

/// Parse the diagram document:
/// {
///   "components": [{"id", "topological": [p,q], "contact", "tb", "rot", "unknot"}...],
///   "linking": [[0, l12, ...], ...],
///   "aux": {"tb", "rot", "linking": [l01, ...]}        (optional)
/// }
/// Per component either "topological" or ("contact" + "tb") must be present;
/// if both are, they must agree exactly.
inline DiagramFile parse_diagram(const json& j) {
    if (!j.is_object()) throw validation_error("diagram: expected a JSON object");
    if (!j.contains("components") || !j["components"].is_array())
        throw validation_error("diagram: missing \"components\" array");

    std::vector<LinkComponent> comps;
    std::size_t index = 0;
    for (const auto& cj : j["components"]) {
        ++index;
        const std::string where = "component " + std::to_string(index);
        if (!cj.is_object()) throw validation_error(where + ": expected an object");
        std::string id = cj.value("id", "L" + std::to_string(index));

        std::optional<Slope> topological;
        if (cj.contains("topological")) {
            const json& tj = cj["topological"];
            if (!tj.is_array() || tj.size() != 2)
                throw validation_error(where + ": \"topological\" must be a [p, q] pair");
            try {
                topological = Slope(int_from_json(tj[0], where), int_from_json(tj[1], where));
            } catch (const std::invalid_argument& e) {
                throw validation_error(where + ": " + e.what());
            }
        }
        std::optional<Rational> contact;
        if (cj.contains("contact")) contact = rational_from_json(cj["contact"], where + " contact");
        std::optional<Int> tb;
        if (cj.contains("tb")) tb = int_from_json(cj["tb"], where + " tb");
        std::optional<Int> rot;
        if (cj.contains("rot")) rot = int_from_json(cj["rot"], where + " rot");
        const bool unknot = cj.value("unknot", false);

        comps.push_back(make_component(std::move(id), topological, contact, tb, rot, unknot));
    }

    const std::size_t n = comps.size();
    IntMatrix linking(n, n);
    if (j.contains("linking")) {
        const json& lj = j["linking"];
        if (!lj.is_array() || lj.size() != n)
            throw validation_error("linking: expected " + std::to_string(n) + " rows");
        for (std::size_t r = 0; r < n; ++r) {
            if (!lj[r].is_array() || lj[r].size() != n)
                throw validation_error("linking: row " + std::to_string(r + 1) + " must have " +
                                       std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c)
                linking.at(r, c) = int_from_json(lj[r][c], "linking");
        }
    } else if (n > 1) {
        throw validation_error("diagram: missing \"linking\" matrix");
    }

    DiagramFile file{SurgeryDiagram(std::move(comps), std::move(linking)), std::nullopt};

    if (j.contains("aux")) {
        const json& aj = j["aux"];
        if (!aj.is_object() || !aj.contains("tb") || !aj.contains("linking"))
            throw validation_error("aux: needs \"tb\" and \"linking\"");
        AuxKnot aux;
        aux.tb_old = int_from_json(aj["tb"], "aux tb");
        if (aj.contains("rot")) aux.rot_old = int_from_json(aj["rot"], "aux rot");
        aux.linking = int_vector_from_json(aj["linking"], "aux linking");
        require_aux_matches(file.diagram, aux);
        file.aux = std::move(aux);
    }
    return file;
}

inline json diagram_to_json(const SurgeryDiagram& d, const std::optional<AuxKnot>& aux) {
    json j;
    j["components"] = json::array();
    for (const LinkComponent& c : d.components()) {
        json cj;
        cj["id"] = c.id;
        cj["topological"] = json::array({int_to_json(c.topological.p()), int_to_json(c.topological.q())});
        if (c.legendrian) {
            cj["tb"] = int_to_json(c.legendrian->tb);
            if (c.legendrian->rot) cj["rot"] = int_to_json(*c.legendrian->rot);
            if (const auto contact = c.contact())
                cj["contact"] = json::array({int_to_json(contact->num()), int_to_json(contact->den())});
        }
        if (c.unknot) cj["unknot"] = true;
        j["components"].push_back(std::move(cj));
    }
    json lk = json::array();
    for (std::size_t r = 0; r < d.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d.size(); ++c) row.push_back(int_to_json(d.linking(r, c)));
        lk.push_back(std::move(row));
    }
    j["linking"] = std::move(lk);
    if (aux) {
        json aj;
        aj["tb"] = int_to_json(aux->tb_old);
        if (aux->rot_old) aj["rot"] = int_to_json(*aux->rot_old);
        aj["linking"] = int_vector_to_json(aux->linking);
        j["aux"] = std::move(aj);
    }
    return j;
}

inline DiagramFile load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot read file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw validation_error("cannot parse " + path + ": " + e.what());
    }
    return parse_diagram(j);
}

}  // namespace io
}  // namespace surgcalc
