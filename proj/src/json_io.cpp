#include "gentle/json_io.hpp"

#include <set>

#include <json.hpp>

#include "gentle/errors.hpp"

namespace gentle {

using nlohmann::ordered_json;

GradedQuiver parse_quiver_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed quiver document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("arrows"))
        throw parse_error("quiver document needs 'vertices' and 'arrows'");

    GradedQuiver q;
    std::set<std::string> seen_vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw parse_error("vertex names must be strings");
        if (!seen_vertices.insert(v.get<std::string>()).second)
            throw parse_error("duplicate vertex '" + v.get<std::string>() + "'");
        q.vertices.push_back(v.get<std::string>());
    }
    std::set<std::string> seen_arrows;
    for (const auto& a : doc["arrows"]) {
        if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to"))
            throw parse_error("arrows need 'name', 'from' and 'to'");
        Arrow arrow;
        arrow.name = a["name"].get<std::string>();
        if (!seen_arrows.insert(arrow.name).second)
            throw parse_error("duplicate arrow '" + arrow.name + "'");
        arrow.src = q.vertex_index(a["from"].get<std::string>());
        arrow.tgt = q.vertex_index(a["to"].get<std::string>());
        if (arrow.src == -1)
            throw parse_error("arrow " + arrow.name + " starts at unknown vertex '" +
                              a["from"].get<std::string>() + "'");
        if (arrow.tgt == -1)
            throw parse_error("arrow " + arrow.name + " ends at unknown vertex '" +
                              a["to"].get<std::string>() + "'");
        if (a.contains("degree")) {
            if (!a["degree"].is_number_integer())
                throw parse_error("arrow degrees must be integers");
            arrow.degree = a["degree"].get<int>();
        }
        q.arrows.push_back(arrow);
    }
    if (doc.contains("relations")) {
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2)
                throw parse_error("relations are two-element lists [beta, alpha]");
            int beta = q.arrow_index(r[0].get<std::string>());
            int alpha = q.arrow_index(r[1].get<std::string>());
            if (beta == -1 || alpha == -1)
                throw parse_error("relation references unknown arrow");
            if (q.arrows[beta].src != q.arrows[alpha].tgt)
                throw parse_error("non-composable relation [" +
                                  r[0].get<std::string>() + ", " +
                                  r[1].get<std::string>() + "]: s(" +
                                  r[0].get<std::string>() + ") != t(" +
                                  r[1].get<std::string>() + ")");
            if (!q.relations.insert({beta, alpha}).second)
                throw parse_error("duplicate relation [" + r[0].get<std::string>() + ", " +
                                  r[1].get<std::string>() + "]");
        }
    }
    return q;
}

std::string quiver_to_json(const GradedQuiver& q) {
    ordered_json doc;
    doc["vertices"] = q.vertices;
    doc["arrows"] = ordered_json::array();
    for (const Arrow& a : q.arrows) {
        ordered_json ja;
        ja["name"] = a.name;
        ja["from"] = q.vertices[a.src];
        ja["to"] = q.vertices[a.tgt];
        ja["degree"] = a.degree;
        doc["arrows"].push_back(ja);
    }
    doc["relations"] = ordered_json::array();
    for (const auto& [b, a] : q.relations)
        doc["relations"].push_back({q.arrows[b].name, q.arrows[a].name});
    return doc.dump(2);
}

}  // namespace gentle
