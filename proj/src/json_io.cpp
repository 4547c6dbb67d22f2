#include "stairtab/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace stairtab {

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": array expected");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": integer expected");
        out.push_back(v.get<int>());
    }
    return out;
}

SkewShape shape_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("outer") || !j.contains("inner") ||
        !j.contains("entries"))
        throw std::invalid_argument("tableau: object with outer/inner/entries expected");
    return SkewShape(Partition(int_list(j.at("outer"), "outer")),
                     Partition(int_list(j.at("inner"), "inner")));
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(int_list(j, "partition")); }

Json to_json(const GstTableau& t) {
    Json out;
    out["outer"] = t.shape().outer().parts();
    out["inner"] = t.shape().inner().parts();
    Json entries = Json::array();
    for (const auto& [c, v] : t.cells()) {
        Json e;
        e["row"] = c.row;
        e["col"] = c.col;
        e["value"] = v;
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

Json to_json(const QTableau& t) {
    Json out;
    out["outer"] = t.shape().outer().parts();
    out["inner"] = t.shape().inner().parts();
    Json entries = Json::array();
    for (const auto& [c, e] : t.cells()) {
        Json j;
        j["row"] = c.row;
        j["col"] = c.col;
        j["value"] = e.value;
        j["primed"] = e.primed;
        entries.push_back(std::move(j));
    }
    out["entries"] = std::move(entries);
    return out;
}

GstTableau gst_from_json(const Json& j) {
    SkewShape shape = shape_from_json(j);
    std::map<Cell, int> cells;
    for (const auto& e : j.at("entries")) {
        Cell c{e.at("row").get<int>(), e.at("col").get<int>()};
        if (!cells.emplace(c, e.at("value").get<int>()).second)
            throw std::invalid_argument("tableau: duplicate cell");
    }
    return GstTableau::from_cells(shape, cells);
}

QTableau qtab_from_json(const Json& j) {
    SkewShape shape = shape_from_json(j);
    std::map<Cell, PrimedEntry> cells;
    for (const auto& e : j.at("entries")) {
        Cell c{e.at("row").get<int>(), e.at("col").get<int>()};
        bool primed = e.contains("primed") && e.at("primed").get<bool>();
        if (!cells.emplace(c, PrimedEntry{e.at("value").get<int>(), primed}).second)
            throw std::invalid_argument("tableau: duplicate cell");
    }
    return QTableau::from_cells(shape, cells);
}

Json to_json(const MultiPoly& p) {
    std::vector<const std::pair<const ExponentKey, long long>*> terms;
    terms.reserve(p.term_count());
    for (const auto& term : p.terms()) terms.push_back(&term);
    std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
        if (a->first.t != b->first.t) return a->first.t < b->first.t;
        if (a->first.r != b->first.r) return a->first.r < b->first.r;
        return b->first.x < a->first.x;  // x lexicographically descending
    });
    Json out = Json::array();
    for (const auto* term : terms) {
        Json t;
        t["coeff"] = term->second;
        t["x"] = term->first.x;
        t["t"] = term->first.t;
        t["r"] = term->first.r;
        out.push_back(std::move(t));
    }
    return out;
}

MultiPoly poly_from_json(const Json& j, int fallback_num_vars) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: array of terms expected");
    int m = fallback_num_vars;
    if (!j.empty()) m = static_cast<int>(j.front().at("x").size());
    MultiPoly out(m);
    for (const auto& t : j) {
        ExponentKey e{int_list(t.at("x"), "x"), t.at("t").get<int>(), t.at("r").get<int>()};
        out.add_term(std::move(e), t.at("coeff").get<long long>());
    }
    return out;
}

Json to_json(const SchurExpansion& e) {
    Json out = Json::array();
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        Json entry;
        entry["nu"] = it->first.parts();
        entry["coeff"] = to_json(it->second);
        out.push_back(std::move(entry));
    }
    return out;
}

Json to_json(const SlideResult& s) {
    Json out;
    out["tableau"] = to_json(s.tableau);
    out["vacated"] = Json::array({s.vacated.row, s.vacated.col});
    Json path = Json::array();
    for (const Cell& c : s.path) path.push_back(Json::array({c.row, c.col}));
    out["path"] = std::move(path);
    return out;
}

}  // namespace stairtab
