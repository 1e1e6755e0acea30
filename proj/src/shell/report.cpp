#include "starpt/shell/report.hpp"

#include <algorithm>
#include <cstdio>

namespace starpt::shell {

std::string Table::str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& r) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out += line + "\n";
    };
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        emit(rows_[k]);
        if (k == 0) {
            std::size_t total = 0;
            for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
            out += std::string(total, '-') + "\n";
        }
    }
    return out;
}

std::string Report::json() const {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["args"] = args;
    j["seed"] = seed;
    j["result"] = result;
    return j.dump(2) + "\n";
}

std::string Report::human() const {
    std::string head = command;
    for (const auto& a : args) head += " " + a;
    std::string out = head + "\n";
    for (const auto& block : text) out += "\n" + block + (block.empty() || block.back() == '\n' ? "" : "\n");
    char tail[64];
    std::snprintf(tail, sizeof tail, "\nseed %llu, %.1f ms\n", static_cast<unsigned long long>(seed), elapsed_ms);
    return out + tail;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json json_good(const geometry::GoodConeReport& g) {
    Json j;
    j["verdict"] = std::string(geometry::verdict_name(g.verdict));
    j["method"] = g.method;
    if (g.method == "probe") {
        j["probes"] = g.probes;
        j["probe_seed"] = g.seed;
    }
    return j;
}

Json json_verdict(const starpoint::StarVerdict& v) {
    Json j;
    j["is_star"] = v.is_star;
    j["tangent"] = v.tangent.str();
    j["multiplicity"] = v.multiplicity;
    j["section"] = v.cone.str();
    if (v.is_star) j["good_cone"] = json_good(v.good_cone);
    return j;
}

Json json_suited(const configspace::SuitedReport& s) {
    Json j;
    j["suited"] = s.suited;
    j["label"] = s.label;
    j["probe_smooth"] = s.probe_smooth;
    j["functional_nonzero"] = s.functional_nonzero;
    j["witness"] = s.witness ? Json(s.witness->str()) : Json(nullptr);
    j["seed"] = s.seed;
    return j;
}

Json json_label(const classify::ComponentLabel& c) {
    Json j;
    j["kind"] = std::string(classify::kind_name(c.kind));
    j["t"] = c.t ? Json(c.t->str()) : Json(nullptr);
    if (c.theta) j["order"] = c.theta;
    j["dimension"] = c.dimension;
    j["expected"] = c.expected;
    j["is_expected"] = c.is_expected;
    j["detail"] = c.detail;
    return j;
}

Json json_config(const configspace::Configuration& c) {
    Json j;
    j["ambient"] = c.ambient;
    j["degree"] = c.degree;
    j["conductor"] = c.field->conductor();
    j["general_position"] = c.general_position;
    Json triples = Json::array();
    for (const auto& t : c.triples) {
        Json tj;
        tj["plane"] = t.plane.str();
        tj["vertex"] = t.vertex.str();
        tj["cone"] = t.ambient_cone().str();
        tj["good_cone"] = json_good(t.good);
        triples.push_back(std::move(tj));
    }
    j["triples"] = std::move(triples);
    Json inc = Json::array();
    for (const auto& row : c.incidence) {
        Json r = Json::array();
        for (bool b : row) r.push_back(b);
        inc.push_back(std::move(r));
    }
    j["incidence"] = std::move(inc);
    return j;
}

std::string label_row_dim(const classify::ComponentLabel& c) {
    return c.kind == classify::Kind::NotSuited || c.kind == classify::Kind::Unclassified ? "-"
                                                                                          : std::to_string(c.dimension);
}

}  // namespace starpt::shell
