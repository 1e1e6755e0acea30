/**
 * @file report.hpp
 * @brief Command reports: an ordered JSON document plus a human table view.
 *
 * JSON output carries `schema: 1`, the command echo, the seed and the
 * result. Wall-clock timing only appears in the human view so that JSON is
 * byte-identical across runs.
 */
#ifndef STARPT_SHELL_REPORT_HPP
#define STARPT_SHELL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "starpt/classify.hpp"

namespace starpt::shell {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Column-aligned plain text table.
class Table {
   public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    std::string str() const;

   private:
    std::vector<std::vector<std::string>> rows_;
};

struct Report {
    std::string command;
    std::vector<std::string> args;
    std::uint64_t seed = 0;
    Json result = Json::object();
    std::vector<std::string> text;  // human view, one block per entry
    double elapsed_ms = 0;

    std::string json() const;
    std::string human() const;
};

Json json_good(const geometry::GoodConeReport& g);
Json json_verdict(const starpoint::StarVerdict& v);
Json json_suited(const configspace::SuitedReport& s);
Json json_label(const classify::ComponentLabel& c);
Json json_config(const configspace::Configuration& c);

std::string yes_no(bool b);
std::string label_row_dim(const classify::ComponentLabel& c);

}  // namespace starpt::shell

#endif
