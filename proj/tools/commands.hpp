#ifndef CUSPIDAL_TOOLS_COMMANDS_HPP_
#define CUSPIDAL_TOOLS_COMMANDS_HPP_

#include "cuspidal/config.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cuspidal::cli {

using Json = nlohmann::ordered_json;

struct Args {
    std::int64_t m = 0;
    std::int64_t f = 1;
    std::string gens;
    std::string gens2;
    std::string field = "rational";
    int n = 3;
    std::uint64_t seed = 20240917;
    std::vector<int> only;
    bool inject_wrong_pic = false;
    int jobs = 1;
};

struct Assertion {
    std::string name;
    std::string status;  // pass, fail, skipped
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    std::vector<Assertion> assertions;
    std::string text;
    int exit_code = 0;
};

Json to_json(const Report& r);

Report cmd_cusps(const Args& a, const SearchConfig& cfg);
Report cmd_pic(const Args& a, const SearchConfig& cfg);
Report cmd_unit(const Args& a, const SearchConfig& cfg);
// op: std-basis, fitt1, inverse, mult-ring, norm
Report cmd_ideal(const std::string& op, const Args& a, const SearchConfig& cfg);
// op: det, equiv, witness
Report cmd_pair(const std::string& op, const Args& a, const SearchConfig& cfg);
Report cmd_vec_reduce(const Args& a, const SearchConfig& cfg);
// op: reduce, fitt1, mult-ring, units
Report cmd_curve(const std::string& op, const Args& a, const SearchConfig& cfg);
Report cmd_selftest(const Args& a, const SearchConfig& cfg);

}  // namespace cuspidal::cli

#endif  // CUSPIDAL_TOOLS_COMMANDS_HPP_
