#ifndef CIRCDIAM_CLI_HPP
#define CIRCDIAM_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace circdiam {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;  // walk verification or equivalence failure
inline constexpr int input_error = 2;
}  // namespace exit_code

inline constexpr std::size_t kDefaultMaxDepth = 5;

struct Report {
    std::string instance;
    std::size_t dim = 0;
    std::size_t facets = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool bounded = false;
    std::size_t graph_diameter = 0;
    std::optional<std::size_t> circuit_diameter;  // nullopt: exceeds max_depth
    std::size_t max_depth = kDefaultMaxDepth;
    long hirsch_bound = 0;  // facets - dim
    bool graph_hirsch_satisfied = false;
    // nullopt when the circuit diameter is unresolved and max_depth < bound.
    std::optional<bool> circuit_hirsch_satisfied;
};

Report make_report(const std::string& instance_ref, std::size_t max_depth);
nlohmann::json to_json(const Report& r);

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circdiam

#endif
