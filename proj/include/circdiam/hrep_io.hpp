#ifndef CIRCDIAM_HREP_IO_HPP
#define CIRCDIAM_HREP_IO_HPP

#include "circdiam/polyhedron.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circdiam {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text format:
//   dim <n>
//   eq <m1>        (optional, default 0)
//   ineq <m2>
//   m1 rows "a_1 ... a_n b" meaning a.x = b, then m2 rows meaning a.x >= b.
// '#' starts a comment; blank lines are ignored.
HPolyhedron parse_hrep(std::string_view text);
HPolyhedron read_hrep_file(const std::string& path);

std::string serialize_hrep(const HPolyhedron& p);

}  // namespace circdiam

#endif
