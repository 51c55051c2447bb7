#ifndef CIRCDIAM_CATALOG_HPP
#define CIRCDIAM_CATALOG_HPP

#include "circdiam/polyhedron.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circdiam {

class UnknownInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Klee-Walkup unbounded polyhedron: 8 facets in dimension 4.
HPolyhedron klee_walkup_u4();
// Bounded Klee-Walkup polytope, symmetric realization with 9 facets.
HPolyhedron klee_walkup_q4_symmetric();
// Perturbed realization of the same polytope (decimal entries taken exactly).
HPolyhedron klee_walkup_q4_perturbed();
// 0 <= x_i <= 1; rows x_1 >= 0, ..., x_d >= 0, then -x_1 >= -1, ..., -x_d >= -1.
HPolyhedron unit_cube(std::size_t d);
// x_i >= 0 and -sum x_i >= -1.
HPolyhedron standard_simplex(std::size_t d);

/// Names: u4, q4_sym, q4_pert, cube(d) or cube<d>, simplex(d) or simplex<d>.
HPolyhedron builtin(std::string_view name);

/// "@name" resolves through builtin(), anything else is read as a file.
HPolyhedron load_instance(const std::string& ref);

std::vector<std::string> builtin_names();

}  // namespace circdiam

#endif
