#include "circdiam/catalog.hpp"

#include "circdiam/hrep_io.hpp"

#include <charconv>

namespace circdiam {

namespace {

QMatrix matrix_from_text(std::initializer_list<std::initializer_list<const char*>> rows) {
    QMatrix m(0, rows.begin()->size());
    for (const auto& r : rows) {
        QVector values;
        for (const char* entry : r) values.push_back(*parse_rational(entry));
        m.append_row(values);
    }
    return m;
}

QVector constant_vector(std::size_t n, long value) { return QVector(n, Rational(value)); }

}  // namespace

HPolyhedron klee_walkup_u4() {
    QMatrix a = matrix_from_text({
        {"-6", "-3", "0", "1"},
        {"-3", "-6", "1", "0"},
        {"-35", "-45", "6", "3"},
        {"-45", "-35", "3", "6"},
        {"1", "0", "0", "0"},
        {"0", "1", "0", "0"},
        {"0", "0", "1", "0"},
        {"0", "0", "0", "1"},
    });
    QVector b{-1, -1, -8, -8, 0, 0, 0, 0};
    return HPolyhedron(std::move(a), std::move(b));
}

HPolyhedron klee_walkup_q4_symmetric() {
    QMatrix a = matrix_from_text({
        {"3", "-3", "-1", "-2"},
        {"-3", "3", "-1", "-2"},
        {"-2", "1", "-1", "-3"},
        {"2", "-1", "-1", "-3"},
        {"-3", "-3", "1", "-2"},
        {"3", "3", "1", "-2"},
        {"1", "2", "1", "-3"},
        {"-1", "-2", "1", "-3"},
        {"0", "0", "0", "2"},
    });
    return HPolyhedron(std::move(a), constant_vector(9, -1));
}

HPolyhedron klee_walkup_q4_perturbed() {
    QMatrix c = matrix_from_text({
        {"3.2", "-3", "-1", "-2"},
        {"-3", "3.2", "-1", "-2"},
        {"-2", "1", "-1", "-3"},
        {"2", "-1", "-1", "-3"},
        {"-3", "-3", "1.05", "-2"},
        {"3", "3", "1.05", "-2"},
        {"1.05", "2", "1", "-3"},
        {"-1", "-2.05", "1", "-3"},
        {"0", "0", "0", "2"},
    });
    return HPolyhedron(std::move(c), constant_vector(9, -1));
}

HPolyhedron unit_cube(std::size_t d) {
    if (d == 0) throw UnknownInstance("cube dimension must be positive");
    QMatrix a(2 * d, d);
    QVector b(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        a(i, i) = 1;
        a(d + i, i) = -1;
        b[d + i] = -1;
    }
    return HPolyhedron(std::move(a), std::move(b));
}

HPolyhedron standard_simplex(std::size_t d) {
    if (d == 0) throw UnknownInstance("simplex dimension must be positive");
    QMatrix a(d + 1, d);
    QVector b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        a(i, i) = 1;
        a(d, i) = -1;
    }
    b[d] = -1;
    return HPolyhedron(std::move(a), std::move(b));
}

namespace {

// "cube(3)", "cube3" -> 3 for prefix "cube".
std::optional<std::size_t> family_dimension(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view rest = name.substr(prefix.size());
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    if (rest.empty()) return std::nullopt;
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || d == 0 || d > 64) return std::nullopt;
    return d;
}

}  // namespace

HPolyhedron builtin(std::string_view name) {
    if (name == "u4") return klee_walkup_u4();
    if (name == "q4_sym") return klee_walkup_q4_symmetric();
    if (name == "q4_pert") return klee_walkup_q4_perturbed();
    if (auto d = family_dimension(name, "cube")) return unit_cube(*d);
    if (auto d = family_dimension(name, "simplex")) return standard_simplex(*d);
    throw UnknownInstance("unknown instance '" + std::string(name) + "'");
}

HPolyhedron load_instance(const std::string& ref) {
    if (!ref.empty() && ref.front() == '@') return builtin(std::string_view(ref).substr(1));
    return read_hrep_file(ref);
}

std::vector<std::string> builtin_names() { return {"u4", "q4_sym", "q4_pert", "cube(d)", "simplex(d)"}; }

}  // namespace circdiam
