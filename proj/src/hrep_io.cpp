#include "circdiam/hrep_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace circdiam {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return lines;
}

std::size_t parse_count(const Line& line, std::string_view keyword) {
    if (line.tokens.size() != 2 || line.tokens[0] != keyword)
        throw ParseError(line.number, "expected '" + std::string(keyword) + " <count>'");
    const auto& t = line.tokens[1];
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line.number, "malformed count '" + t + "'");
    return std::stoul(t);
}

void parse_row(const Line& line, std::size_t dim, QMatrix& m, QVector& rhs) {
    if (line.tokens.size() != dim + 1)
        throw ParseError(line.number, "expected " + std::to_string(dim + 1) + " entries, found " +
                                          std::to_string(line.tokens.size()));
    QVector values;
    values.reserve(dim + 1);
    for (const auto& tok : line.tokens) {
        auto q = parse_rational(tok);
        if (!q) {
            if (tok.find('/') != std::string::npos && tok.substr(tok.find('/') + 1).find_first_not_of("0") == std::string::npos)
                throw ParseError(line.number, "zero denominator in '" + tok + "'");
            throw ParseError(line.number, "malformed number '" + tok + "'");
        }
        values.push_back(std::move(*q));
    }
    rhs.push_back(values.back());
    values.pop_back();
    m.append_row(values);
}

}  // namespace

HPolyhedron parse_hrep(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t i = 0;
    if (lines.empty()) throw ParseError(1, "missing 'dim' header");
    const std::size_t dim = parse_count(lines[i++], "dim");
    if (dim == 0) throw ParseError(lines[0].number, "dimension must be positive");

    std::size_t m1 = 0;
    if (i < lines.size() && lines[i].tokens[0] == "eq") m1 = parse_count(lines[i++], "eq");
    if (i >= lines.size()) throw ParseError(lines.back().number + 1, "missing 'ineq' header");
    const std::size_t m2 = parse_count(lines[i++], "ineq");
    if (m2 == 0) throw ParseError(lines[i - 1].number, "at least one inequality is required");

    QMatrix eq(0, dim), ineq(0, dim);
    QVector eq_rhs, ineq_rhs;
    for (std::size_t k = 0; k < m1 + m2; ++k, ++i) {
        if (i >= lines.size())
            throw ParseError(lines.back().number + 1, "expected " + std::to_string(m1 + m2) + " rows, found " +
                                                          std::to_string(k));
        if (k < m1)
            parse_row(lines[i], dim, eq, eq_rhs);
        else
            parse_row(lines[i], dim, ineq, ineq_rhs);
    }
    if (i < lines.size()) throw ParseError(lines[i].number, "unexpected trailing row");
    return HPolyhedron(std::move(eq), std::move(eq_rhs), std::move(ineq), std::move(ineq_rhs));
}

HPolyhedron read_hrep_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hrep(buf.str());
}

std::string serialize_hrep(const HPolyhedron& p) {
    std::string out = "dim " + std::to_string(p.dim()) + "\n";
    if (p.num_equalities() > 0) out += "eq " + std::to_string(p.num_equalities()) + "\n";
    out += "ineq " + std::to_string(p.num_inequalities()) + "\n";
    auto emit = [&](const QMatrix& m, const QVector& rhs) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (const auto& q : m.row(r)) out += to_string(q) + " ";
            out += to_string(rhs[r]) + "\n";
        }
    };
    emit(p.eq_matrix(), p.eq_rhs());
    emit(p.ineq_matrix(), p.ineq_rhs());
    return out;
}

}  // namespace circdiam
