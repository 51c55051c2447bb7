#include "circdiam/certificate.hpp"

#include <fstream>
#include <stdexcept>

namespace circdiam {

using nlohmann::json;

namespace {

json rationals_to_json(const QVector& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

Rational rational_from_json(const json& j, const char* field) {
    if (!j.is_string()) throw std::invalid_argument(std::string(field) + ": expected a rational string");
    auto q = parse_rational(j.get<std::string>());
    if (!q) throw std::invalid_argument(std::string(field) + ": malformed rational '" + j.get<std::string>() + "'");
    return *q;
}

QVector rationals_from_json(const json& j, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string(field) + ": expected an array");
    QVector out;
    for (const auto& e : j) out.push_back(rational_from_json(e, field));
    return out;
}

Integer integer_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("direction: expected integer strings");
    auto q = parse_rational(j.get<std::string>());
    if (!q || q->get_den() != 1 || j.get<std::string>().find_first_of("./eE") != std::string::npos)
        throw std::invalid_argument("direction: malformed integer '" + j.get<std::string>() + "'");
    return q->get_num();
}

}  // namespace

json to_json(const WalkCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json dir = json::array();
        for (const auto& z : s.direction) dir.push_back(z.get_str());
        steps.push_back({{"direction", dir}, {"length", to_string(s.length)}});
    }
    return {{"instance", cert.instance},
            {"start", rationals_to_json(cert.start)},
            {"steps", steps},
            {"end", rationals_to_json(cert.end)}};
}

WalkCertificate certificate_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("certificate must be a JSON object");
    for (const char* key : {"instance", "start", "steps", "end"})
        if (!doc.contains(key)) throw std::invalid_argument(std::string("certificate is missing '") + key + "'");
    if (!doc["instance"].is_string()) throw std::invalid_argument("instance: expected a string");
    if (!doc["steps"].is_array()) throw std::invalid_argument("steps: expected an array");

    WalkCertificate cert;
    cert.instance = doc["instance"].get<std::string>();
    cert.start = rationals_from_json(doc["start"], "start");
    cert.end = rationals_from_json(doc["end"], "end");
    for (const auto& s : doc["steps"]) {
        if (!s.is_object() || !s.contains("direction") || !s.contains("length") || !s["direction"].is_array())
            throw std::invalid_argument("steps: each step needs 'direction' and 'length'");
        WalkStep step;
        for (const auto& z : s["direction"]) step.direction.push_back(integer_from_json(z));
        step.length = rational_from_json(s["length"], "length");
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

void write_certificate(const WalkCertificate& cert, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write certificate to '" + path + "'");
    out << to_json(cert).dump(2) << "\n";
}

WalkCertificate read_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open certificate '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    return certificate_from_json(doc);
}

}  // namespace circdiam
