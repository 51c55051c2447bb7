#ifndef CIRCDIAM_CERTIFICATE_HPP
#define CIRCDIAM_CERTIFICATE_HPP

#include "circdiam/rational.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace circdiam {

struct WalkStep {
    ZVector direction;  // expected to be a primitive signed circuit
    Rational length;

    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

struct WalkCertificate {
    std::string instance;  // "@name" or a file path
    QVector start;
    std::vector<WalkStep> steps;
    QVector end;

    friend bool operator==(const WalkCertificate&, const WalkCertificate&) = default;
};

// {"instance": "...", "start": ["p/q", ...],
//  "steps": [{"direction": ["1", "0", ...], "length": "p/q"}, ...],
//  "end": ["p/q", ...]}
nlohmann::json to_json(const WalkCertificate& cert);
/// Throws std::invalid_argument on schema violations or malformed numbers.
WalkCertificate certificate_from_json(const nlohmann::json& doc);

void write_certificate(const WalkCertificate& cert, const std::string& path);
WalkCertificate read_certificate(const std::string& path);

}  // namespace circdiam

#endif
