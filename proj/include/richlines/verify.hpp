#pragma once

#include "richlines/instance.hpp"
#include "richlines/oracle.hpp"

#include <json.hpp>

#include <string>

namespace richlines {

using Json = nlohmann::ordered_json;

struct VerifyOptions {
    bool oracle = false;
    std::size_t oracle_cap = kDefaultOracleCap;
};

struct VerificationReport {
    Json doc;
    bool breach = false;
    bool vacuous = false;
    int exit_code() const { return breach ? 1 : 0; }
};

/// Runs rich-line enumeration, the hypersurface and hyperplane pipelines and
/// every checkable invariant. Failures are recorded with a witness instead of
/// thrown; PreconditionError and ParseError still propagate.
VerificationReport verify(const Instance& inst, int r, const VerifyOptions& opts = {});

Json instance_summary(const Instance& inst);
Json to_json(const Line& l);
Json to_json(const Hyperplane& h);
Json to_json(const Point& p);

/// Plain text rendering of a report document.
std::string render_text(const Json& doc);

}  // namespace richlines
