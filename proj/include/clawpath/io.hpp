#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "clawpath/graph.hpp"
#include "clawpath/interval.hpp"
#include "clawpath/pipeline.hpp"
#include "clawpath/reductions.hpp"
#include "clawpath/strips.hpp"

namespace clawpath {

using Json = nlohmann::json;

// "n m" then m lines "u v"; '#' starts a comment. An optional trailing line
// "t v1 v2 ..." lists terminals. Throws InputError with a line number.
Instance read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Instance& inst);

// {"n":..., "edges":[[u,v],...], "terminals":[...], "variant":"ordered-path"}
Instance instance_from_json(const Json& j);
Json to_json(const Instance& inst);

Json to_json(const Graph& g);
Json to_json(const PathCertificate& c);
Json to_json(const Stats& s);
Json to_json(const Answer& a);
// Reads the verdict and certificate fields; stats are ignored.
Answer answer_from_json(const Json& j);
Json to_json(const ReductionTrace& t);
Json to_json(const IntervalRepresentation& r);  // rationals as "p/q"
IntervalRepresentation interval_representation_from_json(const Json& j);
Json to_json(const StripComposition& c);

Verdict parse_verdict(const std::string& s);

}  // namespace clawpath
