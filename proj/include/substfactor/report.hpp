#pragma once

// JSON reports. Every document produced by the CLI is an envelope
//
//   {"schema_version": 1, "command": ..., "status": "ok" | "error",
//    "exit_code": ..., "result": {...}}       (or "error": {kind, message})
//
// Letters are written by name; partitions as lists of blocks of names.

#include <string>

#include <json.hpp>

#include "substfactor/deciders.hpp"
#include "substfactor/encodings.hpp"
#include "substfactor/semigroup.hpp"
#include "substfactor/transforms.hpp"
#include "substfactor/words.hpp"

namespace substfactor {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Substitution& s);
//! Inverse of to_json(Substitution). Throws InputError.
Substitution substitution_from_json(const Json& j);

Json to_json(const Partition& p, const Alphabet& alphabet);
Json to_json(const Transformation& t, const Alphabet& alphabet);
Json to_json(const DerivedSubstitution& d, const Alphabet& base);
Json to_json(const InnerEncoding& e);
Json to_json(const MinimalSets& ms, const Alphabet& alphabet);
Json to_json(const OuterEncoding& o, const Alphabet& alphabet);
Json to_json(const RSet& r, const Alphabet& alphabet);
Json to_json(const HeightInfo& h, const Alphabet& alphabet);
Json to_json(const PureBase& p, const Alphabet& base);
Json to_json(const AperiodicityResult& r);
Json to_json(const PairAperiodicityReport& r, const Alphabet& alphabet);

//! Semigroup summary, and the Green data of its kernel when green is given.
Json semigroup_json(const TransformationSemigroup& sg, const Alphabet& alphabet,
                    const GreenData* green);

Json to_json(const AAVerdict& v, const Alphabet& alphabet);
//! alphabet is that of the decided substitution.
Json to_json(const BijectiveVerdict& v, const Alphabet& alphabet);
Json to_json(const Analysis& a);

Json envelope(const std::string& command, int exit_code, Json result);
Json error_envelope(const std::string& command, int exit_code, const std::string& kind,
                    const std::string& message);

}  // namespace substfactor
