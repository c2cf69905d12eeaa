#pragma once

#include <string>

#include "json.hpp"
#include "topobim/freemod.hpp"

namespace topobim {

using Json = nlohmann::json;

/// {"labels":[ascending ids],"leq":[[0/1,...],...]}
Json topology_to_json(const Topology& t);
/// Validating; throws kMalformedInput, kNotReflexive, kNotTransitive.
Topology topology_from_json(const Json& j);

/// Keys: a topology object, {"topology":T,"open":[labels]},
/// {"base":T,"refinement":T}, or {"kind":name,"factors":[keys]}.
Json key_to_json(const BasisKey& key);
BasisKey key_from_json(const Json& j);

/// {"terms":[{"coeff":"p/q","key":K},...]} sorted by the serialised key.
Json lincomb_to_json(const LinComb& v);
LinComb lincomb_from_json(const Json& j);

/// Throws kMalformedInput with the parser's message.
Json parse_json(const std::string& text);

}  // namespace topobim
