#pragma once

#include "bellkit/geom.hpp"
#include "bellkit/localset.hpp"
#include "bellkit/quantum.hpp"
#include "bellkit/scenario.hpp"

#include "json.hpp"

#include <variant>

namespace bellkit::jsonio {

// Ordered documents keep the emitted key order fixed, which keeps CLI
// output byte-stable across runs.
using Json = nlohmann::ordered_json;

/// A parsed behavior in whichever numeric mode the document declares.
using AnyBehavior = std::variant<Behavior, BehaviorF>;
using AnyCorrelators = std::variant<CorrelatorPoint, CorrelatorPointF>;

// Behavior: {"scenario":[mA,mB,dA,dB],"mode":"exact"|"float","probs":[...]}.
// Exact probabilities are "num/den" strings; float probabilities are JSON
// numbers. A number in an exact document is rejected, never reinterpreted.
Json behavior_to_json(const Behavior& b);
Json behavior_to_json(const BehaviorF& b);
AnyBehavior behavior_from_json(const Json& j);

// CorrelatorPoint: {"m":[...],"c":[...]}, same entry conventions.
Json correlators_to_json(const CorrelatorPoint& p);
Json correlators_to_json(const CorrelatorPointF& p);
AnyCorrelators correlators_from_json(const Json& j);

// VPolytope: {"dim":n,"vertices":[["p/q",...],...]}.
Json vpolytope_to_json(const geom::VPolytope& p);
geom::VPolytope vpolytope_from_json(const Json& j);

// HPolytope: {"dim":n,"ineqs":[{"a":[...],"b":"p/q"},...],"eqs":[...]}.
// Extra keys (facet class tags) are ignored on input.
Json hpolytope_to_json(const geom::HPolytope& h);
geom::HPolytope hpolytope_from_json(const Json& j);

// BellFunctional: {"beta_m":[...],"beta_c":[...],"bound":"2"}.
Json functional_to_json(const BellFunctional& f);
BellFunctional functional_from_json(const Json& j);

// QuantumModel: {"state":[[re,im],... 16 row-major],"alice":[[nx,ny,nz],
// [nx,ny,nz]],"bob":[...]}.
Json model_to_json(const quantum::QuantumModel& qm);
quantum::QuantumModel model_from_json(const Json& j);

}  // namespace bellkit::jsonio
