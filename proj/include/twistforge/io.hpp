#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "twistforge/frt.hpp"
#include "twistforge/inhom.hpp"

namespace twistforge {

using json = nlohmann::json;

// ring spec file: {"name": str, "dim": int, "unit": int|null,
//                  "product": [[rho, sigma, alpha, "p/q"], ...]}
RingPtr ring_from_json(const json& j);
json ring_to_json(const RingSpec& spec);

// Lie ring spec file: {"name": str, "dim": int, "B": [[mu, nu, sigma, "p/q"], ...]}
LieRingSpec lie_ring_from_json(const json& j);
json lie_ring_to_json(const LieRingSpec& spec);

// tensor element: {"degree": n, "entries": [[[i1,...,in], "p/q"], ...]}
TensorElement tensor_from_json(const json& j, RingPtr ring);
json tensor_to_json(const TensorElement& t);

// graded element: {"cutoff": N, "components": {"n": [[[i...], "p/q"], ...]}}
GradedElement graded_from_json(const json& j, RingPtr ring);
json graded_to_json(const GradedElement& g);

// twist family: {"cutoff": N, "components": {"m,k": [[[i...], "p/q"], ...]}}
GradedTwist twist_from_json(const json& j, RingPtr ring);
json twist_to_json(const GradedTwist& t);

// seeds file: {"seeds": [tensor, ...]} with the k-th entry of degree k+1
std::vector<TensorElement> seeds_from_json(const json& j, RingPtr ring);

// relation set: [{"word": [labels], "coeff": "p/q"}, ...] per relation
json relation_set_to_json(const RelationSet& rs);

json report_to_json(const Report& rep);

json load_json_file(const std::string& path);

enum class SpecKind { ring, lie_ring };
SpecKind detect_spec_kind(const json& j);

}  // namespace twistforge
