#pragma once

#include <json.hpp>

#include "toric/cohomology.hpp"
#include "toric/layers.hpp"
#include "toric/pipeline.hpp"
#include "toric/posets.hpp"

namespace toric::io {

using json = nlohmann::ordered_json;

json int_to_json(const Int& x);
Int int_from_json(const json& j);

json arrangement_to_json(const ToricArrangement& arr);
/// Throws std::invalid_argument with all problems listed (offset format
/// violations and arrangement invariant violations alike).
ToricArrangement arrangement_from_json(const json& j);

/// "a,b;c,d" with rows separated by ';' and entries by ','.
IntMatrix parse_matrix(const std::string& s);

json matrix_to_json(const IntMatrix& m);
json layer_to_json(const Layer& l);
json layers_to_json(const std::vector<Layer>& layers);
json poset_to_json(const LayerPoset& lp);
/// Constant term first.
json polynomial_to_json(const std::vector<Int>& coeffs);
json certificate_to_json(const posets::SupersolvabilityCertificate& cert);
json witness_to_json(const NonGenerationWitness& w);
json report_to_json(const ObstructionReport& report);

}  // namespace toric::io
