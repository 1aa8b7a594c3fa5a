#pragma once

#include "json.hpp"
#include "kernelcut/graph.hpp"

namespace kernelcut {

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json result_to_json(const KernelResult& r);

}  // namespace kernelcut
