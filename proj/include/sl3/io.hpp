#pragma once

#include "sl3/cluster.hpp"

#include <string>

namespace sl3 {

// seed file: labels, frozen, B (doubled), pi, frame (serialized torus elements in the root torus)
std::string seed_json(const QuantumSeed& s);
QuantumSeed parse_seed(const std::string& text);
QuantumSeed load_seed(const std::string& path);

TorusElement parse_torus_element(FormPtr f, const std::string& text);

} // namespace sl3
