#pragma once

// JSON encodings shared by the CLI, the batch runner and the Python module.

#include "tktile/exact.hpp"
#include "tktile/fractional.hpp"
#include "tktile/lattice.hpp"
#include "tktile/rainbow.hpp"

#include <json.hpp>

#include <string_view>

namespace tktile {

using Json = nlohmann::ordered_json;

constexpr std::string_view tool_version = "0.1.0";
constexpr int report_schema_version = 1;

auto to_json(const Rational & q) -> Json;
auto to_json(const std::vector<Rational> & v) -> Json;
auto to_json(const TkCopy & copy) -> Json;
auto to_json(const Tiling & tiling) -> Json;
auto to_json(const FractionalTiling & w) -> Json;
auto to_json(const FarkasCertificate & c) -> Json;
auto to_json(const RobustVector & v) -> Json;
auto to_json(const RobustReport & r) -> Json;
auto to_json(const Connector & c) -> Json;
auto to_json(const Absorber & a) -> Json;
auto to_json(const RainbowTiling & rt) -> Json;
auto to_json(const StageReport & s) -> Json;
auto to_json(const IntVector & v) -> Json;

}
