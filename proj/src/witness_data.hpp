#pragma once

#include <string_view>

namespace sym3::detail {

// Contents of data/witnesses/<name>.json, compiled in by CMake.
std::string_view embedded_witness(std::string_view name);

}  // namespace sym3::detail
