#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace lpm::corpus {

// Contents of a bundled example file such as "booleans.tffx".
std::optional<std::string_view> file(std::string_view name);
std::vector<std::string_view> names();

}  // namespace lpm::corpus
