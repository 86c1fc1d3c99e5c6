#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace lpm::corpus {

const std::vector<std::pair<std::string_view, std::string_view>>& table();

}  // namespace lpm::corpus
