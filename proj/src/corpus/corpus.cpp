#include "lpm/corpus.hpp"

#include "corpus_data.hpp"

namespace lpm::corpus {

std::optional<std::string_view> file(std::string_view name) {
  for (const auto& [n, text] : table()) {
    if (n == name) return text;
  }
  return std::nullopt;
}

std::vector<std::string_view> names() {
  std::vector<std::string_view> out;
  for (const auto& [n, text] : table()) out.push_back(n);
  return out;
}

}  // namespace lpm::corpus
