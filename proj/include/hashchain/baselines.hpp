#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hashchain/hash.hpp"
#include "hashchain/search.hpp"

namespace hashchain {

enum class BaselineAlgo { naive, horspool };

std::string_view to_string(BaselineAlgo algo) noexcept;
std::optional<BaselineAlgo> parse_baseline(std::string_view name) noexcept;

/// Direct comparison at every alignment. The ground-truth oracle.
std::vector<Occurrence> naive_search(ByteView pattern, ByteView text);

/// Horspool with a 256-entry bad-character table.
std::vector<Occurrence> horspool_search(ByteView pattern, ByteView text);

std::vector<Occurrence> run_baseline(BaselineAlgo algo, ByteView pattern, ByteView text);

}  // namespace hashchain
