#pragma once

#include <string_view>

namespace sptree {

std::string_view version() noexcept;
std::string_view build_hash() noexcept;

}  // namespace sptree
