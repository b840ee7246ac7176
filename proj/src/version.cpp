#include "sptree/version.hpp"

namespace sptree {

std::string_view version() noexcept { return SPTREE_VERSION; }
std::string_view build_hash() noexcept { return SPTREE_BUILD_HASH; }

}  // namespace sptree
