#include "assoc/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace assoc {

Budget Budget::from_env() {
    Budget b;
    const char* raw = std::getenv("ASSOC_MAX_NODES");
    if (!raw) return b;
    std::size_t value = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) b.max_nodes = value;
    return b;
}

}  // namespace assoc
