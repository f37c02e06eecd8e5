#include "bsdisc/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace bsdisc {

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0) return requested;
    if (const char *env = std::getenv("BSDISC_THREADS")) {
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc{} && *ptr == '\0' && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace bsdisc
