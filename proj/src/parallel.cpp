#include "crystalcheck/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include <omp.h>

namespace crystalcheck {

auto threads_from_environment() -> std::optional<int>
{
    const char * raw = std::getenv("CRYSTALCHECK_THREADS");
    if (! raw)
        return std::nullopt;
    std::string_view text(raw);
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value < 1)
        return std::nullopt;
    return value;
}

void configure_threads_from_environment()
{
    if (auto t = threads_from_environment())
        omp_set_num_threads(*t);
}

}
