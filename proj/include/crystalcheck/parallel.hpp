#pragma once

#include <optional>

namespace crystalcheck {

/// Parses CRYSTALCHECK_THREADS; empty when unset or not a positive integer.
auto threads_from_environment() -> std::optional<int>;

/// Applies CRYSTALCHECK_THREADS to the OpenMP runtime if set.
void configure_threads_from_environment();

}
