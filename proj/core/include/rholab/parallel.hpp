#pragma once

// Deterministic worker pool. Work items are independent and write only to
// their own index, so results never depend on scheduling. The worker count
// comes from the RHOLAB_WORKERS environment variable when set.

#include <cstdint>
#include <functional>

namespace rholab {

unsigned worker_count();

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body);

} // namespace rholab
