#pragma once

#include <cstddef>
#include <functional>

namespace krein {

/// Process-wide worker cap for data-parallel loops (2D transforms, repeated
/// right-hand sides). Default 1 = fully serial; the CLI sets it from
/// --threads.
void set_max_threads(std::size_t n);
std::size_t max_threads();

/// Runs fn(begin, end) over [0, count) split across up to max_threads()
/// workers. Serial when the range is small or the cap is 1.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace krein
