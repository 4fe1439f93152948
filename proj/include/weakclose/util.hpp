#ifndef WEAKCLOSE_UTIL_HPP
#define WEAKCLOSE_UTIL_HPP

#include <functional>

namespace weakclose {

// Worker count for data-parallel loops; reads WEAKCLOSE_THREADS once.
int thread_budget();

// Runs fn(i) for i in [0,n). Splits into contiguous chunks when the
// budget allows; results must not depend on execution order.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace weakclose

#endif
