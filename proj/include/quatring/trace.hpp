#ifndef QUATRING_TRACE_HPP_
#define QUATRING_TRACE_HPP_

#include <string>
#include <vector>

namespace quatring {

/* Optional sink for algorithm step annotations; labels are frozen strings so
 * control flow can be golden-tested. */
using trace_log = std::vector<std::string>;

inline void trace_step(trace_log* t, const char* label) {
    if (t) t->emplace_back(label);
}

}  // namespace quatring

#endif  // QUATRING_TRACE_HPP_
