#include "groupdet/parallel.hpp"

namespace groupdet {

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_default_jobs(unsigned jobs) { g_jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs; }

unsigned default_jobs() { return g_jobs; }

}  // namespace groupdet
