#include "coinv/parallel.hpp"

namespace coinv::parallel {

namespace {
std::atomic<unsigned> configured_jobs{0};
}

unsigned default_jobs()
{
    const unsigned jobs = configured_jobs.load();
    if (jobs != 0)
        return jobs;
    const unsigned cores = std::thread::hardware_concurrency();
    return cores == 0 ? 1 : cores;
}

void set_default_jobs(unsigned jobs)
{
    configured_jobs.store(jobs);
}

} // namespace coinv::parallel
