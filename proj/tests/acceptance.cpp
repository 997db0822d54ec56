// Acceptance gate: runs the ten property suites and prints one line each.
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "pavoid/acceptance.hpp"

int main() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads > 8) threads = 8;
  if (const char* env = std::getenv("PAVOID_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) threads = t;
  }

  bool all_pass = true;
  for (int id = 1; id <= 10; ++id) {
    pavoid::CriterionResult r = pavoid::run_criterion(id, threads);
    std::printf("%s %2d %-32s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
