// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>

#include "wildrep/selftest.hpp"

int main() {
  using namespace wildrep::checks;
  Options o;  // precision 64, 10^4 cube trials per field shape
  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& r : run_all(o)) {
    std::printf("criterion %d %s: %s (%s)\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    failed += !r.passed;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 9 criteria passed in %.1f s\n", 9 - failed, secs);
  return failed == 0 ? 0 : 1;
}
