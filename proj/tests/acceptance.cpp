// One PASS/FAIL line per acceptance criterion, aggregated over the full verify run.
#include <cstdio>
#include <cstdlib>
#include <map>

#include "hsm/verify.hpp"

int main(int argc, char** argv) {
  hsm::VerifyOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  const auto checks = hsm::run_suite("all", opt);
  std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
  std::map<int, std::string> suite, first_failure;
  for (const auto& c : checks) {
    if (c.criterion == 0) continue;
    auto& t = tally[c.criterion];
    ++t.second;
    if (c.pass) ++t.first;
    else if (!first_failure.count(c.criterion)) first_failure[c.criterion] = c.name + ": " + c.detail;
    suite[c.criterion] = c.suite;
  }
  bool ok = true;
  for (int k = 1; k <= 11; ++k) {
    const auto it = tally.find(k);
    const bool pass = it != tally.end() && it->second.first == it->second.second;
    ok = ok && pass;
    if (it == tally.end()) {
      std::printf("FAIL criterion %2d: no checks ran\n", k);
      continue;
    }
    std::printf("%s criterion %2d [%s] %d/%d%s%s\n", pass ? "PASS" : "FAIL", k, suite[k].c_str(), it->second.first,
                it->second.second, pass ? "" : "  first failure: ", pass ? "" : first_failure[k].c_str());
  }
  return ok ? 0 : 1;
}
