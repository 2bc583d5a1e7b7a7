#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "jbdet/suites.hpp"

using namespace jbdet;

namespace {

const std::map<int, const char*> kCriteria = {
    {1, "Cayley-Dickson associativity and alternativity"},
    {2, "octonion multiplication table"},
    {3, "hat is a *-isomorphism"},
    {4, "determinant identities for n = 1..4"},
    {5, "closed form of dt_3 against the recursion"},
    {6, "relative determinant product rule"},
    {7, "minimal projections and rank two"},
    {8, "automorphism suites"},
    {9, "product rule for dt on C6"},
    {10, "simultaneous reduction to biquaternionic entries"},
    {11, "invertibility equivalence and the cubic"},
};

struct Tally {
  int properties = 0;
  int failed = 0;
  double worst_ratio = 0.0;
  std::vector<std::string> notes;
};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::map<int, Tally> tally;
  for (const std::string& name : suite_names()) {
    const SuiteReport r = run_suite(name);
    for (const PropertyResult& p : r.properties) {
      if (p.criterion == 0) continue;
      Tally& t = tally[p.criterion];
      ++t.properties;
      if (p.tolerance > 0) t.worst_ratio = std::max(t.worst_ratio, p.worst / p.tolerance);
      if (!p.pass()) {
        ++t.failed;
        t.notes.push_back(name + ": " + p.name + (p.note.empty() ? "" : " (" + p.note + ")"));
      }
    }
  }

  int failures = 0;
  for (const auto& [n, title] : kCriteria) {
    const auto it = tally.find(n);
    const bool ok = it != tally.end() && it->second.properties > 0 && it->second.failed == 0;
    if (!ok) ++failures;
    const Tally t = it == tally.end() ? Tally{} : it->second;
    std::printf("criterion %2d: %s  %s (%d properties, worst/tolerance %.2e)\n", n, ok ? "PASS" : "FAIL", title,
                t.properties, t.worst_ratio);
    for (const std::string& note : t.notes) std::printf("    %s\n", note.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of %zu criteria passed in %.1f s (seed %llu)\n", static_cast<int>(kCriteria.size()) - failures,
              kCriteria.size(), secs, static_cast<unsigned long long>(kDefaultSuiteSeed));
  return failures == 0 ? 0 : 1;
}
