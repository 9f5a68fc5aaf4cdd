// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every criterion is an exact identity; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "dilute/checks.hpp"

namespace {

struct Criterion {
  std::string id;
  std::string description;
  std::vector<std::string> check_names;  // registry checks that must all pass
};

const std::vector<Criterion> kCriteria = {
    {"criterion-01", "two-colour dimension table and Catalan product, n <= 5",
     {"dimension-table"}},
    {"criterion-02", "matrix-unit structure with multinomial module dimensions, c <= 3, n <= 4",
     {"matrix-units"}},
    {"criterion-03", "content-balanced subalgebra: dimension formula, closure, Pierce corner",
     {"hat-subalgebra"}},
    {"criterion-04", "folded dimension diagram reproduced for n <= 8 with split pairs",
     {"figure-rows"}},
    {"criterion-05", "generating-function coefficients equal cell dimensions; completeness",
     {"generating-function", "graph-product"}},
    {"criterion-06", "five orthogonal idempotents complete for n <= 4, all positions",
     {"idempotents"}},
    {"criterion-07", "braid map: inverses and braid relation on three strands",
     {"braid-map"}},
    {"criterion-08", "R-matrix suite: YBE, unit, commutation, crossing, braid limit, idempotent form",
     {"yang-baxter", "unit", "commutation", "crossing", "braid-limit", "idempotent-form"}},
    {"criterion-09", "conditional expectation rules, Markov factor, trace symmetry, move invariance",
     {"expectation-rules", "markov-property", "trace-symmetry", "move-invariance"}},
    {"criterion-10", "trace invariant equals the colour-sum state oracle after calibration",
     {"oracle-crosscheck"}},
    {"criterion-11", "wreath Hopf relations and both tensor lemmas by subspaces and characters",
     {"hopf-relations", "tensor-lemmas", "irreducibility", "folded-consistency"}},
    {"criterion-12", "bimodule spanning of the next level by exact rank, n = 1, 2",
     {"bimodule-span"}},
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::map<std::string, dilute::CheckResult> results;
  std::map<std::string, double> timings;
  for (const auto& check : dilute::all_checks()) {
    auto start = clock::now();
    results[check.name] = check.run();
    timings[check.name] =
        std::chrono::duration<double>(clock::now() - start).count();
  }

  int failures = 0;
  for (const auto& criterion : kCriteria) {
    bool pass = true;
    std::string detail;
    double seconds = 0;
    for (const auto& name : criterion.check_names) {
      const auto& r = results.at(name);
      seconds += timings.at(name);
      if (!r.pass) {
        pass = false;
        detail = name + ": " + r.witness;
        break;
      }
      if (!r.witness.empty()) detail = r.witness;  // e.g. reported calibration constants
    }
    std::printf("%s [%s] %s (%.2fs)\n", criterion.id.c_str(), pass ? "PASS" : "FAIL",
                criterion.description.c_str(), seconds);
    if (!detail.empty()) std::printf("    %s\n", detail.c_str());
    if (!pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failures,
              kCriteria.size());
  return failures == 0 ? 0 : 1;
}
