#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstirling/core.hpp"
#include "qstirling/multiset.hpp"

namespace qstirling {

enum class Outcome { pass, fail, skipped };

std::string to_string(Outcome o);

struct IdentityParams {
  MultisetSpec multiset;
  int order = 10;                      // series truncation order
  int max_total = kDefaultMaxTotal;    // global guard on M
  int jobs = 1;
};

struct IdentityResult {
  std::string id;
  MultisetSpec multiset;
  Outcome outcome = Outcome::skipped;
  nlohmann::json detail;          // what was compared (sizes, polynomials, tables)
  nlohmann::json counterexample;  // null unless outcome == fail
  std::string reason;             // why a check failed or was skipped
};

// Which multisets an identity is stated for.
enum class Domain {
  any,           // every multiset
  permutations,  // {1, 2, ..., n}
  stirling,      // {1^2, 2^2, ..., n^2}
};

struct IdentityInfo {
  std::string id;
  std::string statement;  // the identity written out
  Domain domain = Domain::any;
  // Largest M the check enumerates in a sweep; above it the result is
  // skipped (guard) rather than run.
  int budget = kDefaultMaxTotal;
  std::function<IdentityResult(const IdentityParams&)> check;
};

// All registered identities in a fixed order.
const std::vector<IdentityInfo>& registry();

// Throws InvalidInput for an unknown id.
const IdentityInfo& find_identity(const std::string& id);

bool applies_to(const IdentityInfo& info, const MultisetSpec& m);

// The canonical multiset of a domain for size n ({1..n} or {1^2..n^2}).
MultisetSpec domain_multiset(Domain d, int n);

// Throws InvalidInput when the identity is not stated for the multiset and
// GuardExceeded when M exceeds params.max_total. A multiset above the
// identity's budget still runs when asked for directly.
IdentityResult run_identity(const std::string& id, const IdentityParams& params);

struct SweepReport {
  int max_M = 0;
  std::size_t multisets = 0;
  std::vector<IdentityResult> results;  // ordered by multiset, then registry order
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool ok() const { return failed == 0; }
};

// Runs every applicable identity on every multiset with M <= max_M. Checks
// whose budget is below M are recorded as skipped. The report does not
// depend on jobs. Throws GuardExceeded when max_M > max_total.
SweepReport sweep(int max_M, int order = 10, int max_total = kDefaultMaxTotal, int jobs = 1);

// Sweep reports leave out the per-check detail; failures keep their counterexample.
nlohmann::json to_json(const IdentityResult& r, bool with_detail = true);
nlohmann::json to_json(const SweepReport& r);

}  // namespace qstirling
