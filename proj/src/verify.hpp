#ifndef DIFUN_VERIFY_HPP_
#define DIFUN_VERIFY_HPP_

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace difun {

// How hard to look: Formula checks arithmetic identities only, Closure
// additionally materializes elements and closes generating sets, and
// Exhaustive sweeps every element, pair, triple, or subset in range.
enum class Depth { Formula, Closure, Exhaustive };

std::optional<Depth> parse_depth(const std::string& name);
std::string depth_name(Depth depth);

struct VerificationPlan {
  int n = 2;
  Depth depth = Depth::Formula;
  std::uint64_t budget = 0;  // max ⋄ products; 0 = unlimited
};

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::uint64_t products_used = 0;
};

struct VerificationReport {
  VerificationPlan plan;
  std::vector<CheckResult> checks;

  bool any_failed() const;
  bool any_inconclusive() const;
  bool all_passed() const;  // nothing failed, nothing cut short
};

// Runs every check the depth admits. Deeper levels include the shallower
// ones. Ground-set bounds: Formula up to 30, Closure up to 4, Exhaustive
// up to 3; a plan outside these is a DomainError. Checks that need more
// room than n offers pass with a note instead of running.
VerificationReport run_verification(const VerificationPlan& plan);

std::string render_report_text(const VerificationReport& report);
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace difun

#endif  // DIFUN_VERIFY_HPP_
