#include "verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "relations.hpp"
#include "semigroup.hpp"

namespace difun {

namespace {

struct CheckFailure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure{message};
}

struct Runner {
  const VerificationPlan& plan;
  ProductBudget& budget;
  VerificationReport& report;

  void run(const std::string& name,
           const std::function<std::string()>& body) {
    CheckResult result;
    result.name = name;
    const std::uint64_t before = budget.used();
    try {
      result.detail = body();
      result.status = CheckStatus::Pass;
    } catch (const CheckFailure& failure) {
      result.status = CheckStatus::Fail;
      result.detail = failure.message;
    } catch (const BudgetError&) {
      result.status = CheckStatus::Inconclusive;
      result.detail = "product budget exhausted before the check finished";
    }
    result.products_used = budget.used() - before;
    report.checks.push_back(std::move(result));
  }
};

std::string counted(std::uint64_t k, const char* what) {
  std::ostringstream out;
  out << k << ' ' << what;
  return out.str();
}

// ---- formula depth -------------------------------------------------------

std::string check_rank_decomposition(int n) {
  for (int r = 0; r <= n; ++r) {
    RankReport rep = rank_report(n, r);
    require(rep.rank == rep.brandt_rank + rep.relative_rank,
            "additive rank split broke at r = " + std::to_string(r));
    BigCount expected = (r == 1 || r == 2) ? rep.rho - 1 : rep.rho;
    require(rep.rank == expected,
            "rho offset rule broke at r = " + std::to_string(r));
    require(rep.rank <= rep.constructed_set_size,
            "rank exceeds the constructed generating set at r = " +
                std::to_string(r));
  }
  return counted(static_cast<std::uint64_t>(n) + 1, "levels checked");
}

std::string check_full_rank_bell_identity(int n) {
  if (n < 2) return "skipped: the closed form is claimed from n = 2 up";
  if (n == 2) {
    require(rank_report(2, 2).rank == 3, "the n = 2 special value moved");
    return "n = 2 special value 3 confirmed";
  }
  require(rank_report(n, n).rank == bell(n) + n,
          "full rank disagrees with bell(n) + n");
  return "bell(n) + n reproduced";
}

std::string check_kernel_count_consistency(int n) {
  for (int r = 0; r <= n; ++r)
    require(count_r_classes(n, r) == count_r_classes_by_domain(n, r),
            "kernel-count routes disagree at r = " + std::to_string(r));
  return counted(static_cast<std::uint64_t>(n) + 1, "levels cross-checked");
}

// ---- closure depth -------------------------------------------------------

std::string check_element_count(int n) {
  BigCount structural = 0;
  for (int r = 0; r <= n; ++r) {
    BigCount classes = count_r_classes(n, r);
    BigCount factorial = 1;
    for (int i = 2; i <= r; ++i) factorial *= i;
    structural += classes * classes * factorial;
  }

  std::uint64_t filtered = 0;
  const int bits = n * n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    BinaryRelation rel(n);
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (code & (std::uint64_t{1} << ((x - 1) * n + (y - 1))))
          rel.add(x, y);
    if (is_difunctional(rel)) ++filtered;
  }

  const std::size_t listed = enumerate_all(n).size();
  require(BigCount(listed) == structural,
          "structural count disagrees with the enumeration");
  require(BigCount(filtered) == structural,
          "bitmask filtering disagrees with the structural count");
  return counted(filtered, "elements by three routes");
}

std::string check_chain_size_formula(int n) {
  if (n < 2) return "skipped: no chain levels exist below n = 2";
  for (int k = 1; k <= n - 1; ++k)
    require(BigCount(sigma_k(n, k).size()) == stirling2(n, k) + 1,
            "chain size broke at k = " + std::to_string(k));
  return counted(static_cast<std::uint64_t>(n) - 1, "chain levels sized");
}

std::string check_chain_reachability(int n, ProductBudget& budget) {
  if (n < 2) return "skipped: no chain levels exist below n = 2";
  auto mul = [&budget](const DifunRelation& a, const DifunRelation& b) {
    budget.charge();
    return diamond(a, b);
  };
  std::uint64_t identities = 0;
  for (int k = 1; k <= n - 1; ++k) {
    auto parts = enumerate_partitions(n, full_mask(n), k);
    std::vector<DifunRelation> links;
    for (std::size_t l = 0; l + 1 < parts.size(); ++l)
      links.push_back(phi_rel(parts[l], parts[l + 1]));
    for (std::size_t l = 0; l < parts.size(); ++l) {
      DifunRelation down = lambda_rel(parts.back());
      for (std::size_t i = links.size(); i > l; --i)
        down = mul(links[i - 1], down);
      require(down == lambda_rel(parts[l]),
              "collapse chain identity broke at k = " + std::to_string(k));
      DifunRelation up = rho_rel(parts.front());
      for (std::size_t i = 0; i < l; ++i) up = mul(up, links[i]);
      require(up == rho_rel(parts[l]),
              "expansion chain identity broke at k = " + std::to_string(k));
      identities += 2;
    }
  }
  return counted(identities, "chain identities");
}

std::string check_generation_closure(int n, ProductBudget& budget) {
  if (n < 2)
    return "skipped at n = 1: the zero needs two mismatched blocks to arise "
           "as a product";
  std::uint64_t total = 0;
  for (int r = 1; r <= n; ++r) {
    ClosureOptions opts;
    opts.budget = &budget;
    auto result = closure(build_ideal_generators(n, r).items(), opts);
    require(result.exhausted(), "closure stopped early at r = " + std::to_string(r));
    require(result.elements() == enumerate_ideal(n, r),
            "generated set differs from the ideal at r = " + std::to_string(r));
    total += result.elements().size();
  }
  return counted(total, "elements generated across all levels");
}

std::string check_decomposition_reassembly(int n, ProductBudget& budget) {
  std::uint64_t checked = 0;
  for (int r = 1; r <= n; ++r) {
    for (const auto& low : enumerate_ideal(n, r - 1)) {
      budget.charge(4);  // two products inside, two to reassemble
      Decomposition d = decompose(low, r);
      require(diamond(diamond(d.beta, d.gamma), d.delta) == low,
              "reassembly failed at r = " + std::to_string(r));
      require(d.gamma.rank() == low.rank(), "middle piece changed rank");
      require(is_partial_injection(d.gamma), "middle piece is not injective");
      require(d.beta.defect() == 0 && d.delta.codefect() == 0,
              "outer pieces lost fullness");
      require(d.beta.rank() <= r && d.delta.rank() <= r,
              "outer pieces left the ideal");
      ++checked;
    }
  }
  return counted(checked, "decompositions reassembled");
}

std::string check_factorization_laws_closure(int n, ProductBudget& budget) {
  const int r = std::min(n, 2);
  std::uint64_t checked = 0;
  ClosureOptions opts;
  opts.budget = &budget;
  opts.on_product = [&checked](const DifunRelation& left,
                               const DifunRelation& right,
                               const DifunRelation& prod) {
    require(check_factorization_laws(prod, left, right),
            "a closure step violated the factorization laws");
    ++checked;
  };
  closure(build_ideal_generators(n, r).items(), opts);
  return counted(checked, "witnessed factorizations checked");
}

std::string check_audit_chain_sets(int n) {
  for (int r = 1; r <= n; ++r) {
    ElementSet chains = set_difference_of(build_ideal_generators(n, r),
                                          enumerate_j_class(n, r));
    require(audit_necessary_elements(n, r, chains).passed,
            "chain sets failed their own audit at r = " + std::to_string(r));
  }
  return counted(static_cast<std::uint64_t>(n), "levels audited");
}

// ---- exhaustive depth ----------------------------------------------------

std::string check_associativity(int n, ProductBudget& budget) {
  auto all = enumerate_all(n);
  auto mul = [&budget](const DifunRelation& a, const DifunRelation& b) {
    budget.charge();
    return diamond(a, b);
  };
  std::uint64_t triples = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      DifunRelation ab = mul(a, b);
      for (const auto& c : all) {
        require(mul(ab, c) == mul(a, mul(b, c)),
                "associativity broke on a concrete triple");
        ++triples;
      }
    }
  }
  return counted(triples, "triples");
}

std::string check_inverse_uniqueness(int n, ProductBudget& budget) {
  auto all = enumerate_all(n);
  auto mul = [&budget](const DifunRelation& a, const DifunRelation& b) {
    budget.charge();
    return diamond(a, b);
  };
  for (const auto& a : all) {
    DifunRelation inv = inverse(a);
    require(mul(mul(a, inv), a) == a, "inverse fails a ⋄ a' ⋄ a = a");
    require(mul(mul(inv, a), inv) == inv, "inverse fails a' ⋄ a ⋄ a' = a'");
    int count = 0;
    for (const auto& b : all)
      if (mul(mul(a, b), a) == a && mul(mul(b, a), b) == b) ++count;
    require(count == 1, "generalized inverse is not unique");
  }
  return counted(all.size(), "elements with unique inverses");
}

std::string check_partial_injection_agreement(int n, ProductBudget& budget) {
  std::vector<DifunRelation> injections;
  for (const auto& a : enumerate_all(n))
    if (is_partial_injection(a)) injections.push_back(a);
  std::uint64_t pairs = 0;
  for (const auto& a : injections)
    for (const auto& b : injections) {
      budget.charge();
      DifunRelation lhs = diamond(a, b);
      DifunRelation rhs = to_canonical(compose(expand_pairs(a), expand_pairs(b)));
      require(lhs == rhs,
              "block product and plain composition split on injections");
      ++pairs;
    }
  return counted(pairs, "injection pairs compared");
}

std::string check_green_agreement(int n, ProductBudget& budget) {
  auto universe = enumerate_all(n);
  const GreenRelation kinds[] = {GreenRelation::R, GreenRelation::L,
                                 GreenRelation::J, GreenRelation::H};
  std::uint64_t compared = 0;
  for (GreenRelation kind : kinds) {
    for (const auto& b : universe) {
      ElementSet down = definitional_down_set(kind, b, universe, &budget);
      for (const auto& a : universe) {
        require(down.contains(a) == green_leq(kind, a, b),
                "structural and definitional orders disagree");
        ++compared;
      }
    }
  }
  return counted(compared, "ordered pairs across all four relations");
}

std::string check_brute_force_ranks(int n, ProductBudget& budget) {
  SubsetSearchOptions opts;
  opts.budget = &budget;
  std::ostringstream detail;
  if (n == 1) {
    require(brute_force_rank(1, 0, 2, opts).size == 1, "zero ideal rank moved");
    require(brute_force_rank(1, 1, 3, opts).size == 2,
            "two-element semigroup rank moved");
    return "1-point ground set: ranks 1 and 2 confirmed by search";
  }
  if (n == 2) {
    for (int r = 1; r <= 2; ++r) {
      int ideal_rank = brute_force_rank(2, r, 5, opts).size;
      require(BigCount(ideal_rank) == rank_report(2, r).rank,
              "searched ideal rank disagrees at r = " + std::to_string(r));
      int top = brute_force_top_class_rank(2, r, 5, opts).size;
      int rel = brute_force_relative_rank(2, r, 5, opts).size;
      require(top >= 0 && rel >= 0, "searches came back empty");
      require(top + rel == ideal_rank,
              "additive split fails by search at r = " + std::to_string(r));
    }
    detail << "both ideals: searched rank, top-class and relative parts agree";
    return detail.str();
  }
  // n == 3: the full semigroup is out of reach for subset search, so pin
  // the top-class and relative pieces instead.
  int top1 = brute_force_top_class_rank(3, 1, 8, opts).size;
  require(BigCount(top1) == brandt_rank_formula(3, 1),
          "rank-1 top class search disagrees with the formula");
  int top2 = brute_force_top_class_rank(3, 2, 7, opts).size;
  int rel2 = brute_force_relative_rank(3, 2, 3, opts).size;
  require(BigCount(top2) == brandt_rank_formula(3, 2),
          "rank-2 top class search disagrees with the formula");
  require(BigCount(rel2) == relative_rank_formula(3, 2),
          "rank-2 relative search disagrees with the formula");
  require(BigCount(top2 + rel2) == rank_report(3, 2).rank,
          "rank-2 additive split fails by search");
  int top3 = brute_force_top_class_rank(3, 3, 3, opts).size;
  require(top3 == 2, "permutation-class rank moved");
  detail << "top classes 7/" << top2 << "/" << top3
         << " and relative part " << rel2 << " match the formulas";
  return detail.str();
}

std::string check_random_low_subsets(int n, ProductBudget& budget) {
  auto all = enumerate_all(n);
  BigCount full_rank =
      (n == 1) ? BigCount(2) : rank_report(n, n).rank;
  const auto below =
      static_cast<std::size_t>(full_rank.convert_to<std::uint64_t>() - 1);

  ClosureOptions opts;
  opts.budget = &budget;
  opts.stop_at_size = all.size();

  if (n <= 2) {
    // Few enough subsets to try them all.
    std::vector<std::size_t> index(below);
    std::uint64_t tried = 0;
    std::function<void(std::size_t, std::size_t)> walk =
        [&](std::size_t pos, std::size_t start) {
          if (pos == below) {
            std::vector<DifunRelation> subset;
            for (std::size_t i : index) subset.push_back(all[i]);
            require(closure(subset, opts).elements().size() < all.size(),
                    "an undersized subset generated everything");
            ++tried;
            return;
          }
          for (std::size_t i = start; i < all.size(); ++i) {
            index[pos] = i;
            walk(pos + 1, i + 1);
          }
        };
    walk(0, 0);
    return counted(tried, "undersized subsets, exhaustively, none generate");
  }

  std::mt19937 rng(2026);
  std::vector<DifunRelation> subset;
  for (int trial = 0; trial < 1000; ++trial) {
    subset.clear();
    std::sample(all.begin(), all.end(), std::back_inserter(subset), below, rng);
    require(closure(subset, opts).elements().size() < all.size(),
            "an undersized random subset generated everything");
  }
  return "1000 random undersized subsets, none generate";
}

std::string check_audit_necessity(int n, ProductBudget& budget) {
  if (n == 1) return "skipped: nothing sits below the top class at n = 1";
  if (n == 2) {
    ElementSet top = enumerate_j_class(2, 2);
    ElementSet target = enumerate_ideal(2, 2);
    ElementSet pool = enumerate_ideal(2, 1);
    std::uint64_t generating = 0;
    for (std::uint32_t bits = 0; bits < (1u << pool.size()); ++bits) {
      std::vector<DifunRelation> extra = top.items();
      std::vector<DifunRelation> candidate;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (bits & (1u << i)) {
          extra.push_back(pool[i]);
          candidate.push_back(pool[i]);
        }
      if (!closure_contains(extra, target, &budget)) continue;
      ++generating;
      require(audit_necessary_elements(2, 2, ElementSet(std::move(candidate)))
                  .passed,
              "a generating completion failed the necessity audit");
    }
    require(generating > 0, "no generating completion was found at all");
    return counted(generating, "generating completions, all pass the audit");
  }

  std::mt19937 rng(51);
  std::uint64_t generating = 0;
  for (int r = 2; r <= 3; ++r) {
    ElementSet top = enumerate_j_class(3, r);
    ElementSet target = enumerate_ideal(3, r);
    ElementSet pool = enumerate_ideal(3, r - 1);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 120; ++trial) {
      std::vector<DifunRelation> extra = top.items();
      std::vector<DifunRelation> candidate;
      if (trial % 2 == 0)
        for (int k = 1; k < r; ++k)
          for (const auto& e : sigma_k(3, k)) {
            extra.push_back(e);
            candidate.push_back(e);
          }
      for (int j = 0; j < 4; ++j) {
        candidate.push_back(pool[pick(rng)]);
        extra.push_back(candidate.back());
      }
      if (!closure_contains(extra, target, &budget)) continue;
      ++generating;
      require(audit_necessary_elements(3, r, ElementSet(std::move(candidate)))
                  .passed,
              "a generating completion failed the necessity audit");
    }
  }
  require(generating > 0, "no generating completion was found at all");
  return counted(generating, "generating completions, all pass the audit");
}

}  // namespace

std::optional<Depth> parse_depth(const std::string& name) {
  if (name == "formula") return Depth::Formula;
  if (name == "closure") return Depth::Closure;
  if (name == "exhaustive") return Depth::Exhaustive;
  return std::nullopt;
}

std::string depth_name(Depth depth) {
  switch (depth) {
    case Depth::Formula: return "formula";
    case Depth::Closure: return "closure";
    case Depth::Exhaustive: return "exhaustive";
  }
  return "formula";
}

bool VerificationReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::Fail;
  });
}

bool VerificationReport::any_inconclusive() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::Inconclusive;
  });
}

bool VerificationReport::all_passed() const {
  return !any_failed() && !any_inconclusive();
}

VerificationReport run_verification(const VerificationPlan& plan) {
  if (plan.n < 1) throw DomainError("verification needs a ground set");
  if (plan.n > 30) throw DomainError("formula checks stop at n = 30");
  if (plan.depth == Depth::Closure && plan.n > 4)
    throw DomainError("closure depth is capped at n = 4");
  if (plan.depth == Depth::Exhaustive && plan.n > 3)
    throw DomainError("exhaustive depth is capped at n = 3");

  ProductBudget budget(plan.budget == 0
                           ? std::numeric_limits<std::uint64_t>::max()
                           : plan.budget);
  VerificationReport report;
  report.plan = plan;
  Runner runner{plan, budget, report};
  const int n = plan.n;

  runner.run("rank-decomposition", [n] { return check_rank_decomposition(n); });
  runner.run("full-rank-bell-identity",
             [n] { return check_full_rank_bell_identity(n); });
  runner.run("kernel-count-consistency",
             [n] { return check_kernel_count_consistency(n); });

  if (plan.depth == Depth::Formula) return report;

  runner.run("element-count-structural-vs-filter",
             [n] { return check_element_count(n); });
  runner.run("chain-size-formula", [n] { return check_chain_size_formula(n); });
  runner.run("chain-reachability",
             [n, &budget] { return check_chain_reachability(n, budget); });
  runner.run("generation-closure",
             [n, &budget] { return check_generation_closure(n, budget); });
  runner.run("decomposition-reassembly",
             [n, &budget] { return check_decomposition_reassembly(n, budget); });
  runner.run("factorization-laws", [n, &budget] {
    return check_factorization_laws_closure(n, budget);
  });
  runner.run("audit-chain-sets", [n] { return check_audit_chain_sets(n); });

  if (plan.depth == Depth::Closure) return report;

  runner.run("diamond-associativity",
             [n, &budget] { return check_associativity(n, budget); });
  runner.run("inverse-uniqueness",
             [n, &budget] { return check_inverse_uniqueness(n, budget); });
  runner.run("partial-injection-composition-agreement", [n, &budget] {
    return check_partial_injection_agreement(n, budget);
  });
  runner.run("green-structural-vs-definitional",
             [n, &budget] { return check_green_agreement(n, budget); });
  runner.run("brute-force-ranks",
             [n, &budget] { return check_brute_force_ranks(n, budget); });
  runner.run("random-low-subsets-fail",
             [n, &budget] { return check_random_low_subsets(n, budget); });
  runner.run("audit-necessity",
             [n, &budget] { return check_audit_necessity(n, budget); });
  return report;
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification: n = " << report.plan.n << ", depth = "
      << depth_name(report.plan.depth);
  if (report.plan.budget > 0) out << ", budget = " << report.plan.budget;
  out << '\n';
  for (const auto& check : report.checks) {
    const char* tag = check.status == CheckStatus::Pass ? "PASS"
                      : check.status == CheckStatus::Fail ? "FAIL"
                                                          : "INCONCLUSIVE";
    out << "  " << tag << "  " << check.name;
    if (!check.detail.empty()) out << " — " << check.detail;
    if (check.products_used > 0)
      out << " [" << check.products_used << " products]";
    out << '\n';
  }
  out << (report.all_passed()
              ? "all checks passed"
              : report.any_failed() ? "FAILURES PRESENT" : "INCOMPLETE")
      << '\n';
  return out.str();
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.checks) {
    const char* tag = check.status == CheckStatus::Pass ? "pass"
                      : check.status == CheckStatus::Fail ? "fail"
                                                          : "inconclusive";
    checks.push_back({{"name", check.name},
                      {"status", tag},
                      {"detail", check.detail},
                      {"products_used", check.products_used}});
  }
  return {{"n", report.plan.n},
          {"depth", depth_name(report.plan.depth)},
          {"budget", report.plan.budget},
          {"checks", std::move(checks)},
          {"all_passed", report.all_passed()},
          {"any_failed", report.any_failed()},
          {"any_inconclusive", report.any_inconclusive()}};
}

}  // namespace difun
