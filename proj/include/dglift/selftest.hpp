#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dglift/semifree_module.hpp"

namespace dglift {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 100;
};

/// Algebras the suites sample from: the two example algebras, one over a
/// prime field with three variables, and one over QQ itself.
std::vector<AlgebraPtr> selftest_algebras();

/// πρ = id, σι = id, ισ + ρπ = id, and π, ρ, σ commute with differentials.
SuiteResult splitting_suite(const SelftestOptions& opt);
/// δ(b1 b2) = δ(b1)(1^o⊗b2) + (-1)^{|b1||b2|} δ(b2)(b1^o⊗1) and δd = ∂δ.
SuiteResult derivation_suite(const SelftestOptions& opt);
/// Δ_N two ways, ψ_{D^B} = -Δ_N, ∂Δ_N + Δ_N∂ = 0, partial-sum cycles.
SuiteResult obstruction_suite(const SelftestOptions& opt);
/// ψ_{D1} - ψ_{D2} = ∂^Σ h + h∂ with h = D2 - D1; connection law.
SuiteResult homotopy_suite(const SelftestOptions& opt);
/// Zero-differential modules are liftable with zero obstruction.
SuiteResult trivial_suite(const SelftestOptions& opt);
/// On rank-2 modules the boundary test and the global solve agree.
SuiteResult decision_suite(const SelftestOptions& opt);

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt);

}  // namespace dglift
