#ifndef MINLOG_PROVER_HPP
#define MINLOG_PROVER_HPP

#include "minlog/formula.hpp"

#include <cstdint>
#include <vector>

namespace minlog {

enum class ProverMode : unsigned char {
  Minimal,        // bot is an ordinary atom
  Intuitionistic, // bot proves anything
};

enum class ProofOutcome : unsigned char { Derivable, NotDerivable, BudgetExceeded };

struct ProofResult {
  ProofOutcome outcome;
  std::uint64_t steps; // sequents explored

  bool derivable() const { return outcome == ProofOutcome::Derivable; }
};

inline constexpr std::uint64_t kDefaultProofBudget = 1'000'000;

// Decides assumptions |- goal by backward search in a contraction-free
// sequent calculus (invertible rules saturated eagerly, backtracking only on
// right disjunction and on nested implications on the left).  Total for any
// input: the search space is finite, and once the budget is spent the result
// says so rather than guessing.
ProofResult derives(const std::vector<FormulaPtr>& assumptions, const FormulaPtr& goal,
                    ProverMode mode = ProverMode::Minimal,
                    std::uint64_t budget = kDefaultProofBudget);

ProofResult derives_minimal(const std::vector<FormulaPtr>& assumptions, const FormulaPtr& goal,
                            std::uint64_t budget = kDefaultProofBudget);

} // namespace minlog

#endif
