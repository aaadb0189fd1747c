#ifndef MINLOG_LEDGER_HPP
#define MINLOG_LEDGER_HPP

#include "minlog/formula.hpp"
#include "minlog/prover.hpp"

#include <string>
#include <vector>

namespace minlog {

// One checked derivability claim: finitely many instances of the source
// principles on the left, one instance of the target on the right.  Entries
// with expected == false are explicit non-derivability claims; each names a
// catalog model that refutes the entailment semantically.
struct LedgerEntry {
  std::string name;  // e.g. "PP=>DGP", "EFQ!=>LEM"
  std::string group; // equivalence cluster or survey section it belongs to
  std::vector<FormulaPtr> assumptions;
  FormulaPtr goal;
  bool expected;
  std::string countermodel; // catalog model key; empty for expected == true
};

const std::vector<LedgerEntry>& ledger();
const LedgerEntry* find_ledger_entry(std::string_view name);

struct LedgerCheck {
  const LedgerEntry* entry;
  ProofOutcome outcome;
  bool prover_ok;       // outcome matches expected
  bool countermodel_ok; // named model really refutes the entailment (false entries)
  bool pass() const { return prover_ok && countermodel_ok; }
};

struct LedgerReport {
  std::vector<LedgerCheck> checks;
  bool pass;
};

// Runs the prover over every entry; when verify_countermodels is set, also
// searches the named catalog model for a valuation that makes every
// assumption globally valid while the goal fails somewhere.
LedgerReport check_ledger(bool verify_countermodels = true);

} // namespace minlog

#endif
