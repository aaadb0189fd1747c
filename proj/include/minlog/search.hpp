#ifndef MINLOG_SEARCH_HPP
#define MINLOG_SEARCH_HPP

#include "minlog/catalog.hpp"
#include "minlog/kripke.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace minlog {

// Every poset on exactly n unlabeled worlds, one canonical representative
// per isomorphism class, in a deterministic order (sorted by the canonical
// encoding of the order matrix).  Worlds are named "0", "1", ...
std::vector<Structure> enumerate_posets(int n);

// Every structure with 1..max_worlds worlds up to isomorphism: each poset
// paired with each upward-closed abnormal set, sorted by abnormal-set bitmask
// within a poset.  Q variants of one poset may still be isomorphic when the
// poset has symmetries; that duplication is deliberate and cheap.
std::vector<Structure> enumerate_structures(int max_worlds);

struct LabeledStructure {
  std::string label;
  Structure structure;
};

// Same stream with stable labels P<worlds>.<poset#>-Q<mask>, e.g. "P3.2-Q5".
std::vector<LabeledStructure> enumerate_labeled(int max_worlds);

// Structures with exactly n worlds, same order.
std::vector<LabeledStructure> enumerate_labeled_exact(int n);

struct EnumerationCounts {
  std::vector<std::size_t> posets_by_size;     // index 0 unused
  std::vector<std::size_t> structures_by_size; // index 0 unused
  std::size_t total_structures = 0;
};

EnumerationCounts enumeration_counts(int max_worlds);

std::string structure_label(int n_worlds, std::size_t poset_number, std::uint64_t q_mask);

struct ClassificationTable {
  std::vector<std::string> rows;    // model keys or structure labels
  std::vector<std::string> columns; // principle keys
  std::vector<std::vector<bool>> cells;
};

ClassificationTable classify_models(const std::vector<const NamedModel*>& models,
                                    const std::vector<const Principle*>& principles, int jobs = 1);
ClassificationTable classify_structures(const std::vector<Structure>& structures,
                                        const std::vector<std::string>& labels,
                                        const std::vector<const Principle*>& principles,
                                        int jobs = 1);

struct SeparationQuery {
  std::vector<std::string> hold; // principle keys that must be valid
  std::vector<std::string> fail; // principle keys that must fail
  int max_worlds = 4;
};

// First structure in enumeration order meeting the query, if any.
std::optional<LabeledStructure> find_separation(const SeparationQuery& query);

// One ordered pair of the eight table principles: either `to` follows from
// `from` (a path of checked ledger arrows) or a witness validates `from`
// and refutes `to`.
struct AuditPair {
  std::string from;
  std::string to;
  bool implied;        // reachable through ledger-backed arrows
  std::string path;    // "A -> B -> C" when implied
  std::string witness; // model key or structure label otherwise
  bool ok;
};

struct AuditReport {
  std::vector<AuditPair> pairs;
  bool pass = false;
};

// Resolves all 56 ordered pairs over {DNE, EFQ, LEM, DGP, PP, WLEM, WT,
// DGPimp}: positive direction from the ledger arrows, negative direction by
// catalog witness first, enumerated structures up to max_worlds as fallback.
AuditReport audit_fig1(int max_worlds = 4);

struct ExperimentCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct ExperimentReport {
  std::vector<ExperimentCheck> checks;
  bool pass = false;
};

// The survey claims: 7imp and KP match DGPimp on every catalog model, Scott
// holds everywhere, SmL holds where LEM fails (W2) and where DGP fails (W3')
// yet fails on W5 where DGP and EFQ hold.
ExperimentReport run_experiments();

struct CharacterizationCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct CharacterizationReport {
  std::vector<CharacterizationCheck> checks;
  std::size_t structures_checked = 0;
  bool pass = false;
};

// Verifies the structural characterizations over every enumerated structure:
//   EFQ  <->  no abnormal worlds
//   DGP  <->  no world sees two incomparable worlds
//   PP   <->  antichain
//   LEM  <->  normal worlds form an antichain
//   DNE  <->  antichain with no abnormal worlds
//   WLEM <-   normal restriction v-free (sufficient, not necessary)
// and that the WLEM converse really does fail on some structure.
CharacterizationReport characterize(int max_worlds = 4, int jobs = 1);

} // namespace minlog

#endif
