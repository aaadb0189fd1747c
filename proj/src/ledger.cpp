#include "minlog/ledger.hpp"

#include "minlog/catalog.hpp"
#include "minlog/kripke.hpp"

namespace minlog {

namespace {

struct EntrySpec {
  const char* name;
  const char* group;
  std::vector<const char*> assumptions;
  const char* goal;
  bool expected;
  const char* countermodel;
};

// Instances are spelled out in full: the left-hand sides are substitution
// instances of the source schema, chosen so that the target follows (or
// provably cannot).  Atoms p, q, r, s are fixed but arbitrary.
const EntrySpec kEntries[] = {
    // --- the DNE cluster: 9, 12, 16, DM1', DM2' ---
    {"DNE=>9", "dne", {"~~q -> q", "~~(p & ~q) -> (p & ~q)"}, "~(p -> q) -> (p & ~q)", true, ""},
    {"9=>DNE", "dne", {"~(p -> bot) -> (p & ~bot)"}, "~~p -> p", true, ""},
    {"DNE=>12", "dne", {"~~p -> p"}, "(~~p | p) -> p", true, ""},
    {"12=>DNE", "dne", {"(~~p | p) -> p"}, "~~p -> p", true, ""},
    {"DNE=>16", "dne", {"~~p -> p"}, "~(p -> ~p) -> p", true, ""},
    {"16=>DNE", "dne", {"~(p -> ~p) -> p"}, "~~p -> p", true, ""},
    {"DNE=>DM1'a", "dne", {"~~(p | q) -> (p | q)"}, "~(~p & ~q) -> (p | q)", true, ""},
    {"DNE=>DM1'b", "dne", {}, "(p | q) -> ~(~p & ~q)", true, ""},
    {"DM1'=>DNE", "dne", {"~(~p & ~p) -> (p | p)"}, "~~p -> p", true, ""},
    {"DNE=>DM2'a", "dne", {"~~p -> p", "~~q -> q"}, "~(~p | ~q) -> (p & q)", true, ""},
    {"DNE=>DM2'b", "dne", {}, "(p & q) -> ~(~p | ~q)", true, ""},
    {"DM2'=>DNE", "dne", {"~(~p | ~p) -> (p & p)"}, "~~p -> p", true, ""},

    // --- the LEM cluster: 3, 4, 6 ---
    {"LEM=>3", "lem", {"q | ~q"}, "p -> (q | ~q)", true, ""},
    {"3=>LEM", "lem", {"(p -> p) -> (p | ~p)"}, "p | ~p", true, ""},
    {"LEM=>4", "lem", {"q | ~q"}, "(p -> q) | ~q", true, ""},
    {"4=>LEM", "lem", {"((p -> p) -> p) | ~p"}, "p | ~p", true, ""},
    {"LEM=>6", "lem", {"p | ~p"}, "(~p -> p) -> p", true, ""},
    {"6=>LEM", "lem", {"(~(p | ~p) -> (p | ~p)) -> (p | ~p)"}, "p | ~p", true, ""},

    // --- the EFQ cluster: 2, 5 ---
    {"EFQ=>2", "efq", {"bot -> q"}, "(p & ~p) -> q", true, ""},
    {"2=>5", "efq", {"(p & ~p) -> q"}, "~p -> (p -> q)", true, ""},
    {"5=>EFQ", "efq", {"~top -> (top -> p)"}, "bot -> p", true, ""},

    // --- the WLEM cluster: 14, DM1 ---
    {"WLEM=>14", "wlem", {"~q | ~~q"}, "(~p -> ~q) | (~q -> ~p)", true, ""},
    {"14=>WLEM", "wlem", {"(~p -> ~~p) | (~~p -> ~p)"}, "~p | ~~p", true, ""},
    {"DM1=>WLEM", "wlem", {"~(~p & p) -> (~~p | ~p)"}, "~p | ~~p", true, ""},
    {"WLEM=>DM1a", "wlem", {"~p | ~~p"}, "~(p & q) -> (~p | ~q)", true, ""},
    {"WLEM=>DM1b", "wlem", {}, "(~p | ~q) -> ~(p & q)", true, ""},

    // --- the PP cluster: 1, 13 ---
    {"1=>PP", "pp", {"(top -> p) | (p -> q)"}, "((p -> q) -> p) -> p", true, ""},
    {"PP=>13", "pp", {"(((q | (q -> r)) -> r) -> (q | (q -> r))) -> (q | (q -> r))"},
     "q | (q -> r)", true, ""},
    {"13=>1", "pp", {"q | (q -> r)"}, "(p -> q) | (q -> r)", true, ""},

    // --- the DGP cluster: 7, 8, 15 ---
    {"DGP=>7", "dgp", {"(p -> q) | (q -> p)"}, "((p & q) -> r) -> ((p -> r) | (q -> r))", true, ""},
    {"7=>DGP", "dgp", {"((p & q) -> (p & q)) -> ((p -> (p & q)) | (q -> (p & q)))"},
     "(p -> q) | (q -> p)", true, ""},
    {"DGP=>8", "dgp", {"(p -> s) | (s -> p)"},
     "((p -> r) & (q -> s)) -> ((p -> s) | (q -> r))", true, ""},
    {"8=>DGP", "dgp", {"((p -> p) & (q -> q)) -> ((p -> q) | (q -> p))"},
     "(p -> q) | (q -> p)", true, ""},
    {"DGP=>15", "dgp", {"(q -> r) | (r -> q)"},
     "(p -> (q | r)) -> ((p -> q) | (p -> r))", true, ""},
    {"15=>DGP", "dgp", {"((p | q) -> (p | q)) -> (((p | q) -> p) | ((p | q) -> q))"},
     "(p -> q) | (q -> p)", true, ""},

    // --- arrows of the implication diagram ---
    {"DNE=>PP", "hierarchy", {"~~q -> q", "~~(p & ~q) -> (p & ~q)", "~~p -> p"},
     "((p -> q) -> p) -> p", true, ""},
    {"DNE=>EFQ", "hierarchy", {"~~p -> p"}, "bot -> p", true, ""},
    {"PP=>LEM", "hierarchy", {"(((p | ~p) -> bot) -> (p | ~p)) -> (p | ~p)"}, "p | ~p", true, ""},
    {"PP=>DGP", "hierarchy",
     {"((((p -> q) | (q -> p)) -> p) -> ((p -> q) | (q -> p))) -> ((p -> q) | (q -> p))"},
     "(p -> q) | (q -> p)", true, ""},
    {"PP=>WT", "hierarchy", {"((bot -> q) -> bot) -> bot"}, "~p -> ~~(p -> q)", true, ""},
    {"LEM=>WLEM", "hierarchy", {"p | ~p"}, "~p | ~~p", true, ""},
    {"DGP=>WLEM", "hierarchy", {"(p -> ~p) | (~p -> p)"}, "~p | ~~p", true, ""},
    {"DGP=>DGPimp", "hierarchy", {"(p -> q) | (q -> p)"}, "~(p -> q) -> ~~(q -> p)", true, ""},
    {"EFQ=>WT", "hierarchy", {"bot -> q"}, "~p -> ~~(p -> q)", true, ""},
    {"WT=>DGPimp", "hierarchy", {"~q -> ~~(q -> p)"}, "~(p -> q) -> ~~(q -> p)", true, ""},

    // --- implication-only forms equivalent to DNE ---
    {"DNE=>9impA", "impdne", {"~~q -> q", "~~p -> p"}, "~(p -> q) -> p", true, ""},
    {"9impA=>DNE", "impdne", {"~(p -> bot) -> p"}, "~~p -> p", true, ""},
    {"DNE=>12imp", "impdne", {"~~p -> p"}, "(~~~p -> ~~p) -> p", true, ""},
    {"12imp=>DNE", "impdne", {"(~~~p -> ~~p) -> p"}, "~~p -> p", true, ""},
    {"DNE=>DM2'impA", "impdne", {"~~p -> p"}, "~(~~p -> ~~~q) -> p", true, ""},
    {"DM2'impA=>DNE", "impdne", {"~(~~p -> ~~~p) -> p"}, "~~p -> p", true, ""},
    {"DNE=>DM2'impB", "impdne", {"~~q -> q"}, "~(~~p -> ~~~q) -> q", true, ""},
    {"DM2'impB=>DNE", "impdne", {"~(~~p -> ~~~p) -> p"}, "~~p -> p", true, ""},
    {"DNE=>18", "impdne", {"~~q -> q"}, "~~(p -> q) -> (~~p -> q)", true, ""},
    {"18=>DNE", "impdne", {"~~(p -> p) -> (~~p -> p)"}, "~~p -> p", true, ""},

    // --- implication-only form equivalent to EFQ ---
    {"EFQ=>2imp", "impefq", {"bot -> q"}, "p -> (~p -> q)", true, ""},
    {"2imp=>EFQ", "impefq", {"top -> (~top -> p)"}, "bot -> p", true, ""},

    // --- the WT cluster: 1imp, 15imp, 17 ---
    {"WT=>1imp", "impwt", {"~q -> ~~(q -> r)"}, "~(p -> q) -> ~~(q -> r)", true, ""},
    {"1imp=>WT", "impwt", {"~(~q -> q) -> ~~(q -> r)"}, "~q -> ~~(q -> r)", true, ""},
    {"WT=>15imp", "impwt", {"~p -> ~~(p -> q)"},
     "(p -> (~q -> ~~r)) -> (~(p -> q) -> ~~(p -> r))", true, ""},
    {"15imp=>WT", "impwt", {"(q -> (~r -> ~~r)) -> (~(q -> r) -> ~~(q -> r))"},
     "~q -> ~~(q -> r)", true, ""},
    {"WT=>17", "impwt", {"~p -> ~~(p -> q)"}, "(p -> ~~q) -> ~~(p -> q)", true, ""},
    {"17=>WT", "impwt", {"(q -> ~~r) -> ~~(q -> r)"}, "~q -> ~~(q -> r)", true, ""},

    // --- the DGPimp cluster: 7imp, 8imp ---
    {"WT=>7imp", "impdgp", {"~p -> ~~(p -> r)"},
     "(p -> (q -> r)) -> (~(p -> r) -> ~~(q -> r))", true, ""},
    {"7imp=>DGPimp", "impdgp", {"(p -> (q -> (p & q))) -> (~(p -> (p & q)) -> ~~(q -> (p & q)))"},
     "~(p -> q) -> ~~(q -> p)", true, ""},
    {"DGPimp=>8imp", "impdgp", {"~(r -> q) -> ~~(q -> r)"},
     "(p -> r) -> ((q -> s) -> (~(p -> s) -> ~~(q -> r)))", true, ""},
    {"8imp=>DGPimp", "impdgp", {"(p -> p) -> ((q -> q) -> (~(p -> q) -> ~~(q -> p)))"},
     "~(p -> q) -> ~~(q -> p)", true, ""},

    // --- outright derivable, no assumptions ---
    {"DM2a", "provable", {}, "~(p | q) -> (~p & ~q)", true, ""},
    {"DM2b", "provable", {}, "(~p & ~q) -> ~(p | q)", true, ""},
    {"LEMimp", "provable", {}, "~p -> ~~~p", true, ""},
    {"WLEMimp", "provable", {}, "~~p -> ~~~~p", true, ""},
    {"3imp", "provable", {}, "p -> (~q -> ~~~q)", true, ""},
    {"4imp", "provable", {}, "~(p -> q) -> ~~~q", true, ""},
    {"9impB", "provable", {}, "~(p -> q) -> ~q", true, ""},
    {"14imp", "provable", {}, "~(~p -> ~q) -> ~~(~q -> ~p)", true, ""},
    {"DM1impA", "provable", {}, "(p -> ~q) -> (~~p -> ~~~q)", true, ""},
    {"DM1impB", "provable", {}, "(~~p -> ~~~q) -> (p -> ~q)", true, ""},
    {"DM2impA", "provable", {}, "~(~p -> ~~q) -> ~p", true, ""},
    {"DM2impB", "provable", {}, "~(~p -> ~~q) -> ~q", true, ""},
    {"DM2impC", "provable", {}, "~p -> (~q -> ~(~p -> ~~q))", true, ""},
    {"DM1'imp", "provable", {}, "(~p -> ~~q) -> (~p -> ~~q)", true, ""},
    {"DM2'impC", "provable", {}, "p -> (q -> ~(~~p -> ~~~q))", true, ""},
    {"17c", "provable", {}, "~~(p -> q) -> (p -> ~~q)", true, ""},
    {"18c", "provable", {}, "(~~p -> q) -> ~~(p -> q)", true, ""},
    {"6neg", "provable", {}, "(p -> ~p) -> ~p", true, ""},
    {"EFQF", "provable", {}, "bot -> ~p", true, ""},

    // --- recovering classical logic over the base ---
    {"LEM+EFQ=>DNE", "collapse", {"p | ~p", "bot -> p"}, "~~p -> p", true, ""},

    // --- Smetanich's axiom sits between LEM and WLEM ---
    {"LEM=>SmL", "sml", {"q | ~q"}, "(~q -> p) -> (((p -> q) -> p) -> p)", true, ""},
    {"SmL=>WLEM", "sml",
     {"(~~p -> (~p | ~~p)) -> ((((~p | ~~p) -> ~p) -> (~p | ~~p)) -> (~p | ~~p))"},
     "~p | ~~p", true, ""},

    // --- the naive reading of | as a double negation is ex falso ---
    {"or-as-negimp=>EFQ", "translation", {"bot -> (~bot -> q)"}, "bot -> q", true, ""},

    // --- none of the table principles is derivable outright ---
    {"DNE-unprovable", "separation", {}, "~~p -> p", false, "W1bot"},
    {"EFQ-unprovable", "separation", {}, "bot -> p", false, "W1bot"},
    {"LEM-unprovable", "separation", {}, "p | ~p", false, "W2"},
    {"DGP-unprovable", "separation", {}, "(p -> q) | (q -> p)", false, "W3"},
    {"PP-unprovable", "separation", {}, "((p -> q) -> p) -> p", false, "W2"},
    {"WLEM-unprovable", "separation", {}, "~p | ~~p", false, "W3"},
    {"WT-unprovable", "separation", {}, "~p -> ~~(p -> q)", false, "W2'"},
    {"DGPimp-unprovable", "separation", {}, "~(p -> q) -> ~~(q -> p)", false, "W3'"},

    // --- sanity separations between clusters ---
    {"EFQ!=>LEM", "separation", {"bot -> p", "bot -> (p | ~p)"}, "p | ~p", false, "W3"},
    {"LEM!=>EFQ", "separation", {"p | ~p", "bot | ~bot"}, "bot -> p", false, "W1bot"},
    {"PP!=>DNE", "separation", {"((p -> q) -> p) -> p", "((p -> bot) -> p) -> p"}, "~~p -> p",
     false, "W1bot"},
    {"LEM!=>PP", "separation", {"p | ~p", "q | ~q"}, "((p -> q) -> p) -> p", false, "W2bot"},
    {"DGP!=>PP", "separation", {"(p -> q) | (q -> p)"}, "((p -> q) -> p) -> p", false, "W2"},
    {"WLEM!=>DGP", "separation",
     {"~p | ~~p", "~q | ~~q", "~(p -> q) | ~~(p -> q)", "~(q -> p) | ~~(q -> p)"},
     "(p -> q) | (q -> p)", false, "W4"},
    {"EFQ!=>WLEM", "separation", {"bot -> p", "bot -> q", "bot -> ~p", "bot -> ~q"}, "~p | ~~p",
     false, "W3"},
    {"DGPimp!=>WT", "separation", {"~(p -> q) -> ~~(q -> p)", "~(q -> p) -> ~~(p -> q)"},
     "~p -> ~~(p -> q)", false, "W2'"},
    {"WT!=>EFQ", "separation", {"~p -> ~~(p -> q)", "~q -> ~~(q -> p)"}, "bot -> p", false,
     "W1bot"},
    {"LEM!=>WT", "separation", {"p | ~p", "q | ~q", "(p -> q) | ~(p -> q)"},
     "~p -> ~~(p -> q)", false, "W2'"},
};

std::vector<LedgerEntry> build_ledger() {
  std::vector<LedgerEntry> out;
  out.reserve(std::size(kEntries));
  for (const auto& spec : kEntries) {
    LedgerEntry e;
    e.name = spec.name;
    e.group = spec.group;
    for (const char* a : spec.assumptions) e.assumptions.push_back(desugar(parse(a)));
    e.goal = desugar(parse(spec.goal));
    e.expected = spec.expected;
    e.countermodel = spec.countermodel;
    out.push_back(std::move(e));
  }
  return out;
}

// A named model refutes an entry when some valuation of the entry's atoms by
// upsets makes every assumption globally valid while the goal fails somewhere.
bool countermodel_refutes(const LedgerEntry& e, const Structure& s) {
  std::set<std::string> atom_set;
  for (const auto& a : e.assumptions)
    for (const auto& name : atoms_of(a)) atom_set.insert(name);
  for (const auto& name : atoms_of(e.goal)) atom_set.insert(name);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

  std::vector<std::uint64_t> ups = upsets(s);
  std::vector<size_t> pick(atoms.size(), 0);
  for (;;) {
    Valuation v;
    for (size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = ups[pick[i]];
    Model m{s, std::move(v)};
    bool assumptions_valid = true;
    for (const auto& a : e.assumptions)
      if (!model_valid(m, a)) {
        assumptions_valid = false;
        break;
      }
    if (assumptions_valid && !model_valid(m, e.goal)) return true;
    size_t k = 0;
    while (k < pick.size() && ++pick[k] == ups.size()) pick[k++] = 0;
    if (k == pick.size()) return false;
  }
}

} // namespace

const std::vector<LedgerEntry>& ledger() {
  static const std::vector<LedgerEntry> all = build_ledger();
  return all;
}

const LedgerEntry* find_ledger_entry(std::string_view name) {
  for (const auto& e : ledger())
    if (e.name == name) return &e;
  return nullptr;
}

LedgerReport check_ledger(bool verify_countermodels) {
  LedgerReport report;
  report.pass = true;
  for (const auto& e : ledger()) {
    LedgerCheck c;
    c.entry = &e;
    c.outcome = derives_minimal(e.assumptions, e.goal).outcome;
    c.prover_ok = c.outcome == (e.expected ? ProofOutcome::Derivable : ProofOutcome::NotDerivable);
    c.countermodel_ok = true;
    if (!e.expected && verify_countermodels) {
      const NamedModel* m = find_model(e.countermodel);
      c.countermodel_ok = m != nullptr && countermodel_refutes(e, m->structure);
    }
    report.pass = report.pass && c.pass();
    report.checks.push_back(c);
  }
  return report;
}

} // namespace minlog
