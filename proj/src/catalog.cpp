#include "minlog/catalog.hpp"

namespace minlog {

namespace {

struct PrincipleSpec {
  const char* key;
  const char* display;
  const char* group;
  const char* schema;
  std::vector<std::string> vars;
  bool provable;
  std::vector<std::string> aliases;
};

// Keys "1".."18" follow the numbered inventory; 10 and 11 go by their better
// known names.  The *imp keys are the implication-only readings; trailing A/B/C
// pick out the parts where the reading splits.  17c/18c are converses.
const PrincipleSpec kPrinciples[] = {
    // classification-table columns
    {"DNE", "double negation elimination", "dne", "~~phi -> phi", {"phi"}, false, {}},
    {"EFQ", "ex falso quodlibet", "efq", "bot -> phi", {"phi"}, false, {}},
    {"LEM", "excluded middle", "lem", "phi | ~phi", {"phi"}, false, {}},
    {"DGP", "linearity of implication", "dgp", "(phi -> psi) | (psi -> phi)", {"phi", "psi"}, false, {"11"}},
    {"PP", "Peirce's principle", "pp", "((phi -> psi) -> phi) -> phi", {"phi", "psi"}, false, {"10"}},
    {"WLEM", "weak excluded middle", "wlem", "~phi | ~~phi", {"phi"}, false, {}},
    {"WT", "weak Tarski's formula", "wt", "~psi -> ~~(psi -> theta)", {"psi", "theta"}, false, {"13imp"}},
    {"DGPimp", "implicational form of DGP", "dgpimp", "~(phi -> psi) -> ~~(psi -> phi)",
     {"phi", "psi"}, false, {"11imp"}},

    // numbered inventory
    {"1", "strong linearity", "pp", "(phi -> psi) | (psi -> theta)", {"phi", "psi", "theta"}, false, {}},
    {"2", "ex contradictione quodlibet", "efq", "(phi & ~phi) -> psi", {"phi", "psi"}, false, {}},
    {"3", "hypothetical excluded middle", "lem", "phi -> (psi | ~psi)", {"phi", "psi"}, false, {}},
    {"4", "excluded middle for implication", "lem", "(phi -> psi) | ~psi", {"phi", "psi"}, false, {}},
    {"5", "negated antecedent", "efq", "~phi -> (phi -> psi)", {"phi", "psi"}, false, {}},
    {"6", "consequentia mirabilis", "lem", "(~phi -> phi) -> phi", {"phi"}, false, {}},
    {"7", "split by conjoined antecedent", "dgp",
     "((phi & psi) -> theta) -> ((phi -> theta) | (psi -> theta))", {"phi", "psi", "theta"}, false, {}},
    {"8", "implication exchange", "dgp",
     "((phi -> theta) & (psi -> beta)) -> ((phi -> beta) | (psi -> theta))",
     {"phi", "psi", "theta", "beta"}, false, {}},
    {"9", "counterexample extraction", "dne", "~(phi -> psi) -> (phi & ~psi)", {"phi", "psi"}, false, {}},
    {"12", "stability from decidability", "dne", "(~~phi | phi) -> phi", {"phi"}, false, {}},
    {"13", "Tarski's formula", "pp", "psi | (psi -> theta)", {"psi", "theta"}, false, {}},
    {"14", "linearity for negations", "wlem", "(~phi -> ~psi) | (~psi -> ~phi)", {"phi", "psi"}, false, {}},
    {"15", "split by disjoined consequent", "dgp",
     "(phi -> (psi | theta)) -> ((phi -> psi) | (phi -> theta))", {"phi", "psi", "theta"}, false, {}},
    {"16", "self-refutation elimination", "dne", "~(phi -> ~phi) -> phi", {"phi"}, false, {}},
    {"17", "double negation under an arrow", "wt", "(phi -> ~~psi) -> ~~(phi -> psi)", {"phi", "psi"},
     false, {}},
    {"18", "double negation off an arrow", "dne", "~~(phi -> psi) -> (~~phi -> psi)", {"phi", "psi"},
     false, {}},

    // de Morgan family
    {"DM1", "de Morgan I", "wlem", "(~(phi & psi) -> (~phi | ~psi)) & ((~phi | ~psi) -> ~(phi & psi))",
     {"phi", "psi"}, false, {}},
    {"DM2", "de Morgan II", "provable",
     "(~(phi | psi) -> (~phi & ~psi)) & ((~phi & ~psi) -> ~(phi | psi))", {"phi", "psi"}, true, {}},
    {"DM1p", "de Morgan I for negated operands", "dne",
     "(~(~phi & ~psi) -> (phi | psi)) & ((phi | psi) -> ~(~phi & ~psi))", {"phi", "psi"}, false,
     {"DM1'"}},
    {"DM2p", "de Morgan II for negated operands", "dne",
     "(~(~phi | ~psi) -> (phi & psi)) & ((phi & psi) -> ~(~phi | ~psi))", {"phi", "psi"}, false,
     {"DM2'"}},

    // surveyed separately
    {"KP", "Kreisel-Putnam axiom", "other",
     "(~phi -> (psi | theta)) -> ((~phi -> psi) | (~phi -> theta))", {"phi", "psi", "theta"}, false, {}},
    {"Scott", "Scott's axiom", "other",
     "((~~phi -> phi) -> (phi | ~phi)) -> (~~phi | ~phi)", {"phi"}, false, {}},
    {"SmL", "Smetanich's axiom", "other", "(~psi -> phi) -> (((phi -> psi) -> phi) -> phi)",
     {"phi", "psi"}, false, {}},

    // implication-only readings
    {"1imp", "implicational form of 1", "wt", "~(phi -> psi) -> ~~(psi -> theta)",
     {"phi", "psi", "theta"}, false, {}},
    {"2imp", "implicational form of 2", "efq", "phi -> (~phi -> psi)", {"phi", "psi"}, false, {}},
    {"3imp", "implicational form of 3", "provable", "phi -> (~psi -> ~~~psi)", {"phi", "psi"}, true, {}},
    {"4imp", "implicational form of 4", "provable", "~(phi -> psi) -> ~~~psi", {"phi", "psi"}, true, {}},
    {"7imp", "implicational form of 7", "dgpimp",
     "(phi -> (psi -> theta)) -> (~(phi -> theta) -> ~~(psi -> theta))", {"phi", "psi", "theta"},
     false, {}},
    {"8imp", "implicational form of 8", "dgpimp",
     "(phi -> theta) -> ((psi -> beta) -> (~(phi -> beta) -> ~~(psi -> theta)))",
     {"phi", "psi", "theta", "beta"}, false, {}},
    {"9impA", "first implicational part of 9", "dne", "~(phi -> psi) -> phi", {"phi", "psi"}, false, {}},
    {"9impB", "second implicational part of 9", "provable", "~(phi -> psi) -> ~psi", {"phi", "psi"},
     true, {}},
    {"12imp", "implicational form of 12", "dne", "(~~~phi -> ~~phi) -> phi", {"phi"}, false, {}},
    {"14imp", "implicational form of 14", "provable", "~(~phi -> ~psi) -> ~~(~psi -> ~phi)",
     {"phi", "psi"}, true, {}},
    {"15imp", "implicational form of 15", "wt",
     "(phi -> (~psi -> ~~theta)) -> (~(phi -> psi) -> ~~(phi -> theta))", {"phi", "psi", "theta"},
     false, {}},
    {"LEMimp", "implicational form of LEM", "provable", "~phi -> ~~~phi", {"phi"}, true, {}},
    {"WLEMimp", "implicational form of WLEM", "provable", "~~phi -> ~~~~phi", {"phi"}, true, {}},
    {"DM1imp", "implicational form of DM1", "provable",
     "((phi -> ~psi) -> (~~phi -> ~~~psi)) & ((~~phi -> ~~~psi) -> (phi -> ~psi))", {"phi", "psi"},
     true, {}},
    {"DM2imp", "implicational form of DM2", "provable",
     "(~(~phi -> ~~psi) -> ~phi) & ((~(~phi -> ~~psi) -> ~psi) & (~phi -> (~psi -> ~(~phi -> ~~psi))))",
     {"phi", "psi"}, true, {}},
    {"DM1pimp", "implicational form of DM1'", "provable",
     "((~phi -> ~~psi) -> (~phi -> ~~psi)) & ((~phi -> ~~psi) -> (~phi -> ~~psi))", {"phi", "psi"},
     true, {"DM1'imp"}},
    {"DM2pimpA", "first implicational part of DM2'", "dne", "~(~~phi -> ~~~psi) -> phi",
     {"phi", "psi"}, false, {"DM2'impA"}},
    {"DM2pimpB", "second implicational part of DM2'", "dne", "~(~~phi -> ~~~psi) -> psi",
     {"phi", "psi"}, false, {"DM2'impB"}},
    {"DM2pimpC", "third implicational part of DM2'", "provable",
     "phi -> (psi -> ~(~~phi -> ~~~psi))", {"phi", "psi"}, true, {"DM2'impC"}},
    {"17c", "converse of 17", "provable", "~~(phi -> psi) -> (phi -> ~~psi)", {"phi", "psi"}, true, {}},
    {"18c", "converse of 18", "provable", "(~~phi -> psi) -> ~~(phi -> psi)", {"phi", "psi"}, true, {}},
    {"6neg", "consequentia mirabilis for negations", "provable", "(phi -> ~phi) -> ~phi", {"phi"},
     true, {}},
    {"EFQF", "ex falso for negations", "provable", "bot -> ~phi", {"phi"}, true, {}},
};

std::vector<Principle> build_principles() {
  std::vector<Principle> out;
  out.reserve(std::size(kPrinciples));
  for (const auto& spec : kPrinciples) {
    Principle p;
    p.key = spec.key;
    p.display = spec.display;
    p.group = spec.group;
    p.schema = Schema::over(spec.schema, spec.vars);
    p.implicational_forms = translate_implicational(p.schema);
    p.provable_in_minimal = spec.provable;
    p.aliases = spec.aliases;
    out.push_back(std::move(p));
  }
  return out;
}

using Leq = std::vector<std::pair<std::string, std::string>>;

std::vector<NamedModel> build_models() {
  std::vector<NamedModel> out;
  auto add = [&](const char* key, const char* display, std::vector<std::string> worlds, Leq leq,
                 std::vector<std::string> abnormal, const char* notes) {
    out.push_back(NamedModel{key, display, Structure::make(std::move(worlds), leq, abnormal), notes});
  };
  add("W1", "W₁", {"0"}, {}, {}, "one normal world");
  add("W1bot", "W₁⊥", {"0"}, {}, {"0"}, "one abnormal world");
  add("W2", "W₂", {"1", "2"}, {{"1", "2"}}, {}, "two-world chain, all normal");
  add("W2bot", "W₂⊥", {"1", "2"}, {{"1", "2"}}, {"1", "2"}, "two-world chain, all abnormal");
  add("W2'", "W₂′", {"1", "2"}, {{"1", "2"}}, {"2"}, "two-world chain, abnormal top");
  add("W3", "W₃", {"0", "1", "2"}, {{"0", "1"}, {"0", "2"}}, {},
      "two incomparable worlds over a root, all normal");
  add("W3bot", "W₃⊥", {"0", "1", "2"}, {{"0", "1"}, {"0", "2"}}, {"0", "1", "2"},
      "two incomparable worlds over a root, all abnormal");
  add("W3'", "W₃′", {"0", "1", "2"}, {{"0", "1"}, {"0", "2"}}, {"1", "2"},
      "two incomparable abnormal worlds over a normal root");
  add("W4", "W₄", {"0", "1", "2", "12"}, {{"0", "1"}, {"0", "2"}, {"1", "12"}, {"2", "12"}}, {},
      "diamond of subsets of a two-element set, all normal");
  add("W4bot", "W₄⊥", {"0", "1", "2", "12"}, {{"0", "1"}, {"0", "2"}, {"1", "12"}, {"2", "12"}},
      {"0", "1", "2", "12"}, "diamond, all abnormal");
  add("W5", "W₅", {"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {}, "three-world chain, all normal");
  return out;
}

} // namespace

const std::vector<Principle>& principles() {
  static const std::vector<Principle> all = build_principles();
  return all;
}

const std::vector<NamedModel>& models() {
  static const std::vector<NamedModel> all = build_models();
  return all;
}

const Principle* find_principle(std::string_view key) {
  for (const auto& p : principles()) {
    if (p.key == key || p.display == key) return &p;
    for (const auto& a : p.aliases)
      if (a == key) return &p;
  }
  return nullptr;
}

const NamedModel* find_model(std::string_view key) {
  for (const auto& m : models())
    if (m.key == key || m.display == key) return &m;
  return nullptr;
}

const std::vector<std::string>& table_principle_keys() {
  static const std::vector<std::string> keys = {"DNE", "EFQ",  "LEM", "DGP",
                                                "PP",  "WLEM", "WT",  "DGPimp"};
  return keys;
}

const std::vector<std::string>& table_model_keys() {
  static const std::vector<std::string> keys = {"W1", "W1bot", "W2", "W2bot", "W2'",
                                                "W3", "W3bot", "W3'", "W4", "W4bot"};
  return keys;
}

} // namespace minlog
