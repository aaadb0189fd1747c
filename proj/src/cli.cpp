#include "minlog/cli.hpp"

#include "minlog/catalog.hpp"
#include "minlog/formula.hpp"
#include "minlog/kripke.hpp"
#include "minlog/ledger.hpp"
#include "minlog/prover.hpp"
#include "minlog/search.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace minlog {

namespace {

using nlohmann::json;

constexpr const char* kCheck = "✓";
constexpr const char* kCross = "✗";

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    if (item.empty()) throw std::invalid_argument("empty name in list: " + text);
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// Labels are plain ASCII; only the check marks are multibyte, so padding by
// byte count works everywhere it is used.
std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(s.size() < width ? width - s.size() : 0, ' ');
}

std::string default_format(std::initializer_list<const char*> allowed) {
  const char* env = std::getenv("MINLOG_FORMAT");
  if (env)
    for (const char* a : allowed)
      if (std::string(env) == a) return env;
  return "text";
}

const Principle& lookup_principle(const std::string& key) {
  const Principle* p = find_principle(key);
  if (!p) throw std::invalid_argument("unknown principle: " + key);
  return *p;
}

const NamedModel& lookup_model(const std::string& key) {
  const NamedModel* m = find_model(key);
  if (!m) throw std::invalid_argument("unknown catalog model: " + key);
  return *m;
}

Model resolve_model(const std::string& spec) {
  if (spec.rfind("key:", 0) == 0) return Model{lookup_model(spec.substr(4)).structure, {}};
  return load_model(spec);
}

void apply_assignments(Model& m, const std::vector<std::string>& assigns) {
  for (const std::string& a : assigns) {
    std::size_t eq = a.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--assign expects atom=world,...: " + a);
    std::string atom = trimmed(a.substr(0, eq));
    if (atom.empty()) throw std::invalid_argument("--assign with empty atom name: " + a);
    std::uint64_t ext = 0;
    if (!trimmed(a.substr(eq + 1)).empty())
      for (const std::string& w : split_list(a.substr(eq + 1))) {
        int idx = m.structure.world_index(w);
        if (idx < 0) throw std::invalid_argument("unknown world in --assign: " + w);
        ext |= 1ull << idx;
      }
    m.valuation[atom] = ext;
  }
  m = Model::make(std::move(m.structure), std::move(m.valuation));
}

std::string outcome_word(ProofOutcome o) {
  switch (o) {
    case ProofOutcome::Derivable: return "derivable";
    case ProofOutcome::NotDerivable: return "not derivable";
    case ProofOutcome::BudgetExceeded: break;
  }
  return "budget exceeded";
}

int verdict_exit(bool v, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << json{{"verdict", v}}.dump(2) << '\n';
  else
    out << (v ? "true" : "false") << '\n';
  return v ? 0 : 1;
}

json structure_json(const Structure& s) {
  json j;
  j["worlds"] = s.worlds();
  json leq = json::array();
  for (auto [a, b] : s.cover_pairs()) leq.push_back({s.world_name(a), s.world_name(b)});
  j["leq"] = leq;
  json q = json::array();
  for (int w = 0; w < s.size(); ++w)
    if (s.abnormal(w)) q.push_back(s.world_name(w));
  j["Q"] = q;
  return j;
}

void describe_structure(const Structure& s, std::ostream& out) {
  out << "worlds:";
  for (const std::string& w : s.worlds()) out << ' ' << w;
  out << "\norder:";
  auto covers = s.cover_pairs();
  if (covers.empty()) out << " (discrete)";
  for (auto [a, b] : covers) out << ' ' << s.world_name(a) << "<=" << s.world_name(b);
  out << "\nQ:";
  if (s.abnormal_mask() == 0) out << " (none)";
  for (int w = 0; w < s.size(); ++w)
    if (s.abnormal(w)) out << ' ' << s.world_name(w);
  out << '\n';
}

// ---- verb options ----

struct EvalOpts {
  std::string model, world, formula, format;
  std::vector<std::string> assigns;
};

struct ClassifyOpts {
  std::string model, principle, schema, vars, format;
};

struct TableOpts {
  std::string models = "catalog";
  std::string principles = "fig1";
  std::string format;
  int jobs = 1;
};

struct SeparateOpts {
  std::string hold, fail, format;
  int max_worlds = 4;
};

struct ProveOpts {
  std::vector<std::string> assume;
  std::string goal, format;
  std::string mode = "minimal";
  std::uint64_t budget = kDefaultProofBudget;
};

struct LedgerOpts {
  std::string group, format;
};

struct ReportOpts {
  std::string format;
  int max_worlds = 4;
  int jobs = 1;
};

struct CatalogOpts {
  std::string dot;
};

// ---- handlers ----

int do_eval(const EvalOpts& o, std::ostream& out) {
  Model m = resolve_model(o.model);
  apply_assignments(m, o.assigns);
  return verdict_exit(forces(m, o.world, parse(o.formula)), o.format, out);
}

int do_classify(const ClassifyOpts& o, std::ostream& out) {
  Model m = resolve_model(o.model);
  std::optional<Schema> schema;
  if (!o.principle.empty()) {
    schema = lookup_principle(o.principle).schema;
  } else if (!o.schema.empty()) {
    FormulaPtr body = parse(o.schema);
    std::vector<std::string> vars;
    if (!o.vars.empty()) {
      vars = split_list(o.vars);
    } else {
      for (const std::string& a : atoms_of(body))
        if (a != top_atom_name()) vars.push_back(a);
    }
    if (vars.size() > 4)
      throw std::invalid_argument("at most 4 schema variables are supported");
    schema = Schema::over(body, vars);
  } else {
    throw std::invalid_argument("classify needs --principle or --schema");
  }
  return verdict_exit(schema_valid_full(m.structure, *schema), o.format, out);
}

void render_table_text(const ClassificationTable& t, std::ostream& out) {
  std::size_t label_w = 5; // "model"
  for (const std::string& r : t.rows) label_w = std::max(label_w, r.size());
  out << pad("model", label_w);
  for (const std::string& c : t.columns) out << "  " << c;
  out << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << pad(t.rows[i], label_w);
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      out << "  " << (t.cells[i][j] ? kCheck : kCross);
      if (j + 1 < t.columns.size()) out << std::string(t.columns[j].size() - 1, ' ');
    }
    out << '\n';
  }
}

void render_table_csv(const ClassificationTable& t, std::ostream& out) {
  out << "model";
  for (const std::string& c : t.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << t.rows[i];
    for (std::size_t j = 0; j < t.columns.size(); ++j) out << ',' << (t.cells[i][j] ? '1' : '0');
    out << '\n';
  }
}

void render_table_json(const ClassificationTable& t, std::ostream& out) {
  json doc;
  doc["rows"] = t.rows;
  doc["columns"] = t.columns;
  json cells = json::array();
  for (const auto& row : t.cells) {
    json r = json::array();
    for (bool b : row) r.push_back(b);
    cells.push_back(std::move(r));
  }
  doc["cells"] = std::move(cells);
  out << doc.dump(2) << '\n';
}

int do_table(const TableOpts& o, std::ostream& out) {
  std::vector<const Principle*> cols;
  if (o.principles == "fig1")
    for (const std::string& k : table_principle_keys()) cols.push_back(&lookup_principle(k));
  else if (o.principles == "all")
    for (const Principle& p : principles()) cols.push_back(&p);
  else
    for (const std::string& k : split_list(o.principles)) cols.push_back(&lookup_principle(k));

  ClassificationTable table;
  if (o.models.rfind("enumerate:", 0) == 0) {
    int bound = 0;
    try {
      std::size_t used = 0;
      std::string digits = o.models.substr(10);
      bound = std::stoi(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad enumeration bound in " + o.models);
    }
    std::vector<Structure> structures;
    std::vector<std::string> labels;
    for (LabeledStructure& ls : enumerate_labeled(bound)) {
      labels.push_back(std::move(ls.label));
      structures.push_back(std::move(ls.structure));
    }
    table = classify_structures(structures, labels, cols, o.jobs);
  } else {
    std::vector<const NamedModel*> rows;
    if (o.models == "catalog")
      for (const std::string& k : table_model_keys()) rows.push_back(&lookup_model(k));
    else if (o.models == "full")
      for (const NamedModel& m : models()) rows.push_back(&m);
    else
      for (const std::string& k : split_list(o.models)) rows.push_back(&lookup_model(k));
    table = classify_models(rows, cols, o.jobs);
  }

  if (o.format == "csv")
    render_table_csv(table, out);
  else if (o.format == "json")
    render_table_json(table, out);
  else
    render_table_text(table, out);
  return 0;
}

int do_separate(const SeparateOpts& o, std::ostream& out) {
  SeparationQuery query;
  query.hold = split_list(o.hold);
  query.fail = split_list(o.fail);
  query.max_worlds = o.max_worlds;
  std::optional<LabeledStructure> witness = find_separation(query);

  if (o.format == "json") {
    json doc;
    doc["found"] = witness.has_value();
    if (witness) {
      doc["label"] = witness->label;
      doc["structure"] = structure_json(witness->structure);
    }
    out << doc.dump(2) << '\n';
  } else if (witness) {
    out << "witness " << witness->label << '\n';
    describe_structure(witness->structure, out);
  } else {
    out << "none within " << o.max_worlds << " worlds\n";
  }
  return witness ? 0 : 1;
}

int do_prove(const ProveOpts& o, std::ostream& out) {
  std::vector<FormulaPtr> assumptions;
  for (const std::string& a : o.assume) assumptions.push_back(parse(a));
  ProverMode mode =
      o.mode == "intuitionistic" ? ProverMode::Intuitionistic : ProverMode::Minimal;
  ProofResult r = derives(assumptions, parse(o.goal), mode, o.budget);

  if (o.format == "json")
    out << json{{"outcome", outcome_word(r.outcome)}, {"steps", r.steps}}.dump(2) << '\n';
  else
    out << outcome_word(r.outcome) << '\n';
  switch (r.outcome) {
    case ProofOutcome::Derivable: return 0;
    case ProofOutcome::NotDerivable: return 1;
    case ProofOutcome::BudgetExceeded: break;
  }
  return 2;
}

int do_ledger(const LedgerOpts& o, std::ostream& out) {
  LedgerReport report = check_ledger(true);
  std::vector<const LedgerCheck*> picked;
  for (const LedgerCheck& c : report.checks)
    if (o.group.empty() || c.entry->group == o.group) picked.push_back(&c);
  if (picked.empty()) throw std::invalid_argument("unknown ledger group: " + o.group);

  bool pass = std::all_of(picked.begin(), picked.end(),
                          [](const LedgerCheck* c) { return c->pass(); });

  if (o.format == "json") {
    json doc;
    json entries = json::array();
    for (const LedgerCheck* c : picked)
      entries.push_back({{"name", c->entry->name},
                         {"group", c->entry->group},
                         {"expected", c->entry->expected},
                         {"outcome", outcome_word(c->outcome)},
                         {"prover_ok", c->prover_ok},
                         {"countermodel_ok", c->countermodel_ok},
                         {"pass", c->pass()}});
    doc["entries"] = std::move(entries);
    doc["pass"] = pass;
    out << doc.dump(2) << '\n';
    return pass ? 0 : 1;
  }

  std::size_t ok = 0;
  for (const LedgerCheck* c : picked) {
    if (c->pass()) {
      ++ok;
      out << "PASS " << c->entry->name << '\n';
      continue;
    }
    out << "FAIL " << c->entry->name << ": ";
    if (!c->prover_ok)
      out << "expected " << (c->entry->expected ? "derivable" : "not derivable") << ", got "
          << outcome_word(c->outcome);
    if (!c->prover_ok && !c->countermodel_ok) out << "; ";
    if (!c->countermodel_ok)
      out << "countermodel " << c->entry->countermodel << " does not refute it";
    out << '\n';
  }
  out << ok << '/' << picked.size() << " entries pass\n";
  return pass ? 0 : 1;
}

int do_audit(const ReportOpts& o, std::ostream& out) {
  AuditReport report = audit_fig1(o.max_worlds);

  if (o.format == "json") {
    json doc;
    json pairs = json::array();
    for (const AuditPair& p : report.pairs)
      pairs.push_back({{"from", p.from},
                       {"to", p.to},
                       {"implied", p.implied},
                       {"path", p.path},
                       {"witness", p.witness},
                       {"ok", p.ok}});
    doc["pairs"] = std::move(pairs);
    doc["pass"] = report.pass;
    out << doc.dump(2) << '\n';
    return report.pass ? 0 : 1;
  }

  std::size_t proved = 0, separated = 0, failed = 0;
  for (const AuditPair& p : report.pairs) {
    std::string head = pad(p.from, 6) + " => " + pad(p.to, 6);
    if (p.implied && p.ok) {
      ++proved;
      out << "proved     " << head << "  via " << p.path << '\n';
    } else if (p.ok) {
      ++separated;
      out << "separated  " << head << "  by " << p.witness << '\n';
    } else if (p.implied) {
      ++failed;
      out << "REFUTED    " << head << "  countermodel " << p.witness << '\n';
    } else {
      ++failed;
      out << "UNRESOLVED " << head << '\n';
    }
  }
  out << report.pairs.size() << " pairs: " << proved << " proved, " << separated << " separated";
  if (failed) out << ", " << failed << " failed";
  out << '\n';
  return report.pass ? 0 : 1;
}

int do_experiments(const std::string& format, std::ostream& out) {
  ExperimentReport report = run_experiments();

  if (format == "json") {
    json doc;
    json checks = json::array();
    for (const ExperimentCheck& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["checks"] = std::move(checks);
    doc["pass"] = report.pass;
    out << doc.dump(2) << '\n';
    return report.pass ? 0 : 1;
  }

  for (const ExperimentCheck& c : report.checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  out << (report.pass ? "all checks pass" : "some checks failed") << '\n';
  return report.pass ? 0 : 1;
}

int do_characterize(const ReportOpts& o, std::ostream& out) {
  CharacterizationReport report = characterize(o.max_worlds, o.jobs);

  if (o.format == "json") {
    json doc;
    json checks = json::array();
    for (const CharacterizationCheck& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["checks"] = std::move(checks);
    doc["structures_checked"] = report.structures_checked;
    doc["pass"] = report.pass;
    out << doc.dump(2) << '\n';
    return report.pass ? 0 : 1;
  }

  for (const CharacterizationCheck& c : report.checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  out << "structures checked: " << report.structures_checked << '\n';
  return report.pass ? 0 : 1;
}

int do_catalog(const CatalogOpts& o, std::ostream& out) {
  if (!o.dot.empty()) {
    const NamedModel& m = lookup_model(o.dot);
    out << "digraph \"" << m.key << "\" {\n  rankdir=BT;\n";
    for (int w = 0; w < m.structure.size(); ++w) {
      out << "  \"" << m.structure.world_name(w) << "\"";
      if (m.structure.abnormal(w)) out << " [style=filled]";
      out << ";\n";
    }
    for (auto [a, b] : m.structure.cover_pairs())
      out << "  \"" << m.structure.world_name(a) << "\" -> \"" << m.structure.world_name(b)
          << "\";\n";
    out << "}\n";
    return 0;
  }

  std::size_t key_w = 0, group_w = 0;
  for (const Principle& p : principles()) {
    key_w = std::max(key_w, p.key.size());
    group_w = std::max(group_w, p.group.size());
  }
  out << "principles:\n";
  for (const Principle& p : principles())
    out << "  " << pad(p.key, key_w) << "  " << pad(p.group, group_w) << "  "
        << to_string(p.schema) << "  (" << p.display << ")\n";
  out << "models:\n";
  for (const NamedModel& m : models()) {
    out << "  " << pad(m.key, 5) << "  " << m.structure.size()
        << (m.structure.size() == 1 ? " world,  Q={" : " worlds, Q={");
    bool first = true;
    for (int w = 0; w < m.structure.size(); ++w)
      if (m.structure.abnormal(w)) {
        out << (first ? "" : ",") << m.structure.world_name(w);
        first = false;
      }
    out << "}  " << m.notes << '\n';
  }
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"classify implication principles over minimal-logic Kripke models"};
  app.name("minlog");
  app.require_subcommand(1);

  EvalOpts ev;
  ev.format = default_format({"text", "json"});
  auto* eval = app.add_subcommand("eval", "force a formula at a world of a model");
  eval->add_option("--model", ev.model, "model file, or key:<catalog name>")->required();
  eval->add_option("--world", ev.world, "world name")->required();
  eval->add_option("--formula", ev.formula, "formula text")->required();
  eval->add_option("--assign", ev.assigns, "atom=world,... extent (repeatable)");
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"text", "json"}));

  ClassifyOpts cl;
  cl.format = default_format({"text", "json"});
  auto* classify = app.add_subcommand("classify", "decide schema validity on a model's frame");
  classify->add_option("--model", cl.model, "model file, or key:<catalog name>")->required();
  auto* cl_principle = classify->add_option("--principle", cl.principle, "catalog principle key");
  auto* cl_schema = classify->add_option("--schema", cl.schema, "schema body");
  classify->add_option("--vars", cl.vars, "metavariables of --schema (default: its atoms)")
      ->needs(cl_schema);
  cl_schema->excludes(cl_principle);
  classify->add_option("--format", cl.format)->check(CLI::IsMember({"text", "json"}));

  TableOpts tb;
  tb.format = default_format({"text", "csv", "json"});
  auto* table = app.add_subcommand("table", "classification table of models against principles");
  table->add_option("--models", tb.models, "catalog | full | enumerate:N | model keys");
  table->add_option("--principles", tb.principles, "fig1 | all | principle keys");
  table->add_option("--format", tb.format)->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--jobs", tb.jobs)->check(CLI::Range(1, 64));

  SeparateOpts sp;
  sp.format = default_format({"text", "json"});
  auto* separate = app.add_subcommand("separate", "search for a structure splitting principles");
  separate->add_option("--hold", sp.hold, "principles that must be valid")->required();
  separate->add_option("--fail", sp.fail, "principles that must fail")->required();
  separate->add_option("--max-worlds", sp.max_worlds)->check(CLI::Range(1, 6));
  separate->add_option("--format", sp.format)->check(CLI::IsMember({"text", "json"}));

  ProveOpts pv;
  pv.format = default_format({"text", "json"});
  auto* prove = app.add_subcommand("prove", "decide derivability of a sequent");
  prove->add_option("--assume", pv.assume, "assumption (repeatable)");
  prove->add_option("--goal", pv.goal, "goal formula")->required();
  prove->add_option("--mode", pv.mode)->check(CLI::IsMember({"minimal", "intuitionistic"}));
  prove->add_option("--budget", pv.budget, "sequent budget")->check(CLI::PositiveNumber);
  prove->add_option("--format", pv.format)->check(CLI::IsMember({"text", "json"}));

  LedgerOpts lg;
  lg.format = default_format({"text", "json"});
  auto* ledger_cmd = app.add_subcommand("ledger", "check every recorded entailment claim");
  ledger_cmd->add_option("--group", lg.group, "restrict to one group");
  ledger_cmd->add_option("--format", lg.format)->check(CLI::IsMember({"text", "json"}));

  ReportOpts au;
  au.format = default_format({"text", "json"});
  auto* audit = app.add_subcommand("audit-fig1", "audit all ordered pairs of the eight principles");
  audit->add_option("--max-worlds", au.max_worlds)->check(CLI::Range(1, 6));
  audit->add_option("--format", au.format)->check(CLI::IsMember({"text", "json"}));

  ReportOpts ex;
  ex.format = default_format({"text", "json"});
  auto* experiments = app.add_subcommand("experiments", "check the surveyed model claims");
  experiments->add_option("--format", ex.format)->check(CLI::IsMember({"text", "json"}));

  ReportOpts ch;
  ch.format = default_format({"text", "json"});
  auto* characterize_cmd =
      app.add_subcommand("characterize", "match semantic verdicts against frame predicates");
  characterize_cmd->add_option("--max-worlds", ch.max_worlds)->check(CLI::Range(1, 6));
  characterize_cmd->add_option("--jobs", ch.jobs)->check(CLI::Range(1, 64));
  characterize_cmd->add_option("--format", ch.format)->check(CLI::IsMember({"text", "json"}));

  CatalogOpts ct;
  auto* catalog_cmd = app.add_subcommand("catalog", "list principles and reference models");
  catalog_cmd->add_option("--dot", ct.dot, "emit the named model as a DOT digraph");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("minlog");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return do_eval(ev, out);
    if (classify->parsed()) return do_classify(cl, out);
    if (table->parsed()) return do_table(tb, out);
    if (separate->parsed()) return do_separate(sp, out);
    if (prove->parsed()) return do_prove(pv, out);
    if (ledger_cmd->parsed()) return do_ledger(lg, out);
    if (audit->parsed()) return do_audit(au, out);
    if (experiments->parsed()) return do_experiments(ex.format, out);
    if (characterize_cmd->parsed()) return do_characterize(ch, out);
    if (catalog_cmd->parsed()) return do_catalog(ct, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (line " << e.line << ", column " << e.col << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace minlog
