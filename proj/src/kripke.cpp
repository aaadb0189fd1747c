#include "minlog/kripke.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace minlog {

namespace {

constexpr int kMaxWorlds = 64;

[[noreturn]] void bad_model(const std::string& msg) { throw ModelError(msg); }

} // namespace

int Structure::world_index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

Structure Structure::from_up_masks(std::vector<std::string> worlds, std::vector<std::uint64_t> up,
                                   std::uint64_t abnormal) {
  int n = static_cast<int>(worlds.size());
  if (n == 0) bad_model("a structure needs at least one world");
  if (n > kMaxWorlds) bad_model("too many worlds (limit 64)");
  if (static_cast<int>(up.size()) != n) bad_model("successor table size mismatch");

  Structure s;
  s.all_ = n == 64 ? ~0ull : (1ull << n) - 1;
  for (int i = 0; i < n; ++i) {
    if (up[i] & ~s.all_) bad_model("successor mask out of range");
    if (!((up[i] >> i) & 1)) bad_model("order not reflexive at " + worlds[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && ((up[i] >> j) & 1)) {
        if ((up[j] >> i) & 1)
          bad_model("antisymmetry violated between " + worlds[i] + " and " + worlds[j]);
        if (up[j] & ~up[i]) bad_model("order not transitive at " + worlds[i]);
      }
  if (abnormal & ~s.all_) bad_model("abnormal mask out of range");
  for (int i = 0; i < n; ++i)
    if (((abnormal >> i) & 1) && (up[i] & ~abnormal))
      bad_model("abnormal set not upward closed at " + worlds[i]);

  {
    auto sorted = worlds;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) bad_model("duplicate world name: " + *dup);
  }

  s.names_ = std::move(worlds);
  s.up_ = std::move(up);
  s.abnormal_ = abnormal;
  return s;
}

Structure Structure::make(std::vector<std::string> worlds,
                          const std::vector<std::pair<int, int>>& leq, std::uint64_t abnormal) {
  int n = static_cast<int>(worlds.size());
  if (n == 0) bad_model("a structure needs at least one world");
  if (n > kMaxWorlds) bad_model("too many worlds (limit 64)");

  std::vector<std::uint64_t> up(n);
  for (int i = 0; i < n; ++i) up[i] = 1ull << i;
  for (auto [lo, hi] : leq) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) bad_model("leq pair out of range");
    up[lo] |= 1ull << hi;
  }
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      std::uint64_t reach = up[i];
      for (int j = 0; j < n; ++j)
        if ((up[i] >> j) & 1) reach |= up[j];
      if (reach != up[i]) {
        up[i] = reach;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((up[i] >> j) & 1) && ((up[j] >> i) & 1))
        bad_model("antisymmetry violated between " + worlds[i] + " and " + worlds[j] +
                  " (the leq pairs close into a cycle)");

  Structure s;
  s.all_ = n == 64 ? ~0ull : (1ull << n) - 1;
  if (abnormal & ~s.all_) bad_model("abnormal mask out of range");
  for (int i = 0; i < n; ++i)
    if (((abnormal >> i) & 1) && (up[i] & ~abnormal))
      bad_model("abnormal set not upward closed at " + worlds[i]);

  {
    auto sorted = worlds;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) bad_model("duplicate world name: " + *dup);
  }

  s.names_ = std::move(worlds);
  s.up_ = std::move(up);
  s.abnormal_ = abnormal;
  return s;
}

Structure Structure::make(std::vector<std::string> worlds,
                          const std::vector<std::pair<std::string, std::string>>& leq,
                          const std::vector<std::string>& abnormal) {
  auto index = [&](const std::string& name) {
    for (size_t i = 0; i < worlds.size(); ++i)
      if (worlds[i] == name) return static_cast<int>(i);
    bad_model("unknown world name: " + name);
  };
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(leq.size());
  for (const auto& [lo, hi] : leq) pairs.emplace_back(index(lo), index(hi));
  std::uint64_t q = 0;
  for (const auto& name : abnormal) q |= 1ull << index(name);
  return make(std::move(worlds), pairs, q);
}

std::vector<std::pair<int, int>> Structure::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

std::vector<std::uint64_t> upsets(const Structure& s) {
  std::vector<std::uint64_t> out;
  std::uint64_t all = s.all_mask();
  for (std::uint64_t m = 0;; ++m) {
    if (is_upset(s, m)) out.push_back(m);
    if (m == all) break;
  }
  return out;
}

bool is_upset(const Structure& s, std::uint64_t mask) {
  for (int i = 0; i < s.size(); ++i)
    if (((mask >> i) & 1) && (s.up_mask(i) & ~mask)) return false;
  return true;
}

bool is_v_free(const Structure& s) {
  int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (s.leq(a, b) && s.leq(a, c) && !s.leq(b, c) && !s.leq(c, b)) return false;
  return true;
}

bool is_antichain(const Structure& s) {
  for (int a = 0; a < s.size(); ++a)
    if (s.up_mask(a) != (1ull << a)) return false;
  return true;
}

Structure normal_restriction(const Structure& s) {
  std::vector<int> keep;
  for (int i = 0; i < s.size(); ++i)
    if (!s.abnormal(i)) keep.push_back(i);
  if (keep.empty()) bad_model("no normal worlds to restrict to");

  std::vector<std::string> names;
  names.reserve(keep.size());
  for (int i : keep) names.push_back(s.world_name(i));
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      if (s.leq(keep[a], keep[b])) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Structure::make(std::move(names), pairs, 0);
}

Structure lobotomy(const Structure& s) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (s.leq(a, b)) pairs.emplace_back(a, b);
  return Structure::make(s.worlds(), pairs, s.all_mask());
}

Model Model::make(Structure s, Valuation v) {
  for (const auto& [atom, ext] : v) {
    if (ext & ~s.all_mask()) bad_model("extent of " + atom + " out of range");
    if (!is_upset(s, ext)) bad_model("extent of " + atom + " is not upward closed");
  }
  return Model{std::move(s), std::move(v)};
}

Model lobotomy(const Model& m) {
  return Model::make(lobotomy(m.structure), m.valuation);
}

namespace {

std::uint64_t ext_core(const Structure& s, const Valuation& v, const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom: {
      auto it = v.find(f->atom);
      if (it == v.end()) throw UnknownAtomError("no extent for atom: " + f->atom);
      return it->second;
    }
    case Conn::Bottom: return s.abnormal_mask();
    case Conn::Conj: return ext_core(s, v, f->lhs) & ext_core(s, v, f->rhs);
    case Conn::Disj: return ext_core(s, v, f->lhs) | ext_core(s, v, f->rhs);
    case Conn::Impl: {
      std::uint64_t a = ext_core(s, v, f->lhs);
      std::uint64_t b = ext_core(s, v, f->rhs);
      std::uint64_t broken = a & ~b; // worlds where the implication fails locally
      std::uint64_t out = 0;
      for (int w = 0; w < s.size(); ++w)
        if (!(s.up_mask(w) & broken)) out |= 1ull << w;
      return out;
    }
    default: return ext_core(s, v, desugar(f));
  }
}

} // namespace

std::uint64_t extent(const Model& m, const FormulaPtr& f) {
  return ext_core(m.structure, m.valuation, desugar(f));
}

bool forces(const Model& m, int world, const FormulaPtr& f) {
  if (world < 0 || world >= m.structure.size()) bad_model("world index out of range");
  return (extent(m, f) >> world) & 1;
}

bool forces(const Model& m, std::string_view world, const FormulaPtr& f) {
  int w = m.structure.world_index(world);
  if (w < 0) bad_model("unknown world name: " + std::string(world));
  return forces(m, w, f);
}

bool model_valid(const Model& m, const FormulaPtr& f) {
  return extent(m, f) == m.structure.all_mask();
}

bool schema_valid_full(const Structure& s, const Schema& schema) {
  size_t arity = schema.variables.size();
  if (arity > 6) throw std::invalid_argument("schema arity too large for full-model sweep");

  FormulaPtr body = desugar(schema.body);
  std::vector<std::uint64_t> ups = upsets(s);
  Valuation v;
  for (const auto& var : schema.variables) v[var] = 0;

  std::vector<size_t> pick(arity, 0);
  for (;;) {
    size_t i = 0;
    for (const auto& var : schema.variables) v[var] = ups[pick[i++]];
    if (ext_core(s, v, body) != s.all_mask()) return false;
    size_t k = 0;
    while (k < arity && ++pick[k] == ups.size()) pick[k++] = 0;
    if (k == arity) break;
  }
  return true;
}

// ---- tree unravelling ----

namespace {

// Descending cover paths from w down to a minimal world, as bitmasks.
void chains_below(const std::vector<std::pair<int, int>>& covers, int w, std::uint64_t acc,
                  std::vector<std::uint64_t>& out) {
  bool minimal = true;
  for (auto [lo, hi] : covers)
    if (hi == w) {
      minimal = false;
      chains_below(covers, lo, acc | (1ull << lo), out);
    }
  if (minimal) out.push_back(acc);
}

} // namespace

TreeUnravelling tree_transform(const Model& m) {
  const Structure& s = m.structure;
  int n = s.size();
  auto covers = s.cover_pairs();

  struct TreeWorld {
    int base;
    std::uint64_t chain;
  };
  std::vector<TreeWorld> tw;
  for (int w = 0; w < n; ++w) {
    std::vector<std::uint64_t> chains;
    chains_below(covers, w, 1ull << w, chains);
    std::sort(chains.begin(), chains.end());
    chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
    for (auto c : chains) tw.push_back({w, c});
  }
  std::sort(tw.begin(), tw.end(), [](const TreeWorld& a, const TreeWorld& b) {
    int la = std::popcount(a.chain), lb = std::popcount(b.chain);
    if (la != lb) return la < lb;
    if (a.chain != b.chain) return a.chain < b.chain;
    return a.base < b.base;
  });

  int tn = static_cast<int>(tw.size());
  if (tn > kMaxWorlds) bad_model("tree unravelling exceeds 64 worlds");

  std::vector<std::string> names(tn);
  for (int i = 0; i < tn; ++i) {
    std::ostringstream os;
    os << s.world_name(tw[i].base) << '|';
    bool first = true;
    for (int w = 0; w < n; ++w)
      if ((tw[i].chain >> w) & 1) {
        if (!first) os << '.';
        os << s.world_name(w);
        first = false;
      }
    names[i] = os.str();
  }

  std::vector<std::pair<int, int>> pairs;
  std::uint64_t q = 0;
  for (int i = 0; i < tn; ++i) {
    if (s.abnormal(tw[i].base)) q |= 1ull << i;
    for (int j = 0; j < tn; ++j)
      if ((tw[i].chain & ~tw[j].chain) == 0) pairs.emplace_back(i, j);
  }
  Structure ts = Structure::make(std::move(names), pairs, q);

  Valuation tv;
  for (const auto& [atom, ext] : m.valuation) {
    std::uint64_t te = 0;
    for (int i = 0; i < tn; ++i)
      if ((ext >> tw[i].base) & 1) te |= 1ull << i;
    tv[atom] = te;
  }

  TreeUnravelling out{Model::make(std::move(ts), std::move(tv)), {}};
  out.base_world.resize(tn);
  for (int i = 0; i < tn; ++i) out.base_world[i] = tw[i].base;
  return out;
}

bool is_tree(const Structure& s) {
  // Predecessors of any world form a chain.
  int n = s.size();
  for (int w = 0; w < n; ++w)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s.leq(a, w) && s.leq(b, w) && !s.leq(a, b) && !s.leq(b, a)) return false;
  return true;
}

// ---- model files ----

namespace {

using nlohmann::json;

Model model_from_json(const json& j, const std::string& origin) {
  auto fail = [&](const std::string& msg) -> void { bad_model(origin + ": " + msg); };

  if (!j.is_object()) fail("expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "worlds" && key != "leq" && key != "Q" && key != "valuation")
      fail("unknown field '" + key + "'");
  if (!j.contains("worlds") || !j["worlds"].is_array()) fail("missing 'worlds' list");
  if (!j.contains("leq") || !j["leq"].is_array()) fail("missing 'leq' list");
  if (!j.contains("Q") || !j["Q"].is_array()) fail("missing 'Q' list");

  std::vector<std::string> worlds;
  for (const auto& w : j["worlds"]) {
    if (!w.is_string()) fail("'worlds' entries must be strings");
    worlds.push_back(w.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> leq;
  for (const auto& p : j["leq"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      fail("'leq' entries must be [lo, hi] name pairs");
    leq.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }

  std::vector<std::string> abnormal;
  for (const auto& q : j["Q"]) {
    if (!q.is_string()) fail("'Q' entries must be world names");
    abnormal.push_back(q.get<std::string>());
  }

  Structure s = [&] {
    try {
      return Structure::make(std::move(worlds), leq, abnormal);
    } catch (const ModelError& e) {
      fail(e.what());
      throw; // unreachable
    }
  }();

  Valuation v;
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object()) fail("'valuation' must map atoms to world lists");
    for (const auto& [atom, ws] : j["valuation"].items()) {
      if (!ws.is_array()) fail("extent of '" + atom + "' must be a list of worlds");
      std::uint64_t ext = 0;
      for (const auto& w : ws) {
        if (!w.is_string()) fail("extent of '" + atom + "' must list world names");
        int idx = s.world_index(w.get<std::string>());
        if (idx < 0) fail("extent of '" + atom + "' mentions unknown world " + w.get<std::string>());
        ext |= 1ull << idx;
      }
      v[atom] = ext;
    }
  }

  try {
    return Model::make(std::move(s), std::move(v));
  } catch (const ModelError& e) {
    fail(e.what());
    throw; // unreachable
  }
}

json model_to_json(const Model& m) {
  const Structure& s = m.structure;
  json j;
  j["worlds"] = s.worlds();
  json leq = json::array();
  for (auto [a, b] : s.cover_pairs()) leq.push_back({s.world_name(a), s.world_name(b)});
  j["leq"] = std::move(leq);
  json q = json::array();
  for (int i = 0; i < s.size(); ++i)
    if (s.abnormal(i)) q.push_back(s.world_name(i));
  j["Q"] = std::move(q);
  if (!m.valuation.empty()) {
    json val = json::object();
    for (const auto& [atom, ext] : m.valuation) {
      json ws = json::array();
      for (int i = 0; i < s.size(); ++i)
        if ((ext >> i) & 1) ws.push_back(s.world_name(i));
      val[atom] = std::move(ws);
    }
    j["valuation"] = std::move(val);
  }
  return j;
}

} // namespace

Model read_model(std::istream& in, const std::string& origin) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    bad_model(origin + ": " + e.what());
  }
  return model_from_json(j, origin);
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad_model("cannot open model file: " + path.string());
  return read_model(in, path.string());
}

void write_model(std::ostream& out, const Model& m) { out << model_to_json(m).dump(2) << '\n'; }

std::string model_to_json_text(const Model& m) { return model_to_json(m).dump(2); }

} // namespace minlog
