#ifndef MINLOG_KRIPKE_HPP
#define MINLOG_KRIPKE_HPP

#include "minlog/formula.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minlog {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownAtomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite poset of worlds with an upward-closed set of abnormal worlds.
// Worlds are indices into `worlds`; sets of worlds are bitmasks, so at most
// 64 worlds (far beyond what enumeration or the transforms ever produce).
//
// A world is abnormal when it forces bot.  Nothing else is special about it:
// bot has no elimination rule here.
class Structure {
public:
  // `leq` lists generating pairs (lo, hi) by name; the reflexive-transitive
  // closure is computed, then antisymmetry and upward closure of `abnormal`
  // are validated.  Throws ModelError with a diagnostic otherwise.
  static Structure make(std::vector<std::string> worlds,
                        const std::vector<std::pair<std::string, std::string>>& leq,
                        const std::vector<std::string>& abnormal);

  // Same, with index pairs and an abnormal bitmask.
  static Structure make(std::vector<std::string> worlds,
                        const std::vector<std::pair<int, int>>& leq, std::uint64_t abnormal);

  // Already-closed successor masks (used by the enumerator); still validated.
  static Structure from_up_masks(std::vector<std::string> worlds, std::vector<std::uint64_t> up,
                                 std::uint64_t abnormal);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& worlds() const { return names_; }
  const std::string& world_name(int w) const { return names_[w]; }
  int world_index(std::string_view name) const; // -1 when absent

  bool leq(int a, int b) const { return (up_[a] >> b) & 1; }
  std::uint64_t up_mask(int w) const { return up_[w]; }
  std::uint64_t abnormal_mask() const { return abnormal_; }
  bool abnormal(int w) const { return (abnormal_ >> w) & 1; }
  std::uint64_t all_mask() const { return all_; }

  // (a, b) with a < b in the order and nothing strictly between.
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool operator==(const Structure& o) const {
    return names_ == o.names_ && up_ == o.up_ && abnormal_ == o.abnormal_;
  }

private:
  Structure() = default;
  std::vector<std::string> names_;
  std::vector<std::uint64_t> up_;
  std::uint64_t abnormal_ = 0;
  std::uint64_t all_ = 0;
};

// Upward-closed world sets, sorted ascending as bitmasks.
std::vector<std::uint64_t> upsets(const Structure& s);
bool is_upset(const Structure& s, std::uint64_t mask);

// No world sees two incomparable worlds above it.
bool is_v_free(const Structure& s);
// No two distinct worlds are comparable.
bool is_antichain(const Structure& s);
// The induced substructure on the normal worlds, with an empty cone.
Structure normal_restriction(const Structure& s);
// Same poset with every world abnormal.
Structure lobotomy(const Structure& s);

// Atom extents; every extent must be an upset.
using Valuation = std::map<std::string, std::uint64_t>;

struct Model {
  Structure structure;
  Valuation valuation;

  static Model make(Structure s, Valuation v); // validates upward closure
};

Model lobotomy(const Model& m);

// Worlds forcing f, as a bitmask.  Throws UnknownAtomError when f mentions an
// atom the valuation does not cover; a missing extent is never read as empty.
std::uint64_t extent(const Model& m, const FormulaPtr& f);

bool forces(const Model& m, int world, const FormulaPtr& f);
bool forces(const Model& m, std::string_view world, const FormulaPtr& f);

// f forced at every world.
bool model_valid(const Model& m, const FormulaPtr& f);

// Schema validity over the full model on s: metavariables range over every
// upset.  The catalog never needs more than four variables; more than six
// here is an input error.
bool schema_valid_full(const Structure& s, const Schema& schema);

// Unravelling into a tree: worlds are (u, C) with C a maximal chain of
// predecessors of u ending in u, ordered by chain containment.  Forcing at
// (u, C) agrees with forcing at u pointwise; base_world records u.
struct TreeUnravelling {
  Model model;
  std::vector<int> base_world;
};

TreeUnravelling tree_transform(const Model& m);
bool is_tree(const Structure& s);

// ---- model files ----
//
// JSON object with fields:
//   worlds     list of distinct names
//   leq        list of [lo, hi] generating pairs (closure is computed)
//   Q          list of abnormal worlds (must be upward closed)
//   valuation  optional map atom -> list of worlds (each an upset)
Model load_model(const std::filesystem::path& path);
Model read_model(std::istream& in, const std::string& origin = "<stream>");
void write_model(std::ostream& out, const Model& m);
std::string model_to_json_text(const Model& m);

} // namespace minlog

#endif
