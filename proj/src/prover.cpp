#include "minlog/prover.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace minlog {

namespace {

// Formulas are interned per query; ids make sequent keys and equality cheap.
enum class Kind : unsigned char { Var, Conj, Disj, Impl };

struct Node {
  Kind kind;
  int a; // Var: name index; binary: left id
  int b; // binary: right id
};

constexpr int kBotVar = 0; // name index reserved for bot

struct Search {
  std::vector<Node> nodes;
  std::map<std::tuple<Kind, int, int>, int> intern_map;
  std::vector<std::string> var_names{"⊥"};
  ProverMode mode;
  std::uint64_t budget;
  std::uint64_t used = 0;
  int bot_id;

  struct BudgetHit {};

  // Sequents are (sorted unique assumption ids, goal id).
  std::map<std::pair<std::vector<int>, int>, bool> memo;

  explicit Search(ProverMode m, std::uint64_t b) : mode(m), budget(b) {
    bot_id = intern(Kind::Var, kBotVar, -1);
  }

  int intern(Kind k, int a, int b) {
    auto [it, fresh] = intern_map.try_emplace({k, a, b}, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back(Node{k, a, b});
    return it->second;
  }

  int var_id(const std::string& name) {
    for (size_t i = 0; i < var_names.size(); ++i)
      if (var_names[i] == name) return intern(Kind::Var, static_cast<int>(i), -1);
    var_names.push_back(name);
    return intern(Kind::Var, static_cast<int>(var_names.size() - 1), -1);
  }

  int add(const FormulaPtr& f) {
    switch (f->conn) {
      case Conn::Atom: return var_id(f->atom);
      case Conn::Bottom: return bot_id;
      case Conn::Conj: return intern(Kind::Conj, add(f->lhs), add(f->rhs));
      case Conn::Disj: return intern(Kind::Disj, add(f->lhs), add(f->rhs));
      case Conn::Impl: return intern(Kind::Impl, add(f->lhs), add(f->rhs));
      default: return add(desugar(f));
    }
  }

  const Node& node(int id) const { return nodes[id]; }
  bool is_var(int id) const { return node(id).kind == Kind::Var; }

  static void insert_sorted(std::vector<int>& xs, int x) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || *it != x) xs.insert(it, x);
  }

  static void erase_at(std::vector<int>& xs, size_t i) { xs.erase(xs.begin() + i); }

  bool contains(const std::vector<int>& xs, int x) const {
    return std::binary_search(xs.begin(), xs.end(), x);
  }

  bool prove(std::vector<int> gamma, int goal) {
    if (++used > budget) throw BudgetHit{};

    // Saturate the invertible rules; gamma stays sorted and duplicate-free.
    for (bool changed = true; changed;) {
      changed = false;

      if (contains(gamma, goal)) return true;
      if (mode == ProverMode::Intuitionistic && contains(gamma, bot_id)) return true;

      const Node& g = node(goal);
      if (g.kind == Kind::Conj) return prove(gamma, g.a) && prove(std::move(gamma), g.b);
      if (g.kind == Kind::Impl) {
        insert_sorted(gamma, g.a);
        goal = g.b;
        changed = true;
        continue;
      }

      for (size_t i = 0; i < gamma.size(); ++i) {
        const Node& f = node(gamma[i]);
        if (f.kind == Kind::Conj) {
          erase_at(gamma, i);
          insert_sorted(gamma, f.a);
          insert_sorted(gamma, f.b);
          changed = true;
          break;
        }
        if (f.kind == Kind::Disj) {
          erase_at(gamma, i);
          auto with = [&](int extra) {
            std::vector<int> g2 = gamma;
            insert_sorted(g2, extra);
            return prove(std::move(g2), goal);
          };
          return with(f.a) && with(f.b);
        }
        if (f.kind == Kind::Impl) {
          const Node& ante = node(f.a);
          if (ante.kind == Kind::Var) {
            if (mode == ProverMode::Intuitionistic && f.a == bot_id) {
              erase_at(gamma, i); // bot -> C carries nothing here
              changed = true;
              break;
            }
            if (contains(gamma, f.a)) {
              erase_at(gamma, i);
              insert_sorted(gamma, f.b);
              changed = true;
              break;
            }
          } else if (ante.kind == Kind::Conj) {
            erase_at(gamma, i);
            insert_sorted(gamma, intern(Kind::Impl, ante.a, intern(Kind::Impl, ante.b, f.b)));
            changed = true;
            break;
          } else if (ante.kind == Kind::Disj) {
            erase_at(gamma, i);
            insert_sorted(gamma, intern(Kind::Impl, ante.a, f.b));
            insert_sorted(gamma, intern(Kind::Impl, ante.b, f.b));
            changed = true;
            break;
          }
          // nested implication: handled below, with backtracking
        }
      }
    }

    auto key = std::make_pair(gamma, goal);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    bool derived = [&] {
      const Node& g = node(goal);
      if (g.kind == Kind::Disj) {
        if (prove(gamma, g.a) || prove(gamma, g.b)) return true;
      }
      for (size_t i = 0; i < gamma.size(); ++i) {
        const Node& f = node(gamma[i]);
        if (f.kind != Kind::Impl || node(f.a).kind != Kind::Impl) continue;
        // (A -> B) -> C: prove A -> B with B -> C in place of the nested
        // implication, then continue from C alone.
        const Node& ante = node(f.a);
        std::vector<int> rest = gamma;
        erase_at(rest, i);
        std::vector<int> left = rest;
        insert_sorted(left, intern(Kind::Impl, ante.b, f.b));
        if (!prove(std::move(left), f.a)) continue;
        std::vector<int> right = std::move(rest);
        insert_sorted(right, f.b);
        if (prove(std::move(right), goal)) return true;
      }
      return false;
    }();

    memo.emplace(std::move(key), derived);
    return derived;
  }
};

} // namespace

ProofResult derives(const std::vector<FormulaPtr>& assumptions, const FormulaPtr& goal,
                    ProverMode mode, std::uint64_t budget) {
  Search s(mode, budget);
  std::vector<int> gamma;
  for (const auto& a : assumptions) Search::insert_sorted(gamma, s.add(desugar(a)));
  int g = s.add(desugar(goal));
  try {
    bool ok = s.prove(std::move(gamma), g);
    return ProofResult{ok ? ProofOutcome::Derivable : ProofOutcome::NotDerivable, s.used};
  } catch (const Search::BudgetHit&) {
    return ProofResult{ProofOutcome::BudgetExceeded, s.used};
  }
}

ProofResult derives_minimal(const std::vector<FormulaPtr>& assumptions, const FormulaPtr& goal,
                            std::uint64_t budget) {
  return derives(assumptions, goal, ProverMode::Minimal, budget);
}

} // namespace minlog
