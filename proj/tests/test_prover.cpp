#include "doctest.h"

#include "minlog/formula.hpp"
#include "minlog/prover.hpp"

using namespace minlog;

namespace {

ProofResult prove(const char* goal, ProverMode mode = ProverMode::Minimal,
                  std::uint64_t budget = kDefaultProofBudget) {
  return derives({}, parse(goal), mode, budget);
}

ProofResult prove_from(const std::vector<const char*>& assumptions, const char* goal,
                       ProverMode mode = ProverMode::Minimal) {
  std::vector<FormulaPtr> gamma;
  for (const char* a : assumptions) gamma.push_back(parse(a));
  return derives(gamma, parse(goal), mode);
}

} // namespace

TEST_CASE("plain intuitionistic core, no bot involved") {
  CHECK(prove("p -> p").derivable());
  CHECK(prove("p -> q -> p").derivable());
  CHECK(prove("(p -> q) -> (q -> r) -> (p -> r)").derivable());
  CHECK(prove("(p & q) -> (q & p)").derivable());
  CHECK(prove("(p | q) -> (q | p)").derivable());
  CHECK(prove("((p & q) -> r) -> (p -> (q -> r))").derivable());
  CHECK(prove("(p -> (q -> r)) -> ((p & q) -> r)").derivable());
  CHECK(prove("(p & (q | r)) -> ((p & q) | (p & r))").derivable());
  CHECK(prove("((p | q) -> r) -> ((p -> r) & (q -> r))").derivable());

  CHECK_FALSE(prove("p").derivable());
  CHECK_FALSE(prove("p -> q").derivable());
  CHECK_FALSE(prove("(p -> q) | (q -> p)").derivable());
  CHECK_FALSE(prove("((p -> q) -> p) -> p").derivable());

  CHECK(prove_from({"p -> q", "q -> r"}, "p -> r").derivable());
  CHECK(prove_from({"q"}, "p -> q").derivable());
  CHECK_FALSE(prove_from({"p -> q"}, "q -> p").derivable());
}

TEST_CASE("bot is inert in minimal mode") {
  CHECK_FALSE(prove("bot -> p").derivable());
  CHECK_FALSE(prove_from({"bot"}, "p").derivable());
  CHECK_FALSE(prove_from({"~p", "p"}, "q").derivable());
  CHECK_FALSE(prove_from({"~p"}, "p -> q").derivable());

  // negative conclusions still follow from bot
  CHECK(prove("bot -> ~p").derivable());
  CHECK(prove_from({"bot"}, "~p").derivable());
  CHECK(prove_from({"p & ~p"}, "~q").derivable());
}

TEST_CASE("intuitionistic mode adds ex falso") {
  CHECK(prove("bot -> p", ProverMode::Intuitionistic).derivable());
  CHECK(prove_from({"bot"}, "p", ProverMode::Intuitionistic).derivable());
  CHECK(prove_from({"~p", "p"}, "q", ProverMode::Intuitionistic).derivable());
  CHECK(prove_from({"~p"}, "p -> q", ProverMode::Intuitionistic).derivable());

  // but not classical reasoning
  CHECK_FALSE(prove("~~p -> p", ProverMode::Intuitionistic).derivable());
  CHECK_FALSE(prove("p | ~p", ProverMode::Intuitionistic).derivable());
  CHECK_FALSE(prove("((p -> q) -> p) -> p", ProverMode::Intuitionistic).derivable());
}

TEST_CASE("negation facts that hold without ex falso") {
  CHECK(prove("~(p & ~p)").derivable());
  CHECK(prove("~~(p | ~p)").derivable());
  CHECK(prove("(p -> ~p) -> ~p").derivable());
  CHECK(prove("~~~p -> ~p").derivable());
  CHECK(prove("p -> ~~p").derivable());
  CHECK(prove("~~p -> ~~~~p").derivable());
  CHECK(prove("~p -> ~~~p").derivable());

  CHECK_FALSE(prove("~~p -> p").derivable());
  CHECK_FALSE(prove("~p | ~~p").derivable());
  CHECK_FALSE(prove("(~p -> ~q) -> (q -> p)").derivable());
  CHECK_FALSE(prove_from({"~~p"}, "p").derivable());
  CHECK_FALSE(prove_from({"~~p"}, "p", ProverMode::Intuitionistic).derivable());
}

TEST_CASE("instance-wise entailments from the survey") {
  // a negated-implication reading of EFQ gives EFQ itself
  CHECK(prove_from({"~top -> (top -> p)"}, "bot -> p").derivable());
  // two halves of the collapse: LEM and EFQ together yield DNE
  CHECK(prove_from({"p | ~p", "bot -> p"}, "~~p -> p").derivable());
  CHECK_FALSE(prove_from({"p | ~p"}, "~~p -> p").derivable());
  CHECK_FALSE(prove_from({"bot -> p"}, "~~p -> p").derivable());
}

TEST_CASE("results are deterministic and report work done") {
  ProofResult a = prove("(p & (q | r)) -> ((p & q) | (p & r))");
  ProofResult b = prove("(p & (q | r)) -> ((p & q) | (p & r))");
  CHECK(a.outcome == b.outcome);
  CHECK(a.steps == b.steps);
  CHECK(a.steps > 0);

  CHECK(derives_minimal({}, parse("p -> p")).derivable());
  CHECK(derives_minimal({}, parse("p -> p")).outcome ==
        derives({}, parse("p -> p"), ProverMode::Minimal).outcome);
}

TEST_CASE("an exhausted budget is its own outcome") {
  ProofResult r = prove("(p -> p) & (q -> q)", ProverMode::Minimal, 1);
  CHECK(r.outcome == ProofOutcome::BudgetExceeded);
  CHECK_FALSE(r.derivable());

  // the same sequent is decided well inside the default budget
  CHECK(prove("(p -> p) & (q -> q)").derivable());
}
