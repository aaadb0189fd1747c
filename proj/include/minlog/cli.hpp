#ifndef MINLOG_CLI_HPP
#define MINLOG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace minlog {

// Front end for the library verbs.  `args` excludes the program name.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict (formula
// not forced, sequent not derivable, witness not found, report failed),
// 2 usage errors, malformed input, or an exhausted proof budget.
//
// MINLOG_FORMAT selects the default --format where a verb supports several.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace minlog

#endif
