// Command-line surface. Subcommands:
//   build     --model <name> | --structure <ljs-v1 file>, --out <lie-v1 file>
//             [--triple-out <file>] — build the graded algebra and write it
//   verify    <lie-v1 file> [--checks jacobi,killing,simple]
//             [--mode auto|full|sampled] [--seed N] — check axioms
//   classify  --type A..G --rank r [--trials N] [--seed N] [--out <cls-v1>]
//   decompose <lie-v1 file> --triple <file> --out <ljs-v1 file>
//   models    --list
//   export    --model <name> | --structure <file>, --to lie|ljs, --out <file>
// Global flag --json switches reports (verify, classify, models) to JSON.
//
// Exit codes: 0 success / all checks passed; 1 a requested check failed or a
// structural axiom was violated; 2 malformed input file; 3 invalid
// parameters or usage.
#ifndef SHORTSL2_CLI_HPP
#define SHORTSL2_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace shortsl2 {

// args excludes the program name. Output and error streams are injectable
// for tests; the argv overload wraps std::cout / std::cerr.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace shortsl2

#endif  // SHORTSL2_CLI_HPP
