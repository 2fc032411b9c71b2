#pragma once

#include <iosfwd>

namespace asd {

// Exit codes: 0 pass, 1 counterexample, 2 usage or parse error, 3 search exhausted.
enum ExitCode { kExitPass = 0, kExitCounterexample = 1, kExitUsage = 2, kExitExhausted = 3 };

int cli_main(int argc, char** argv);
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace asd
