#pragma once

#include <iosfwd>
#include <string>

namespace minilog::repl {

// Interactive loop over the object languages. One expression per line in the
// current mode (prop, proc, type, solve); `:mode <m>` switches, `:load <f>`
// replays a file line by line, `:record <f>` appends each input/output pair
// to a corpus file, `:quit` leaves. Input errors report and continue.
int run(const std::string& initial_mode, std::istream& in, std::ostream& out,
        bool interactive);

// Evaluates one REPL line in the given mode, as the loop would.
int eval_line(const std::string& mode, const std::string& line, std::ostream& out);

}  // namespace minilog::repl
