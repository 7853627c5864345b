#ifndef QIL_CLI_HPP
#define QIL_CLI_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qil {

/// Command-line driver, callable in-process for testing. `args` excludes the
/// program name; `read_stdin` is invoked at most once, and only when no file
/// argument or generator supplies the input. Returns the exit code: 0
/// success, 1 usage/parse/input errors, 2 internal contract violations.
int run_cli(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin,
            std::ostream& out, std::ostream& err);

} // namespace qil

#endif
