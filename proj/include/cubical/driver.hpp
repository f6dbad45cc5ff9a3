#pragma once

// Batch commands and the REPL, independent of argument parsing.

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/checker.hpp"

namespace cubical {

enum ExitCode : int { kOk = 0, kDistinct = 1, kTypeError = 2, kParseError = 3, kInternalError = 4 };

enum class Emit : unsigned char { Surface, Nf };

struct Session {
    Globals globals;
    std::map<std::string, CheckedDecl> decls;
    std::vector<std::string> order;

    /// Parses and checks every declaration of `src`.
    void load(std::string_view src);
    [[nodiscard]] const CheckedDecl& get(const std::string& name) const;
};

std::string read_file(const std::string& path);

/// One line per branch of the declaration.
std::vector<std::string> normalize_decl(const Session& s, const std::string& name, Emit emit);

/// Compares two declarations with the same parameter telescope by their
/// normal forms. Throws TypeError when the telescopes differ.
bool eq_decls(const Session& s, const std::string& a, const std::string& b);

/// Entailment between cofibrations over their free dimension names.
bool cof_entails(std::string_view hyp, std::string_view goal);

/// Renders an error as `where:line:col: kind: message`.
std::string format_error(const std::string& where, const std::exception& e);
int exit_code_for(const std::exception& e);

/// Reads commands from `in` until end of input or `:q`.
void run_repl(std::istream& in, std::ostream& out, bool prompt);

} // namespace cubical
