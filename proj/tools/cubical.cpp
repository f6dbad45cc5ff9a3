#include <CLI11.hpp>
#include <iostream>
#include <unistd.h>

#include "cubical/driver.hpp"

using namespace cubical;

int main(int argc, char** argv) {
    CLI::App app{"Cartesian cubical type theory: checker and normalizer"};
    app.require_subcommand(1);

    std::string file, name, other, emit = "surface", hyp, goal;

    auto* check_cmd = app.add_subcommand("check", "check every declaration of a file");
    check_cmd->add_option("FILE", file)->required();

    auto* norm_cmd = app.add_subcommand("normalize", "print the normal form of a declaration");
    norm_cmd->add_option("FILE", file)->required();
    norm_cmd->add_option("NAME", name)->required();
    norm_cmd->add_option("--emit", emit, "output format")->check(CLI::IsMember({"nf", "surface"}));

    auto* eq_cmd = app.add_subcommand("eq", "compare two declarations");
    eq_cmd->add_option("FILE", file)->required();
    eq_cmd->add_option("NAME1", name)->required();
    eq_cmd->add_option("NAME2", other)->required();

    auto* cof_cmd = app.add_subcommand("cof", "cofibration queries");
    cof_cmd->require_subcommand(1);
    auto* entails_cmd = cof_cmd->add_subcommand("entails", "does HYP entail GOAL");
    entails_cmd->add_option("HYP", hyp)->required();
    entails_cmd->add_option("GOAL", goal)->required();

    auto* repl_cmd = app.add_subcommand("repl", "interactive session");

    CLI11_PARSE(app, argc, argv);

    std::string where = file.empty() ? "<input>" : file;
    try {
        if (*repl_cmd) {
            run_repl(std::cin, std::cout, isatty(STDIN_FILENO) != 0);
            return kOk;
        }
        if (*entails_cmd) {
            bool yes = cof_entails(hyp, goal);
            std::cout << (yes ? "yes" : "no") << "\n";
            return yes ? kOk : kDistinct;
        }
        std::string src;
        try {
            src = read_file(file);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kTypeError;
        }
        Session session;
        session.load(src);
        if (*check_cmd) {
            for (const auto& n : session.order) {
                const CheckedDecl& d = session.get(n);
                if (d.is_type || d.branches.empty()) {
                    std::cout << (d.is_type ? "type " : "def ") << n << "\n";
                } else {
                    const CheckedBranch& b = d.branches[0];
                    std::cout << "def " << n << " : " << surface::print(b.type, b.ctx.names) << "\n";
                }
            }
            std::cout << "ok: " << session.order.size() << " declarations\n";
        } else if (*norm_cmd) {
            for (const auto& line : normalize_decl(session, name, emit == "nf" ? Emit::Nf : Emit::Surface))
                std::cout << line << "\n";
        } else if (*eq_cmd) {
            bool same = eq_decls(session, name, other);
            std::cout << (same ? "EQUAL" : "DISTINCT") << "\n";
            return same ? kOk : kDistinct;
        }
    } catch (const std::exception& e) {
        std::cerr << format_error(where, e) << "\n";
        return exit_code_for(e);
    }
    return kOk;
}
