#include "cubical/driver.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubical/errors.hpp"
#include "cubical/nbe.hpp"

namespace cubical {

void Session::load(std::string_view src) {
    for (const auto& d : surface::parse_file(src)) {
        CheckedDecl c = check_decl(globals, d);
        order.push_back(c.name);
        decls.emplace(c.name, std::move(c));
    }
}

const CheckedDecl& Session::get(const std::string& name) const {
    auto it = decls.find(name);
    if (it == decls.end()) throw ScopeError("no declaration named '" + name + "'");
    return it->second;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::string render_type(const CheckedBranch& b, Emit emit) {
    NfTyPtr nf = nbe_ty(b.ctx.cx, b.type);
    return emit == Emit::Nf ? serialize(nf) : surface::print(embed(nf), b.ctx.names);
}

std::string render_term(const CheckedBranch& b, Emit emit) {
    NfPtr nf = nbe_tm(b.ctx.cx, b.type, b.term);
    return emit == Emit::Nf ? serialize(nf) : surface::print(embed(nf), b.ctx.names);
}

std::string prefixed(const CheckedBranch& b, const std::string& text) {
    return b.label.empty() ? text : "[" + b.label + "] " + text;
}

std::string telescope_shape(const CheckedBranch& b) {
    std::string out = b.label + "|";
    for (int level = 0; level < b.ctx.cx.size(); ++level) {
        const CxEntry& e = b.ctx.cx.at_level(level);
        out += e.is_dim ? "I;" : serialize(reify_ty(b.ctx.cx, e.type)) + ";";
    }
    return out;
}

const char* kind_of(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse error";
    if (dynamic_cast<const ScopeError*>(&e)) return "scope error";
    if (dynamic_cast<const BoundaryError*>(&e)) return "boundary error";
    if (dynamic_cast<const CoverageError*>(&e)) return "coverage error";
    if (dynamic_cast<const TypeError*>(&e)) return "type error";
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const KanError*>(&e)) return "internal error";
    return "error";
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

std::vector<std::string> normalize_decl(const Session& s, const std::string& name, Emit emit) {
    const CheckedDecl& d = s.get(name);
    std::vector<std::string> out;
    for (const auto& b : d.branches) out.push_back(prefixed(b, d.is_type ? render_type(b, emit) : render_term(b, emit)));
    return out;
}

bool eq_decls(const Session& s, const std::string& a, const std::string& b) {
    const CheckedDecl& da = s.get(a);
    const CheckedDecl& db = s.get(b);
    if (da.is_type != db.is_type) throw TypeError("cannot compare a type with a term");
    if (da.branches.size() != db.branches.size())
        throw TypeError("'" + a + "' and '" + b + "' have different parameters");
    for (size_t k = 0; k < da.branches.size(); ++k) {
        const CheckedBranch& x = da.branches[k];
        const CheckedBranch& y = db.branches[k];
        if (telescope_shape(x) != telescope_shape(y))
            throw TypeError("'" + a + "' and '" + b + "' have different parameters");
        if (render_type(x, Emit::Nf) != render_type(y, Emit::Nf)) return false;
        if (!da.is_type && render_term(x, Emit::Nf) != render_term(y, Emit::Nf)) return false;
    }
    return true;
}

bool cof_entails(std::string_view hyp, std::string_view goal) {
    auto h = surface::parse_cof(hyp);
    auto g = surface::parse_cof(goal);
    std::vector<std::string> dims = surface::free_dims(h);
    for (const auto& n : surface::free_dims(g))
        if (std::find(dims.begin(), dims.end(), n) == dims.end()) dims.push_back(n);
    Globals none;
    Ctx ctx = empty_ctx(none);
    for (const auto& n : dims) ctx = ctx.extend_dim(n);
    return entails(ctx.cx.cong(), ctx.eval_cof(check_cof(ctx, h)), ctx.eval_cof(check_cof(ctx, g)));
}

std::string format_error(const std::string& where, const std::exception& e) {
    std::string loc = where;
    if (auto* err = dynamic_cast<const Error*>(&e); err && err->span().line > 0) loc += ":" + to_string(err->span());
    return loc + ": " + kind_of(e) + ": " + e.what();
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kParseError;
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const KanError*>(&e)) return kInternalError;
    return kTypeError;
}

void run_repl(std::istream& in, std::ostream& out, bool prompt) {
    Session session;
    Ctx top = empty_ctx(session.globals);
    auto infer_expr = [&](std::string_view src) { return infer(top, surface::parse_expr(src)); };
    auto show_nf = [&](const TermPtr& t, const TyValue& a) {
        return surface::print(embed(reify(top.cx, a, top.eval(t))), top.names);
    };
    std::string line;
    for (;;) {
        if (prompt) out << "> " << std::flush;
        if (!std::getline(in, line)) break;
        std::string cmd = trim(line);
        if (cmd.empty() || cmd.rfind("--", 0) == 0) continue;
        try {
            if (cmd == ":q" || cmd == ":quit") break;
            if (cmd.rfind(":load ", 0) == 0) {
                std::string path = trim(cmd.substr(6));
                session.load(read_file(path));
                out << "loaded " << path << "\n";
            } else if (cmd.rfind(":t ", 0) == 0) {
                auto [t, a] = infer_expr(cmd.substr(3));
                out << top.show(a) << "\n";
            } else if (cmd.rfind(":nf ", 0) == 0) {
                auto [t, a] = infer_expr(cmd.substr(4));
                out << show_nf(t, a) << "\n";
            } else if (cmd.rfind(":eq ", 0) == 0) {
                std::string rest = cmd.substr(4);
                size_t semi = rest.find(';');
                if (semi == std::string::npos) throw ParseError(":eq expects two terms separated by ';'");
                auto [t, a] = infer_expr(rest.substr(0, semi));
                TermPtr u = check(top, surface::parse_expr(rest.substr(semi + 1)), a);
                out << (conv(top.cx, a, top.eval(t), top.eval(u)) ? "EQUAL" : "DISTINCT") << "\n";
            } else if (cmd.rfind(":cof ", 0) == 0) {
                std::string rest = cmd.substr(5);
                size_t turn = rest.find("|-");
                if (turn == std::string::npos) throw ParseError(":cof expects HYP |- GOAL");
                out << (cof_entails(rest.substr(0, turn), rest.substr(turn + 2)) ? "yes" : "no") << "\n";
            } else if (cmd[0] == ':') {
                out << "commands: :t E, :nf E, :eq E1 ; E2, :cof HYP |- GOAL, :load FILE, :q\n";
            } else if (cmd.rfind("def ", 0) == 0 || cmd.rfind("type ", 0) == 0) {
                session.load(cmd);
                out << "defined " << session.order.back() << "\n";
            } else {
                auto [t, a] = infer_expr(cmd);
                out << show_nf(t, a) << " : " << top.show(a) << "\n";
            }
        } catch (const std::exception& e) {
            out << format_error("<repl>", e) << "\n";
        }
    }
}

} // namespace cubical
