#include "cubical/surface.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cubical::surface {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok : unsigned char {
    Ident,
    Number,
    Proj1,
    Proj2,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Colon,
    Equals,
    Arrow,
    Backslash,
    Bar,
    Lt,
    Gt,
    At,
    Dot,
    Star,
    Meet,
    Join,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Proj1: return "'.1'";
    case Tok::Proj2: return "'.2'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::Backslash: return "'\\'";
    case Tok::Bar: return "'|'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::At: return "'@'";
    case Tok::Dot: return "'.'";
    case Tok::Star: return "'*'";
    case Tok::Meet: return "'/\\'";
    case Tok::Join: return "'\\/'";
    case Tok::End: return "end of input";
    }
    return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Span here{line, col};
        auto push = [&](Tok k, size_t len) {
            out.push_back({k, std::string(src.substr(i, len)), here});
            advance(len);
        };
        if (ident_start(c)) {
            size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            if (src.substr(i, j - i) == "ind" && src.substr(j, 3) == "-S1") j += 3;
            push(Tok::Ident, j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            push(Tok::Number, j - i);
            continue;
        }
        auto next = [&](char d) { return i + 1 < src.size() && src[i + 1] == d; };
        switch (c) {
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case '[': push(Tok::LBrack, 1); break;
        case ']': push(Tok::RBrack, 1); break;
        case ',': push(Tok::Comma, 1); break;
        case ':': push(Tok::Colon, 1); break;
        case '=': push(Tok::Equals, 1); break;
        case '|': push(Tok::Bar, 1); break;
        case '<': push(Tok::Lt, 1); break;
        case '>': push(Tok::Gt, 1); break;
        case '@': push(Tok::At, 1); break;
        case '*': push(Tok::Star, 1); break;
        case '.':
            if (next('1')) {
                push(Tok::Proj1, 2);
            } else if (next('2')) {
                push(Tok::Proj2, 2);
            } else {
                push(Tok::Dot, 1);
            }
            break;
        case '-':
            if (!next('>')) throw ParseError("unexpected character '-'", here);
            push(Tok::Arrow, 2);
            break;
        case '\\':
            if (next('/')) {
                push(Tok::Join, 2);
            } else {
                push(Tok::Backslash, 1);
            }
            break;
        case '/':
            if (!next('\\')) throw ParseError("unexpected character '/'", here);
            push(Tok::Meet, 2);
            break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", here);
        }
    }
    out.push_back({Tok::End, "", Span{line, col}});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

const char* const kKeywords[] = {"def",  "type",   "base", "S1",    "loop",   "unglue", "glue",
                                 "Glue", "coe",    "hcom", "ind-S1", "Path", "forall", "I"};

template <class T>
SPtr mk(T node, Span span) {
    return std::make_shared<SExpr>(SExpr{std::move(node), span});
}

template <class T>
SCofPtr mkcof(T node, Span span) {
    return std::make_shared<SCof>(SCof{std::move(node), span});
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    std::vector<Decl> file() {
        std::vector<Decl> out;
        while (!at(Tok::End)) out.push_back(decl());
        return out;
    }

    SPtr whole_expr() {
        SPtr e = expr();
        expect(Tok::End);
        return e;
    }

    SCofPtr whole_cof() {
        SCofPtr c = cof();
        expect(Tok::End);
        return c;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek(size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at(Tok k, size_t ahead = 0) const { return peek(ahead).kind == k; }
    bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }
    Span span() const { return peek().span; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(what + ", found " + found, t.span);
    }

    Token expect(Tok k) {
        if (!at(k)) fail(std::string("expected ") + describe(k));
        return toks_[pos_++];
    }

    void expect_word(std::string_view w) {
        if (!at_word(w)) fail("expected '" + std::string(w) + "'");
        ++pos_;
    }

    std::string name() {
        if (!at(Tok::Ident) || is_keyword(peek().text)) fail("expected a variable name");
        return toks_[pos_++].text;
    }

    bool at_name() const { return at(Tok::Ident) && !is_keyword(peek().text); }

    // Declarations ----------------------------------------------------------

    Decl decl() {
        Decl d;
        d.span = span();
        if (at_word("type")) {
            ++pos_;
            d.kind = Decl::Kind::Type;
            d.name = name();
            expect(Tok::Equals);
            d.body = expr();
        } else {
            expect_word("def");
            d.name = name();
            while (at(Tok::LParen) || at(Tok::LBrack)) params(d.params);
            if (at(Tok::Colon)) {
                ++pos_;
                d.type = expr();
            }
            expect(Tok::Equals);
            d.body = expr();
        }
        if (!at(Tok::End) && !at_word("def") && !at_word("type")) fail("expected a declaration");
        return d;
    }

    void params(std::vector<Param>& out) {
        Span sp = span();
        if (at(Tok::LBrack)) {
            ++pos_;
            Param p;
            p.kind = Param::Kind::Hyp;
            p.cof = cof();
            p.span = sp;
            expect(Tok::RBrack);
            out.push_back(std::move(p));
            return;
        }
        expect(Tok::LParen);
        std::vector<std::string> names;
        do names.push_back(name());
        while (at_name());
        expect(Tok::Colon);
        bool is_dim = at_word("I") && at(Tok::RParen, 1);
        SPtr type;
        if (is_dim) {
            ++pos_;
        } else {
            type = expr();
        }
        expect(Tok::RParen);
        for (auto& n : names) {
            Param p;
            p.kind = is_dim ? Param::Kind::Dim : Param::Kind::Term;
            p.name = n;
            p.type = type;
            p.span = sp;
            out.push_back(std::move(p));
        }
    }

    // Expressions -----------------------------------------------------------

    SPtr expr() {
        Span sp = span();
        if (at(Tok::Backslash)) {
            ++pos_;
            std::vector<std::string> names;
            do names.push_back(name());
            while (at_name());
            expect(Tok::Arrow);
            SPtr body = expr();
            for (auto it = names.rbegin(); it != names.rend(); ++it) body = mk(SExpr::Lam{*it, body}, sp);
            return body;
        }
        if (at(Tok::Lt)) {
            ++pos_;
            std::vector<std::string> names;
            do names.push_back(name());
            while (at_name());
            expect(Tok::Gt);
            SPtr body = expr();
            for (auto it = names.rbegin(); it != names.rend(); ++it) body = mk(SExpr::PLam{*it, body}, sp);
            return body;
        }
        SPtr lhs = sigma();
        if (at(Tok::Arrow)) {
            ++pos_;
            return mk(SExpr::Pi{"_", lhs, expr()}, sp);
        }
        return lhs;
    }

    struct Group {
        std::vector<std::string> names;
        SPtr type;
        Span span;
    };

    // Tries to read one or more binder groups followed by '->' or '*'.
    std::optional<std::vector<Group>> binder_groups() {
        size_t saved = pos_;
        std::vector<Group> groups;
        try {
            while (at(Tok::LParen) && at(Tok::Ident, 1)) {
                Group g;
                g.span = span();
                ++pos_;
                do g.names.push_back(name());
                while (at_name());
                expect(Tok::Colon);
                g.type = expr();
                expect(Tok::RParen);
                groups.push_back(std::move(g));
            }
        } catch (const ParseError&) {
            groups.clear();
        }
        if (groups.empty() || !(at(Tok::Arrow) || at(Tok::Star))) {
            pos_ = saved;
            return std::nullopt;
        }
        return groups;
    }

    SPtr sigma() {
        Span sp = span();
        if (auto groups = binder_groups()) {
            bool is_pi = at(Tok::Arrow);
            ++pos_;
            SPtr body = is_pi ? expr() : sigma();
            for (auto g = groups->rbegin(); g != groups->rend(); ++g) {
                for (auto n = g->names.rbegin(); n != g->names.rend(); ++n) {
                    body = is_pi ? mk(SExpr::Pi{*n, g->type, body}, g->span)
                                 : mk(SExpr::Sigma{*n, g->type, body}, g->span);
                }
            }
            return body;
        }
        SPtr lhs = app();
        if (at(Tok::Star)) {
            ++pos_;
            return mk(SExpr::Sigma{"_", lhs, sigma()}, sp);
        }
        return lhs;
    }

    bool at_atom() const {
        if (at(Tok::LParen) || at(Tok::LBrack)) return true;
        if (!at(Tok::Ident)) return false;
        const std::string& w = peek().text;
        return !is_keyword(w) || w == "base" || w == "S1";
    }

    SPtr app() {
        Span sp = span();
        SPtr head = keyword_form();
        if (!head) head = postfix();
        while (at_atom()) head = mk(SExpr::App{head, postfix()}, sp);
        return head;
    }

    SPtr keyword_form() {
        if (!at(Tok::Ident)) return nullptr;
        Span sp = span();
        const std::string w = peek().text;
        if (w == "loop") {
            ++pos_;
            return mk(SExpr::Loop{dim()}, sp);
        }
        if (w == "unglue") {
            ++pos_;
            return mk(SExpr::Unglue{postfix()}, sp);
        }
        if (w == "coe") {
            ++pos_;
            auto [n, line] = binder();
            SDim r = dim();
            SDim s = dim();
            return mk(SExpr::Coe{n, line, r, s, postfix()}, sp);
        }
        if (w == "hcom") {
            ++pos_;
            SDim r = dim();
            SDim s = dim();
            expect(Tok::LBrack);
            SCofPtr phi = cof();
            expect(Tok::RBrack);
            SPtr type = postfix();
            auto [n, tube] = binder();
            return mk(SExpr::HCom{r, s, phi, type, n, tube}, sp);
        }
        if (w == "ind-S1") {
            ++pos_;
            auto [x, motive] = binder();
            SPtr b = postfix();
            auto [i, l] = binder();
            return mk(SExpr::Ind{x, motive, b, i, l, postfix()}, sp);
        }
        if (w == "Path") {
            ++pos_;
            auto [n, line] = binder();
            SPtr a0 = postfix();
            return mk(SExpr::Path{n, line, a0, postfix()}, sp);
        }
        if (w == "Glue") {
            ++pos_;
            auto branches = system();
            return mk(SExpr::GlueTy{std::move(branches), postfix()}, sp);
        }
        if (w == "glue") {
            ++pos_;
            auto branches = system();
            return mk(SExpr::Glue{std::move(branches), postfix()}, sp);
        }
        return nullptr;
    }

    std::pair<std::string, SPtr> binder() {
        expect(Tok::LParen);
        std::string n = name();
        expect(Tok::Dot);
        SPtr body = expr();
        expect(Tok::RParen);
        return {n, body};
    }

    SPtr postfix() {
        SPtr e = atom();
        for (;;) {
            Span sp = span();
            if (at(Tok::Proj1)) {
                ++pos_;
                e = mk(SExpr::Fst{e}, sp);
            } else if (at(Tok::Proj2)) {
                ++pos_;
                e = mk(SExpr::Snd{e}, sp);
            } else if (at(Tok::At)) {
                ++pos_;
                e = mk(SExpr::PApp{e, dim()}, sp);
            } else {
                return e;
            }
        }
    }

    SPtr atom() {
        Span sp = span();
        if (at(Tok::LBrack)) return mk(SExpr::System{system()}, sp);
        if (at(Tok::LParen)) {
            ++pos_;
            SPtr e = expr();
            if (at(Tok::Comma)) {
                ++pos_;
                SPtr b = expr();
                expect(Tok::RParen);
                return mk(SExpr::Pair{e, b}, sp);
            }
            if (at(Tok::Colon)) {
                ++pos_;
                SPtr t = expr();
                expect(Tok::RParen);
                return mk(SExpr::Ann{e, t}, sp);
            }
            expect(Tok::RParen);
            return e;
        }
        if (at_word("base")) {
            ++pos_;
            return mk(SExpr::Base{}, sp);
        }
        if (at_word("S1")) {
            ++pos_;
            return mk(SExpr::S1{}, sp);
        }
        if (at_name()) return mk(SExpr::Var{name()}, sp);
        fail("expected an expression");
    }

    std::vector<SBranch> system() {
        expect(Tok::LBrack);
        std::vector<SBranch> out;
        if (at(Tok::RBrack)) {
            ++pos_;
            return out;
        }
        for (;;) {
            SCofPtr c = cof();
            expect(Tok::Arrow);
            out.push_back({c, expr()});
            if (at(Tok::RBrack)) break;
            expect(Tok::Bar);
        }
        ++pos_;
        return out;
    }

    // Dimensions and cofibrations -------------------------------------------

    SDim dim() {
        SDim d;
        d.span = span();
        if (at(Tok::Number)) {
            const std::string& t = peek().text;
            if (t != "0" && t != "1") fail("expected a dimension (0, 1 or a variable)");
            d.kind = t == "0" ? SDim::Kind::Zero : SDim::Kind::One;
            ++pos_;
            return d;
        }
        if (!at_name()) fail("expected a dimension (0, 1 or a variable)");
        d.kind = SDim::Kind::Name;
        d.name = name();
        return d;
    }

    SCofPtr cof() {
        Span sp = span();
        SCofPtr lhs = cof_and();
        while (at(Tok::Join)) {
            ++pos_;
            lhs = mkcof(SCof::Or{lhs, cof_and()}, sp);
        }
        return lhs;
    }

    SCofPtr cof_and() {
        Span sp = span();
        SCofPtr lhs = cof_atom();
        while (at(Tok::Meet)) {
            ++pos_;
            lhs = mkcof(SCof::And{lhs, cof_atom()}, sp);
        }
        return lhs;
    }

    SCofPtr cof_atom() {
        Span sp = span();
        if (at_word("forall")) {
            ++pos_;
            std::vector<std::string> names;
            do names.push_back(name());
            while (at_name());
            expect(Tok::Dot);
            SCofPtr body = cof();
            for (auto it = names.rbegin(); it != names.rend(); ++it) body = mkcof(SCof::Forall{*it, body}, sp);
            return body;
        }
        if (at(Tok::LParen)) {
            ++pos_;
            SCofPtr c = cof();
            expect(Tok::RParen);
            return c;
        }
        SDim l = dim();
        expect(Tok::Equals);
        return mkcof(SCof::Eq{l, dim()}, sp);
    }
};

// ---------------------------------------------------------------------------
// Printer

enum Prec : int { kExpr = 0, kSigma = 1, kApp = 2, kPost = 3, kAtom = 4 };

class Printer {
public:
    explicit Printer(std::vector<std::string> scope) : names_(std::move(scope)) {}

    std::string term(const TermPtr& t, int prec) {
        return std::visit([&](const auto& n) { return term_node(n, t, prec); }, t->node);
    }

    std::string type(const TypePtr& t, int prec) {
        return std::visit([&](const auto& n) { return type_node(n, prec); }, t->node);
    }

    std::string cof(const CofibPtr& c, int prec) {
        return std::visit(
            [&](const auto& n) -> std::string {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Cofib::Eq>) {
                    return dim(n.lhs) + " = " + dim(n.rhs);
                } else if constexpr (std::is_same_v<N, Cofib::And>) {
                    return paren(prec > 1, cof(n.lhs, 1) + " /\\ " + cof(n.rhs, 2));
                } else if constexpr (std::is_same_v<N, Cofib::Or>) {
                    return paren(prec > 0, cof(n.lhs, 0) + " \\/ " + cof(n.rhs, 1));
                } else {
                    std::string x = bind(n.name, "i");
                    std::string body = cof(n.body, 0);
                    unbind();
                    return paren(prec > 0, "forall " + x + ". " + body);
                }
            },
            c->node);
    }

private:
    std::vector<std::string> names_;

    static std::string paren(bool yes, std::string s) { return yes ? "(" + s + ")" : s; }

    const std::string& lookup(int index) const { return names_.at(names_.size() - 1 - index); }

    std::string dim(Dim d) const {
        if (d.kind == Dim::Kind::Zero) return "0";
        if (d.kind == Dim::Kind::One) return "1";
        return lookup(d.var);
    }

    std::string bind(const std::string& hint, const std::string& fallback, bool used = true) {
        if (!used && hint == "_") {
            names_.push_back(hint);
            return hint;
        }
        std::string base = hint.empty() || hint == "_" || is_keyword(hint) ? fallback : hint;
        std::string cand = base;
        for (int n = 1; is_keyword(cand) || std::find(names_.begin(), names_.end(), cand) != names_.end(); ++n)
            cand = base + std::to_string(n);
        names_.push_back(cand);
        return cand;
    }

    void unbind() { names_.pop_back(); }

    std::string binder(const std::string& hint, const std::string& fallback, bool used, const auto& body_fn) {
        std::string x = bind(hint, fallback, used);
        std::string body = body_fn();
        unbind();
        return "(" + x + ". " + body + ")";
    }

    template <class B, class F>
    std::string sys(const std::vector<SysBranch<B>>& bs, F&& body) {
        std::string out = "[";
        for (size_t k = 0; k < bs.size(); ++k) {
            if (k) out += " | ";
            out += cof(bs[k].cond, 0) + " -> " + body(bs[k].body);
        }
        return out + "]";
    }

    std::string sys_or_single(const CofibPtr& phi, const TermPtr& t) {
        if (auto* s = std::get_if<Term::System>(&t->node))
            return sys(s->branches, [&](const TermPtr& b) { return term(b, kExpr); });
        return "[" + cof(phi, 0) + " -> " + term(t, kExpr) + "]";
    }

    template <class N>
    std::string term_node(const N& n, const TermPtr& self, int prec) {
        (void)self;
        if constexpr (std::is_same_v<N, Term::Var>) {
            return lookup(n.index);
        } else if constexpr (std::is_same_v<N, Term::Lam>) {
            std::string x = bind(n.name, "x", occurs(n.body, 0));
            std::string body = term(n.body, kExpr);
            unbind();
            return paren(prec > kExpr, "\\" + x + " -> " + body);
        } else if constexpr (std::is_same_v<N, Term::App>) {
            return paren(prec > kApp, term(n.fn, kApp) + " " + term(n.arg, kPost));
        } else if constexpr (std::is_same_v<N, Term::Pair>) {
            return "(" + term(n.fst, kExpr) + ", " + term(n.snd, kExpr) + ")";
        } else if constexpr (std::is_same_v<N, Term::Fst>) {
            return paren(prec > kPost, term(n.pair, kPost) + " .1");
        } else if constexpr (std::is_same_v<N, Term::Snd>) {
            return paren(prec > kPost, term(n.pair, kPost) + " .2");
        } else if constexpr (std::is_same_v<N, Term::PLam>) {
            std::string x = bind(n.name, "i", occurs(n.body, 0));
            std::string body = term(n.body, kExpr);
            unbind();
            return paren(prec > kExpr, "<" + x + "> " + body);
        } else if constexpr (std::is_same_v<N, Term::PApp>) {
            return paren(prec > kPost, term(n.path, kPost) + " @ " + dim(n.r));
        } else if constexpr (std::is_same_v<N, Term::Englue>) {
            return paren(prec > kApp, "glue " + sys_or_single(n.phi, n.part) + " " + term(n.total, kPost));
        } else if constexpr (std::is_same_v<N, Term::Unglue>) {
            return paren(prec > kApp, "unglue " + term(n.glue, kPost));
        } else if constexpr (std::is_same_v<N, Term::Base>) {
            return "base";
        } else if constexpr (std::is_same_v<N, Term::Loop>) {
            return paren(prec > kApp, "loop " + dim(n.r));
        } else if constexpr (std::is_same_v<N, Term::IndS1>) {
            std::string motive = binder(n.motive_name, "x", occurs(n.motive, 0), [&] { return type(n.motive, kExpr); });
            std::string loop = binder(n.loop_name, "i", occurs(n.loop_case, 0), [&] { return term(n.loop_case, kExpr); });
            return paren(prec > kApp, "ind-S1 " + motive + " " + term(n.base_case, kPost) + " " + loop + " " +
                                          term(n.scrut, kPost));
        } else if constexpr (std::is_same_v<N, Term::HCom>) {
            std::string tube = binder(n.name, "i", occurs(n.tube, 0), [&] { return term(n.tube, kExpr); });
            return paren(prec > kApp, "hcom " + dim(n.r) + " " + dim(n.s) + " [" + cof(n.phi, 0) + "] " +
                                          type(n.type, kPost) + " " + tube);
        } else if constexpr (std::is_same_v<N, Term::Coe>) {
            std::string line = binder(n.name, "i", occurs(n.line, 0), [&] { return type(n.line, kExpr); });
            return paren(prec > kApp,
                         "coe " + line + " " + dim(n.r) + " " + dim(n.s) + " " + term(n.arg, kPost));
        } else {
            return sys(n.branches, [&](const TermPtr& b) { return term(b, kExpr); });
        }
    }

    template <class N>
    std::string type_node(const N& n, int prec) {
        if constexpr (std::is_same_v<N, TypeExpr::S1>) {
            return "S1";
        } else if constexpr (std::is_same_v<N, TypeExpr::Path>) {
            std::string line = binder(n.name, "i", occurs(n.line, 0), [&] { return type(n.line, kExpr); });
            return paren(prec > kApp, "Path " + line + " " + term(n.a0, kPost) + " " + term(n.a1, kPost));
        } else if constexpr (std::is_same_v<N, TypeExpr::Pi> || std::is_same_v<N, TypeExpr::Sigma>) {
            constexpr bool is_pi = std::is_same_v<N, TypeExpr::Pi>;
            const char* op = is_pi ? " -> " : " * ";
            int level = is_pi ? kExpr : kSigma;
            if (!occurs(n.cod, 0)) {
                std::string dom = type(n.dom, is_pi ? kSigma : kApp);
                names_.push_back("_");
                std::string cod = type(n.cod, level);
                unbind();
                return paren(prec > level, dom + op + cod);
            }
            std::string dom = type(n.dom, kExpr);
            std::string x = bind(n.name, "x");
            std::string cod = type(n.cod, level);
            unbind();
            return paren(prec > level, "(" + x + " : " + dom + ")" + op + cod);
        } else if constexpr (std::is_same_v<N, TypeExpr::Glue>) {
            std::string branches;
            auto* parts = std::get_if<TypeExpr::System>(&n.part->node);
            auto* equivs = std::get_if<Term::System>(&n.equiv->node);
            bool paired = parts && equivs && parts->branches.size() == equivs->branches.size() &&
                          !parts->branches.empty();
            if (paired) {
                CofibPtr joined = parts->branches[0].cond;
                for (size_t k = 0; k < parts->branches.size(); ++k) {
                    paired = paired && to_sexpr(parts->branches[k].cond) == to_sexpr(equivs->branches[k].cond);
                    if (k) joined = cof_or(joined, parts->branches[k].cond);
                }
                paired = paired && to_sexpr(joined) == to_sexpr(n.phi);
            }
            if (paired) {
                for (size_t k = 0; k < parts->branches.size(); ++k) {
                    if (k) branches += " | ";
                    branches += cof(parts->branches[k].cond, 0) + " -> (" + type(parts->branches[k].body, kExpr) +
                                ", " + term(equivs->branches[k].body, kExpr) + ")";
                }
            } else {
                branches = cof(n.phi, 0) + " -> (" + type(n.part, kExpr) + ", " + term(n.equiv, kExpr) + ")";
            }
            return paren(prec > kApp, "Glue [" + branches + "] " + type(n.base, kPost));
        } else {
            return sys(n.branches, [&](const TypePtr& b) { return type(b, kExpr); });
        }
    }
};

void collect_dims(const SCofPtr& c, std::vector<std::string>& bound, std::vector<std::string>& out) {
    auto add = [&](const SDim& d) {
        if (d.kind != SDim::Kind::Name) return;
        if (std::find(bound.begin(), bound.end(), d.name) != bound.end()) return;
        if (std::find(out.begin(), out.end(), d.name) == out.end()) out.push_back(d.name);
    };
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, SCof::Eq>) {
                add(n.lhs);
                add(n.rhs);
            } else if constexpr (std::is_same_v<N, SCof::Forall>) {
                bound.push_back(n.name);
                collect_dims(n.body, bound, out);
                bound.pop_back();
            } else {
                collect_dims(n.lhs, bound, out);
                collect_dims(n.rhs, bound, out);
            }
        },
        c->node);
}

} // namespace

bool is_keyword(std::string_view word) {
    return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

std::vector<Decl> parse_file(std::string_view src) { return Parser(src).file(); }
SPtr parse_expr(std::string_view src) { return Parser(src).whole_expr(); }
SCofPtr parse_cof(std::string_view src) { return Parser(src).whole_cof(); }

std::vector<std::string> free_dims(const SCofPtr& c) {
    std::vector<std::string> bound;
    std::vector<std::string> out;
    collect_dims(c, bound, out);
    return out;
}

std::string print(const TermPtr& t, const std::vector<std::string>& scope) { return Printer(scope).term(t, kExpr); }
std::string print(const TypePtr& t, const std::vector<std::string>& scope) { return Printer(scope).type(t, kExpr); }
std::string print(const CofibPtr& c, const std::vector<std::string>& scope) { return Printer(scope).cof(c, 0); }

} // namespace cubical::surface
