/*
 *  Copyright (C) 2026  The disjlog authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "disjlog/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>

namespace disjlog {

std::string ParseDiagnostic::to_string() const {
    std::ostringstream out;
    out << (severity == Severity::Error ? "error" : "warning") << " at " << line << ":"
        << column << ": " << message;
    if (!fragment.empty())
        out << " near '" << fragment << "'";
    return out.str();
}

namespace {

enum class Tok {
    Ident,      // lowercase-leading identifier (also `v` and `not`)
    Variable,   // uppercase or '_'-leading identifier; bare '_' is anonymous
    Integer,
    String,
    HashInt,    // #int
    HashSucc,   // #succ
    HashMaxint, // #maxint
    Dot, Comma, LParen, RParen, LBracket, RBracket,
    If,         // :-
    Wif,        // :~
    Colon, Pipe, Minus, Plus, Star,
    Eq, Neq, Lt, Gt, Leq, Geq,
    End, Bad,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int64_t value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                advance();
            t.kind = Tok::Integer;
            t.text = std::string(text_.substr(start, pos_ - start));
            if (t.text.size() > 18) {
                t.kind = Tok::Bad;
                return t;
            }
            t.value = std::strtoll(t.text.c_str(), nullptr, 10);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                advance();
            t.text = std::string(text_.substr(start, pos_ - start));
            t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::Variable
                                                                               : Tok::Ident;
            return t;
        }
        if (c == '"') {
            advance();
            size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n')
                advance();
            if (pos_ >= text_.size() || text_[pos_] != '"') {
                t.kind = Tok::Bad;
                t.text = "unterminated string";
                return t;
            }
            t.kind = Tok::String;
            t.text = std::string(text_.substr(start, pos_ - start));
            advance(); // closing quote
            return t;
        }
        if (c == '#') {
            size_t start = pos_;
            advance();
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                advance();
            t.text = std::string(text_.substr(start, pos_ - start));
            if (t.text == "#int") t.kind = Tok::HashInt;
            else if (t.text == "#succ") t.kind = Tok::HashSucc;
            else if (t.text == "#maxint") t.kind = Tok::HashMaxint;
            else t.kind = Tok::Bad;
            return t;
        }
        advance();
        switch (c) {
        case '.': t.kind = Tok::Dot; return t;
        case ',': t.kind = Tok::Comma; return t;
        case '(': t.kind = Tok::LParen; return t;
        case ')': t.kind = Tok::RParen; return t;
        case '[': t.kind = Tok::LBracket; return t;
        case ']': t.kind = Tok::RBracket; return t;
        case '|': t.kind = Tok::Pipe; return t;
        case '-': t.kind = Tok::Minus; return t;
        case '+': t.kind = Tok::Plus; return t;
        case '*': t.kind = Tok::Star; return t;
        case '=': t.kind = Tok::Eq; return t;
        case ':':
            if (pos_ < text_.size() && text_[pos_] == '-') { advance(); t.kind = Tok::If; }
            else if (pos_ < text_.size() && text_[pos_] == '~') { advance(); t.kind = Tok::Wif; }
            else t.kind = Tok::Colon;
            return t;
        case '<':
            if (pos_ < text_.size() && text_[pos_] == '=') { advance(); t.kind = Tok::Leq; }
            else if (pos_ < text_.size() && text_[pos_] == '>') { advance(); t.kind = Tok::Neq; }
            else t.kind = Tok::Lt;
            return t;
        case '>':
            if (pos_ < text_.size() && text_[pos_] == '=') { advance(); t.kind = Tok::Geq; }
            else t.kind = Tok::Gt;
            return t;
        default:
            t.kind = Tok::Bad;
            t.text = std::string(1, c);
            return t;
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

const char* comparison_name(Tok k) {
    switch (k) {
    case Tok::Eq: return "=";
    case Tok::Neq: return "<>";
    case Tok::Lt: return "<";
    case Tok::Gt: return ">";
    case Tok::Leq: return "<=";
    case Tok::Geq: return ">=";
    default: return nullptr;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    ParseResult run() {
        while (cur_.kind != Tok::End) {
            if (!statement())
                recover();
        }
        check_arities();
        return std::move(result_);
    }

private:
    void shift() {
        cur_ = ahead_valid_ ? ahead_ : lexer_.next();
        ahead_valid_ = false;
    }

    const Token& peek() {
        if (!ahead_valid_) {
            ahead_ = lexer_.next();
            ahead_valid_ = true;
        }
        return ahead_;
    }

    void error(const std::string& msg) {
        ParseDiagnostic d;
        d.severity = ParseDiagnostic::Severity::Error;
        d.line = cur_.line;
        d.column = cur_.column;
        d.message = msg;
        d.fragment = cur_.text;
        result_.diagnostics.push_back(std::move(d));
    }

    void error_at(const Token& at, const std::string& msg) {
        ParseDiagnostic d;
        d.severity = ParseDiagnostic::Severity::Error;
        d.line = at.line;
        d.column = at.column;
        d.message = msg;
        d.fragment = at.text;
        result_.diagnostics.push_back(std::move(d));
    }

    void warn(const std::string& msg, const Token& at) {
        ParseDiagnostic d;
        d.severity = ParseDiagnostic::Severity::Warning;
        d.line = at.line;
        d.column = at.column;
        d.message = msg;
        result_.diagnostics.push_back(std::move(d));
    }

    // Skips to the statement terminator so later statements still parse.
    void recover() {
        while (cur_.kind != Tok::Dot && cur_.kind != Tok::End)
            shift();
        if (cur_.kind == Tok::Dot)
            shift();
    }

    bool expect(Tok kind, const char* what) {
        if (cur_.kind != kind) {
            error(std::string("expected ") + what);
            return false;
        }
        shift();
        return true;
    }

    bool statement() {
        statement_start_ = cur_;
        if (cur_.kind == Tok::If) {
            shift();
            Rule r;
            if (!body_until_dot(r.body))
                return false;
            return finish_rule(std::move(r));
        }
        if (cur_.kind == Tok::Wif) {
            shift();
            WeakConstraint wc;
            if (!body_until_dot(wc.body))
                return false;
            if (!expect(Tok::Dot, "'.'"))
                return false;
            if (cur_.kind == Tok::LBracket && !weight_level(wc))
                return false;
            return finish_weak(std::move(wc));
        }
        Rule r;
        if (!head(r.head))
            return false;
        if (cur_.kind == Tok::If) {
            shift();
            if (!body_until_dot(r.body))
                return false;
        }
        return finish_rule(std::move(r));
    }

    bool finish_rule(Rule r) {
        if (!expect(Tok::Dot, "'.'"))
            return false;
        desugar_anonymous(r);
        for (const std::string& v : check_safety(r))
            error_at(statement_start_, "unsafe variable " + v + " in rule " + serialize(r));
        note_predicates(r);
        result_.program.rules.push_back(std::move(r));
        return true;
    }

    bool finish_weak(WeakConstraint wc) {
        desugar_anonymous(wc);
        for (const std::string& v : check_safety(wc))
            error_at(statement_start_,
                     "unsafe variable " + v + " in weak constraint " + serialize(wc));
        for (const NafLiteral& l : wc.body)
            note_predicate(l.literal);
        result_.program.weak_constraints.push_back(std::move(wc));
        return true;
    }

    bool head(std::vector<ClassicalLiteral>& out) {
        while (true) {
            ClassicalLiteral lit;
            if (!classical_literal(lit))
                return false;
            if (lit.atom.is_builtin()) {
                error("built-in predicate in rule head");
                return false;
            }
            out.push_back(std::move(lit));
            if (cur_.kind == Tok::Pipe || (cur_.kind == Tok::Ident && cur_.text == "v")) {
                shift();
                continue;
            }
            return true;
        }
    }

    bool body_until_dot(std::vector<NafLiteral>& out) {
        if (cur_.kind == Tok::Dot)
            return true; // empty body
        while (true) {
            NafLiteral lit;
            if (!body_literal(lit))
                return false;
            out.push_back(std::move(lit));
            if (cur_.kind == Tok::Comma) {
                shift();
                continue;
            }
            return true;
        }
    }

    bool body_literal(NafLiteral& out) {
        if (cur_.kind == Tok::Ident && cur_.text == "not") {
            out.naf_negated = true;
            shift();
        }
        return body_classical(out.literal);
    }

    // A body element: a (strongly negated) atom, a prefix built-in, or an
    // infix comparison between two terms.
    bool body_classical(ClassicalLiteral& out) {
        if (cur_.kind == Tok::Minus) {
            shift();
            if (!plain_atom(out.atom))
                return false;
            out.strongly_negated = true;
            return true;
        }
        if (cur_.kind == Tok::HashInt || cur_.kind == Tok::HashSucc || cur_.kind == Tok::Plus ||
            cur_.kind == Tok::Star) {
            return builtin_prefix_atom(out.atom);
        }
        // Terms that can only start a comparison.
        if (cur_.kind == Tok::Variable || cur_.kind == Tok::Integer ||
            cur_.kind == Tok::String || cur_.kind == Tok::HashMaxint) {
            Term lhs;
            if (!term(lhs))
                return false;
            return comparison(std::move(lhs), out.atom);
        }
        if (cur_.kind == Tok::Ident) {
            // `a < X` reads the identifier as a 0-ary symbolic term.
            if (comparison_name(peek().kind) != nullptr) {
                Term lhs = Term::symbol(cur_.text);
                shift();
                return comparison(std::move(lhs), out.atom);
            }
            return plain_atom(out.atom);
        }
        error("expected a literal");
        return false;
    }

    bool comparison(Term lhs, Atom& out) {
        const char* op = comparison_name(cur_.kind);
        if (!op) {
            error("expected comparison operator");
            return false;
        }
        shift();
        Term rhs;
        if (!term(rhs))
            return false;
        out.predicate = op;
        out.args = {std::move(lhs), std::move(rhs)};
        return true;
    }

    bool classical_literal(ClassicalLiteral& out) {
        if (cur_.kind == Tok::Minus) {
            shift();
            out.strongly_negated = true;
        }
        return plain_atom(out.atom);
    }

    bool plain_atom(Atom& out) {
        if (cur_.kind != Tok::Ident) {
            error("expected predicate name");
            return false;
        }
        if (cur_.text == "not") {
            error("'not' is reserved");
            return false;
        }
        out.predicate = cur_.text;
        shift();
        if (cur_.kind == Tok::LParen) {
            shift();
            while (true) {
                Term t;
                if (!term(t))
                    return false;
                out.args.push_back(std::move(t));
                if (cur_.kind == Tok::Comma) {
                    shift();
                    continue;
                }
                break;
            }
            if (!expect(Tok::RParen, "')'"))
                return false;
        }
        return true;
    }

    bool builtin_prefix_atom(Atom& out) {
        size_t arity;
        switch (cur_.kind) {
        case Tok::HashInt: out.predicate = "#int"; arity = 1; break;
        case Tok::HashSucc: out.predicate = "#succ"; arity = 2; break;
        case Tok::Plus: out.predicate = "+"; arity = 3; break;
        default: out.predicate = "*"; arity = 3; break;
        }
        shift();
        if (!expect(Tok::LParen, "'('"))
            return false;
        for (size_t i = 0; i < arity; ++i) {
            if (i && !expect(Tok::Comma, "','"))
                return false;
            Term t;
            if (!term(t))
                return false;
            out.args.push_back(std::move(t));
        }
        return expect(Tok::RParen, "')'");
    }

    bool term(Term& out) {
        switch (cur_.kind) {
        case Tok::Variable:
            out = Term::variable(cur_.text);
            shift();
            return true;
        case Tok::Ident:
            out = Term::symbol(cur_.text);
            shift();
            return true;
        case Tok::Integer:
            out = Term::integer(cur_.value);
            shift();
            return true;
        case Tok::String:
            out = Term::string(cur_.text);
            shift();
            return true;
        case Tok::HashMaxint:
            out = Term::maxint();
            shift();
            return true;
        default:
            error("expected a term");
            return false;
        }
    }

    // [w : l] with either part optional; omitted parts default to 1.
    bool weight_level(WeakConstraint& wc) {
        shift(); // '['
        if (cur_.kind != Tok::Colon && cur_.kind != Tok::RBracket) {
            if (!term(wc.weight))
                return false;
        }
        if (cur_.kind == Tok::Colon) {
            shift();
            if (cur_.kind != Tok::RBracket && !term(wc.level))
                return false;
        }
        return expect(Tok::RBracket, "']'");
    }

    // Each '_' becomes a fresh ordinary variable, one per occurrence.
    template <typename Statement>
    void desugar_anonymous(Statement& st) {
        std::set<std::string> used;
        for (const std::string& v : variables_of(st))
            used.insert(v);
        int counter = 0;
        auto fresh = [&] {
            std::string name;
            do {
                name = "_A" + std::to_string(++counter);
            } while (used.count(name));
            used.insert(name);
            return Term::variable(name);
        };
        auto walk_atom = [&](Atom& a) {
            for (Term& t : a.args)
                if (t.is_variable() && t.text() == "_")
                    t = fresh();
        };
        if constexpr (std::is_same_v<Statement, Rule>) {
            for (ClassicalLiteral& l : st.head)
                walk_atom(l.atom);
        }
        for (NafLiteral& l : st.body)
            walk_atom(l.literal.atom);
    }

    void note_predicate(const ClassicalLiteral& l) {
        if (l.atom.is_builtin())
            return;
        arities_[l.atom.predicate].insert({l.atom.arity(), statement_start_});
    }

    void note_predicates(const Rule& r) {
        for (const ClassicalLiteral& l : r.head)
            note_predicate(l);
        for (const NafLiteral& l : r.body)
            note_predicate(l.literal);
    }

    void check_arities() {
        for (const auto& [name, uses] : arities_) {
            if (uses.size() > 1) {
                const auto& second = *std::next(uses.begin());
                warn("predicate " + name + " used with more than one arity", second.second);
            }
        }
    }

    Lexer lexer_;
    Token cur_;
    Token ahead_;
    bool ahead_valid_ = false;
    Token statement_start_;
    ParseResult result_;
    std::map<std::string, std::map<size_t, Token>> arities_;
};

bool binds(const NafLiteral& l) {
    return !l.naf_negated && !is_comparative_builtin(l.literal.atom.predicate);
}

std::vector<std::string> unsafe_variables(const std::vector<std::string>& vars,
                                          const std::vector<NafLiteral>& body) {
    std::set<std::string> bound;
    for (const NafLiteral& l : body)
        if (binds(l))
            for (const Term& t : l.literal.atom.args)
                if (t.is_variable())
                    bound.insert(t.text());
    std::vector<std::string> out;
    for (const std::string& v : vars)
        if (!bound.count(v))
            out.push_back(v);
    return out;
}

} // namespace

ParseResult parse_program(std::string_view text) {
    return Parser(text).run();
}

std::vector<std::string> check_safety(const Rule& r) {
    return unsafe_variables(variables_of(r), r.body);
}

std::vector<std::string> check_safety(const WeakConstraint& wc) {
    return unsafe_variables(variables_of(wc), wc.body);
}

std::string serialize(const Rule& r) {
    std::string out;
    for (size_t i = 0; i < r.head.size(); ++i) {
        if (i) out += " v ";
        out += r.head[i].to_string();
    }
    if (!r.body.empty() || r.head.empty()) {
        out += r.head.empty() ? ":- " : " :- ";
        for (size_t i = 0; i < r.body.size(); ++i) {
            if (i) out += ", ";
            out += r.body[i].to_string();
        }
    }
    out += ".";
    return out;
}

std::string serialize(const WeakConstraint& wc) {
    std::string out = ":~ ";
    for (size_t i = 0; i < wc.body.size(); ++i) {
        if (i) out += ", ";
        out += wc.body[i].to_string();
    }
    out += ". [" + wc.weight.to_string() + ":" + wc.level.to_string() + "]";
    return out;
}

std::string serialize(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules)
        out += serialize(r) + "\n";
    for (const WeakConstraint& wc : p.weak_constraints)
        out += serialize(wc) + "\n";
    return out;
}

} // namespace disjlog
