#include "fuzzymin/syntax.hpp"

#include <cctype>
#include <vector>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

namespace {

enum class Tok { Degree, Name, LParen, RParen, LBrace, RBrace, Amp, Bar, Arrow, Minus, Semi, Star, Query, Dot, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < s.size() && (is_digit(s[i]) || s[i] == '.' || s[i] == '/')) ++i;
            out.push_back({Tok::Degree, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (is_name_start(c)) {
            while (i < s.size() && is_name_char(s[i])) ++i;
            out.push_back({Tok::Name, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '&': kind = Tok::Amp; break;
        case '|': kind = Tok::Bar; break;
        case ';': kind = Tok::Semi; break;
        case '*': kind = Tok::Star; break;
        case '?': kind = Tok::Query; break;
        case '.': kind = Tok::Dot; break;
        case '-':
            if (i + 1 < s.size() && s[i + 1] == '>') {
                out.push_back({Tok::Arrow, "->", start});
                i += 2;
                continue;
            }
            kind = Tok::Minus;
            break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

bool is_keyword(const std::string &s) { return s == "tri" || s == "not" || s == "all" || s == "some"; }

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    ConceptPtr whole_concept() {
        auto c = implies();
        expect_end();
        return c;
    }

    RolePtr whole_role() {
        auto r = role_union();
        expect_end();
        return r;
    }

private:
    const Token &peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(const char *w) const { return at(Tok::Name) && peek().text == w; }
    const Token &advance() { return toks_[pos_++]; }

    void expect(Tok k, const char *what) {
        if (!at(k)) fail(std::string("expected ") + what);
        ++pos_;
    }

    void expect_end() {
        if (!at(Tok::End)) fail("unexpected '" + peek().text + "'");
    }

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(at(Tok::End) ? msg + ", found end of input" : msg, peek().pos);
    }

    ConceptPtr implies() {
        auto left = disjunction();
        if (at(Tok::Arrow)) {
            ++pos_;
            return make_implies(left, implies());
        }
        return left;
    }

    ConceptPtr disjunction() {
        auto c = conjunction();
        while (at(Tok::Bar)) {
            ++pos_;
            c = make_or(c, conjunction());
        }
        return c;
    }

    ConceptPtr conjunction() {
        auto c = unary();
        while (at(Tok::Amp)) {
            ++pos_;
            c = make_and(c, unary());
        }
        return c;
    }

    ConceptPtr unary() {
        if (at_word("tri")) {
            ++pos_;
            return make_baaz(unary());
        }
        if (at_word("not")) {
            ++pos_;
            return make_not(unary());
        }
        if (at_word("all") || at_word("some")) {
            const bool all = advance().text == "all";
            auto r = role_union();
            expect(Tok::Dot, "'.' after the quantified role");
            auto body = implies();
            return all ? make_forall(r, body) : make_exists(r, body);
        }
        return concept_atom();
    }

    ConceptPtr concept_atom() {
        if (at(Tok::Degree)) {
            const Token &t = advance();
            try {
                return make_constant(Degree::parse(t.text));
            } catch (const UsageError &e) {
                throw ParseError("bad degree '" + t.text + "'", t.pos);
            }
        }
        if (at(Tok::Name)) {
            if (is_keyword(peek().text)) fail("unexpected keyword '" + peek().text + "'");
            return make_atomic(advance().text);
        }
        if (at(Tok::LBrace)) {
            ++pos_;
            if (!at(Tok::Name) || is_keyword(peek().text)) fail("expected an individual name");
            auto c = make_nominal(advance().text);
            expect(Tok::RBrace, "'}'");
            return c;
        }
        if (at(Tok::LParen)) {
            ++pos_;
            auto c = implies();
            expect(Tok::RParen, "')'");
            return c;
        }
        fail("expected a concept");
    }

    RolePtr role_union() {
        auto r = role_compose();
        while (at(Tok::Bar)) {
            ++pos_;
            r = make_union(r, role_compose());
        }
        return r;
    }

    RolePtr role_compose() {
        auto r = role_postfix();
        while (at(Tok::Semi)) {
            ++pos_;
            r = make_compose(r, role_postfix());
        }
        return r;
    }

    RolePtr role_postfix() {
        auto r = role_atom();
        for (;;) {
            if (at(Tok::Minus)) {
                ++pos_;
                r = make_inverse(r);
            } else if (at(Tok::Star)) {
                ++pos_;
                r = make_star(r);
            } else {
                return r;
            }
        }
    }

    RolePtr role_atom() {
        // A concept atom followed by '?' is a test; try that reading first.
        const std::size_t save = pos_;
        if (at(Tok::Degree) || at(Tok::LBrace) || at(Tok::LParen) || (at(Tok::Name) && peek(1).kind == Tok::Query)) {
            try {
                auto c = concept_atom();
                if (at(Tok::Query)) {
                    ++pos_;
                    return make_test(c);
                }
            } catch (const ParseError &) {
                if (!at_paren(save)) throw;
            }
            if (!at_paren(save)) fail("expected '?' after a test concept");
            pos_ = save;
        }
        if (at(Tok::LParen)) {
            ++pos_;
            auto r = role_union();
            expect(Tok::RParen, "')'");
            return r;
        }
        if (at(Tok::Name)) {
            if (is_keyword(peek().text)) fail("unexpected keyword '" + peek().text + "'");
            const Token &t = advance();
            return t.text == "U" ? make_universal() : make_role(t.text);
        }
        fail("expected a role");
    }

    bool at_paren(std::size_t index) const { return toks_[index].kind == Tok::LParen; }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Binding strength for concept printing.
int strength(const ConceptExpr &c) {
    switch (c.kind) {
    case ConceptKind::Implies: return 1;
    case ConceptKind::Or: return 2;
    case ConceptKind::And: return 3;
    case ConceptKind::Baaz:
    case ConceptKind::Not: return 4;
    case ConceptKind::Forall:
    case ConceptKind::Exists: return 0;
    default: return 5;
    }
}

int strength(const RoleExpr &r) {
    switch (r.kind) {
    case RoleKind::Union: return 1;
    case RoleKind::Compose: return 2;
    case RoleKind::Inverse:
    case RoleKind::Star:
    case RoleKind::Test: return 3;
    default: return 4;
    }
}

void print(const ConceptExpr &c, std::string &out);
void print(const RoleExpr &r, std::string &out);

// Quantifiers always get parentheses as operands; their body would
// otherwise swallow whatever follows.
void operand(const ConceptExpr &c, int min_strength, std::string &out) {
    const int s = strength(c);
    if (s == 0 || s < min_strength) {
        out += '(';
        print(c, out);
        out += ')';
    } else {
        print(c, out);
    }
}

void operand(const RoleExpr &r, int min_strength, std::string &out) {
    if (strength(r) < min_strength) {
        out += '(';
        print(r, out);
        out += ')';
    } else {
        print(r, out);
    }
}

void print(const ConceptExpr &c, std::string &out) {
    switch (c.kind) {
    case ConceptKind::Constant: out += c.degree.to_string(); return;
    case ConceptKind::Atomic: out += c.name; return;
    case ConceptKind::Nominal: out += "{" + c.name + "}"; return;
    case ConceptKind::Baaz:
    case ConceptKind::Not:
        out += c.kind == ConceptKind::Baaz ? "tri " : "not ";
        operand(*c.left, 4, out);
        return;
    case ConceptKind::And:
    case ConceptKind::Or: {
        const int s = strength(c);
        operand(*c.left, s, out);
        out += c.kind == ConceptKind::And ? " & " : " | ";
        operand(*c.right, s + 1, out);
        return;
    }
    case ConceptKind::Implies:
        operand(*c.left, 2, out);
        out += " -> ";
        operand(*c.right, 1, out);
        return;
    case ConceptKind::Forall:
    case ConceptKind::Exists: {
        out += c.kind == ConceptKind::Forall ? "all " : "some ";
        operand(*c.role, 3, out);
        out += " . ";
        const int s = strength(*c.left);
        if (s >= 4 || s == 0) {
            print(*c.left, out);
        } else {
            out += '(';
            print(*c.left, out);
            out += ')';
        }
        return;
    }
    }
}

void print(const RoleExpr &r, std::string &out) {
    switch (r.kind) {
    case RoleKind::Atomic: out += r.name; return;
    case RoleKind::Universal: out += "U"; return;
    case RoleKind::Inverse:
    case RoleKind::Star:
        operand(*r.left, 3, out);
        out += r.kind == RoleKind::Inverse ? "-" : "*";
        return;
    case RoleKind::Test:
        if (strength(*r.test) == 5) {
            print(*r.test, out);
        } else {
            out += '(';
            print(*r.test, out);
            out += ')';
        }
        out += '?';
        return;
    case RoleKind::Compose:
    case RoleKind::Union: {
        const int s = strength(r);
        operand(*r.left, s, out);
        out += r.kind == RoleKind::Compose ? " ; " : " | ";
        operand(*r.right, s + 1, out);
        return;
    }
    }
}

} // namespace

ConceptPtr parse_concept(std::string_view text, FeatureSet phi) {
    auto c = Parser(text).whole_concept();
    require_features(*c, phi);
    return c;
}

RolePtr parse_role(std::string_view text, FeatureSet phi) {
    auto r = Parser(text).whole_role();
    require_features(*r, phi);
    return r;
}

std::string print_concept(const ConceptExpr &c) {
    std::string out;
    print(c, out);
    return out;
}

std::string print_role(const RoleExpr &r) {
    std::string out;
    print(r, out);
    return out;
}

} // namespace fuzzymin
