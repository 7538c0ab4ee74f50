#include "dsl_internal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace amalg::dsl {

namespace detail {

namespace {

Type type_from_word(std::string_view w)
{
    static const std::map<std::string_view, Type> words{
        {"ring", Type::ring},       {"ideal", Type::ideal},     {"hom", Type::hom},
        {"module", Type::module},   {"subring", Type::subring}, {"amalgam", Type::amalgam},
        {"pullback", Type::pullback}, {"int", Type::integer},   {"elem", Type::elem},
    };
    if (w == "ring->ring")
        return Type::arrow;
    return words.at(w);
}

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

Shape make_shape(std::string_view text, Type result)
{
    Shape s;
    s.text = std::string(text);
    s.result = result;
    const auto open = text.find('(');
    s.name = std::string(text.substr(0, open));
    const std::string_view body = text.substr(open + 1, text.size() - open - 2);
    std::size_t start = 0;
    while (true) {
        const auto semi = body.find(';', start);
        const std::string_view sec = body.substr(start, semi == std::string_view::npos ? body.size() - start : semi - start);
        std::vector<Param> params;
        std::size_t p = 0;
        while (p <= sec.size()) {
            const auto comma = sec.find(',', p);
            std::string word = trim(sec.substr(p, comma == std::string_view::npos ? sec.size() - p : comma - p));
            if (!word.empty()) {
                Param param{Type::ring, false};
                if (word.back() == '*') {
                    param.repeated = true;
                    word.pop_back();
                }
                param.type = type_from_word(word);
                params.push_back(param);
            }
            if (comma == std::string_view::npos)
                break;
            p = comma + 1;
        }
        s.sections.push_back(std::move(params));
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return s;
}

std::vector<Shape> make_table(std::initializer_list<std::pair<const char*, Type>> rows)
{
    std::vector<Shape> table;
    for (const auto& [text, result] : rows)
        table.push_back(make_shape(text, result));
    return table;
}

} // namespace

const std::vector<Shape>& builtin_table()
{
    static const std::vector<Shape> table = make_table({
        {"zmod(int)", Type::ring},
        {"product(ring, ring*)", Type::ring},
        {"trunc(ring, int, int)", Type::ring},
        {"gf(int, int)", Type::ring},
        {"quotient(ideal)", Type::ring},
        {"table(int; int*; int*)", Type::ring},
        {"nagata(module)", Type::ring},
        {"dorroh(ring)", Type::ring},
        {"as_ring(subring)", Type::ring},
        {"as_ring(ideal)", Type::ring},
        {"carrier(amalgam)", Type::ring},
        {"carrier(pullback)", Type::ring},
        {"localize(ring; elem*)", Type::ring},
        {"gen(ring; elem*)", Type::ideal},
        {"nil(ring)", Type::ideal},
        {"kernel(hom)", Type::ideal},
        {"whole(ring)", Type::ideal},
        {"zero(ring)", Type::ideal},
        {"isum(ideal, ideal)", Type::ideal},
        {"iprod(ideal, ideal)", Type::ideal},
        {"meet(ideal, ideal)", Type::ideal},
        {"preimage(hom, ideal)", Type::ideal},
        {"map(ring->ring; elem*)", Type::hom},
        {"id(ring)", Type::hom},
        {"canonical(ring->ring)", Type::hom},
        {"proj(ideal)", Type::hom},
        {"compose(hom, hom)", Type::hom},
        {"diag(hom, int)", Type::hom},
        {"incl(subring)", Type::hom},
        {"iota(amalgam)", Type::hom},
        {"pa(amalgam)", Type::hom},
        {"pb(amalgam)", Type::hom},
        {"via(hom, ideal)", Type::module},
        {"regular(ring)", Type::module},
        {"zero_module(ring)", Type::module},
        {"zmodule(ring, int)", Type::module},
        {"subring(ring; elem*)", Type::subring},
        {"subrng(ring; elem*)", Type::subring},
        {"full(ring)", Type::subring},
        {"image(hom)", Type::subring},
        {"bdiamond(hom, ideal)", Type::subring},
        {"amalg(hom, ideal)", Type::amalgam},
        {"dup(ring, ideal)", Type::amalgam},
        {"dup(ideal)", Type::amalgam},
        {"namalg(hom, ideal, int)", Type::amalgam},
        {"pullback(hom, hom)", Type::pullback},
    });
    return table;
}

const std::vector<Shape>& check_table()
{
    static const std::vector<Shape> table = make_table({
        {"f_join_iso(amalgam)", Type::amalgam},
        {"graph_inclusion(amalgam)", Type::amalgam},
        {"iter_iso(hom, ideal, int)", Type::amalgam},
        {"pull_identity(amalgam)", Type::amalgam},
        {"alt_pullback(amalgam)", Type::amalgam},
        {"factor(hom, hom, hom)", Type::amalgam},
        {"fibret(amalgam)", Type::amalgam},
        {"fibret(hom, hom)", Type::amalgam},
        {"prid(pullback)", Type::amalgam},
        {"kernel_identity(pullback)", Type::amalgam},
        {"canonical_isos(amalgam)", Type::amalgam},
        {"canonical_isos(amalgam, ideal)", Type::amalgam},
        {"b_diamond(hom, ideal)", Type::amalgam},
        {"domain_criterion(amalgam)", Type::amalgam},
        {"reduced_criterion(amalgam)", Type::amalgam},
        {"same_amalgam(hom, hom, ideal)", Type::amalgam},
        {"split_sequence(module, ring)", Type::amalgam},
        {"dorroh(ring)", Type::amalgam},
        {"idealization(module)", Type::amalgam},
        {"nagata_as_amalgam(module)", Type::amalgam},
        {"d_plus_m(subring, ideal, ideal*)", Type::amalgam},
        {"cpi_prime(ideal)", Type::amalgam},
        {"cpi_ideal(ideal)", Type::amalgam},
        {"trunc_poly_amalgam(subring, ideal, int, int)", Type::amalgam},
        {"noetherian(amalgam)", Type::amalgam},
        {"noetherian_verdict_xjx(subring, ideal)", Type::amalgam},
        {"reduced_diamond_search(amalgam*)", Type::amalgam},
    });
    return table;
}

int match_shape(const std::vector<Shape>& table, const std::string& name,
                const std::vector<std::vector<TypeMask>>& arg_types)
{
    for (std::size_t k = 0; k < table.size(); ++k) {
        const Shape& s = table[k];
        if (s.name != name || s.sections.size() != arg_types.size())
            continue;
        bool ok = true;
        for (std::size_t sec = 0; sec < s.sections.size() && ok; ++sec) {
            const auto& params = s.sections[sec];
            const auto& args = arg_types[sec];
            std::size_t p = 0;
            for (std::size_t a = 0; a < args.size() && ok; ++a) {
                if (p >= params.size()) {
                    ok = false;
                    break;
                }
                ok = (args[a] & mask(params[p].type)) != 0;
                if (!params[p].repeated)
                    ++p;
            }
            if (ok && p < params.size() && !(p + 1 == params.size() && params[p].repeated))
                ok = false;
        }
        if (ok)
            return static_cast<int>(k);
    }
    return -1;
}

std::string literal_label(const Expr& e)
{
    switch (e.kind) {
        case Expr::Kind::integer: return std::to_string(e.value);
        case Expr::Kind::string: return e.text;
        case Expr::Kind::tuple: {
            std::string s = "(";
            for (std::size_t i = 0; i < e.items.size(); ++i) {
                if (i)
                    s += ",";
                s += literal_label(e.items[i]);
            }
            return s + ")";
        }
        default: return e.text;
    }
}

} // namespace detail

using namespace detail;

std::string_view to_string(Type t)
{
    switch (t) {
        case Type::ring: return "ring";
        case Type::ideal: return "ideal";
        case Type::hom: return "hom";
        case Type::module: return "module";
        case Type::subring: return "subring";
        case Type::amalgam: return "amalgam";
        case Type::pullback: return "pullback";
        case Type::integer: return "int";
        case Type::elem: return "elem";
        case Type::arrow: return "ring->ring";
    }
    return "?";
}

std::string_view to_string(DslError::Kind k)
{
    switch (k) {
        case DslError::Kind::syntax: return "SyntaxError";
        case DslError::Kind::unknown_name: return "UnknownName";
        case DslError::Kind::type_mismatch: return "TypeMismatch";
        case DslError::Kind::redefinition: return "Redefinition";
        case DslError::Kind::evaluation: return "EvalError";
    }
    return "?";
}

namespace {

std::string format_error(DslError::Kind kind, Location loc, const std::string& message,
                         const std::vector<std::string>& expected)
{
    std::string s = std::string(to_string(kind)) + " at " + std::to_string(loc.line) + ":" +
                    std::to_string(loc.column) + ": " + message;
    if (!expected.empty()) {
        s += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            s += (i ? ", " : "") + expected[i];
        s += ")";
    }
    return s;
}

} // namespace

DslError::DslError(Kind kind, Location loc, std::string message, std::vector<std::string> expected)
    : std::runtime_error(format_error(kind, loc, message, expected)),
      kind_(kind),
      loc_(loc),
      message_(std::move(message)),
      expected_(std::move(expected))
{
}

bool Expr::operator==(const Expr& other) const
{
    return kind == other.kind && text == other.text && value == other.value && items == other.items &&
           sections == other.sections;
}

bool Statement::operator==(const Statement& other) const
{
    return kind == other.kind && (kind == Kind::check || type == other.type) && name == other.name &&
           expr == other.expr;
}

// ---- lexer --------------------------------------------------------------

namespace {

enum class Tok { ident, integer, string, lparen, rparen, comma, semicolon, equals, arrow, end };

std::string tok_name(Tok t)
{
    switch (t) {
        case Tok::ident: return "identifier";
        case Tok::integer: return "integer";
        case Tok::string: return "string";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::semicolon: return "';'";
        case Tok::equals: return "'='";
        case Tok::arrow: return "'->'";
        case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    Location loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip();
            Token t;
            t.loc = {line_, col_};
            if (pos_ >= src_.size()) {
                t.kind = Tok::end;
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::ident;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    t.text += advance();
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
                t.kind = Tok::integer;
                t.text += advance();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    t.text += advance();
                try {
                    t.value = std::stoll(t.text);
                } catch (const std::out_of_range&) {
                    throw DslError(DslError::Kind::syntax, t.loc, "integer literal out of range");
                }
            } else if (c == '"') {
                t.kind = Tok::string;
                advance();
                while (true) {
                    if (pos_ >= src_.size() || src_[pos_] == '\n')
                        throw DslError(DslError::Kind::syntax, t.loc, "unterminated string literal");
                    char d = advance();
                    if (d == '"')
                        break;
                    if (d == '\\') {
                        if (pos_ >= src_.size())
                            throw DslError(DslError::Kind::syntax, t.loc, "unterminated string literal");
                        d = advance();
                    }
                    t.text += d;
                }
            } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                t.kind = Tok::arrow;
                advance();
                advance();
            } else {
                switch (c) {
                    case '(': t.kind = Tok::lparen; break;
                    case ')': t.kind = Tok::rparen; break;
                    case ',': t.kind = Tok::comma; break;
                    case ';': t.kind = Tok::semicolon; break;
                    case '=': t.kind = Tok::equals; break;
                    default:
                        throw DslError(DslError::Kind::syntax, t.loc, std::string("unexpected character '") + c + "'");
                }
                advance();
            }
            out.push_back(std::move(t));
        }
    }

private:
    char advance()
    {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip()
    {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---- parser -------------------------------------------------------------

const std::vector<std::string> definition_words{"ring", "ideal", "hom", "module", "subring", "amalgam", "pullback"};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Script run()
    {
        Script s;
        while (peek().kind != Tok::end)
            s.statements.push_back(statement());
        return s;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const Token& t = peek();
        std::string found = t.kind == Tok::ident ? "'" + t.text + "'" : tok_name(t.kind);
        throw DslError(DslError::Kind::syntax, t.loc, "unexpected " + found, std::move(expected));
    }

    Token expect(Tok k, std::vector<std::string> also = {})
    {
        if (peek().kind != k) {
            also.push_back(tok_name(k));
            fail(std::move(also));
        }
        return take();
    }

    Statement statement()
    {
        Statement st;
        const Token& t = peek();
        st.loc = t.loc;
        std::vector<std::string> starts;
        for (const auto& w : definition_words)
            starts.push_back("'" + w + "'");
        starts.push_back("'check'");
        if (t.kind != Tok::ident)
            fail(starts);
        if (t.text == "check") {
            take();
            st.kind = Statement::Kind::check;
            const Token name = expect(Tok::ident);
            st.name = name.text;
            Expr call;
            call.kind = Expr::Kind::call;
            call.text = name.text;
            call.loc = name.loc;
            expect(Tok::lparen);
            call.sections = arguments();
            expect(Tok::rparen, {"','", "';'"});
            st.expr = std::move(call);
            expect(Tok::semicolon);
            return st;
        }
        if (std::find(definition_words.begin(), definition_words.end(), t.text) == definition_words.end())
            fail(starts);
        st.kind = Statement::Kind::definition;
        st.type = type_from_word(take().text);
        st.name = expect(Tok::ident).text;
        expect(Tok::equals);
        st.expr = expression();
        expect(Tok::semicolon, {"'->'"});
        return st;
    }

    std::vector<std::vector<Expr>> arguments()
    {
        std::vector<std::vector<Expr>> sections(1);
        if (peek().kind == Tok::rparen)
            return sections;
        while (true) {
            if (peek().kind != Tok::semicolon && peek().kind != Tok::rparen) {
                sections.back().push_back(expression());
                while (peek().kind == Tok::comma) {
                    take();
                    sections.back().push_back(expression());
                }
            }
            if (peek().kind != Tok::semicolon)
                break;
            take();
            sections.emplace_back();
        }
        return sections;
    }

    Expr expression()
    {
        Expr lhs = primary();
        if (peek().kind != Tok::arrow)
            return lhs;
        Expr e;
        e.kind = Expr::Kind::arrow;
        e.loc = take().loc;
        e.items.push_back(std::move(lhs));
        e.items.push_back(primary());
        return e;
    }

    Expr primary()
    {
        const Token& t = peek();
        Expr e;
        e.loc = t.loc;
        switch (t.kind) {
            case Tok::integer:
                e.kind = Expr::Kind::integer;
                e.value = take().value;
                return e;
            case Tok::string:
                e.kind = Expr::Kind::string;
                e.text = take().text;
                return e;
            case Tok::ident:
                e.text = take().text;
                if (peek().kind == Tok::lparen) {
                    take();
                    e.kind = Expr::Kind::call;
                    e.sections = arguments();
                    expect(Tok::rparen, {"','", "';'"});
                } else {
                    e.kind = Expr::Kind::name;
                }
                return e;
            case Tok::lparen: {
                take();
                e.kind = Expr::Kind::tuple;
                e.items.push_back(expression());
                expect(Tok::comma);
                e.items.push_back(expression());
                while (peek().kind == Tok::comma) {
                    take();
                    e.items.push_back(expression());
                }
                expect(Tok::rparen, {"','"});
                return e;
            }
            default: fail({"identifier", "integer", "string", "'('"});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---- type checking ------------------------------------------------------

std::string shapes_text(const std::vector<Shape>& table, const std::string& name)
{
    std::string out;
    for (const auto& s : table)
        if (s.name == name)
            out += (out.empty() ? "" : " | ") + s.text;
    return out;
}

class Checker {
public:
    void run(const Script& s)
    {
        for (const auto& st : s.statements) {
            if (st.kind == Statement::Kind::check) {
                call_type(st.expr, check_table(), "check");
                continue;
            }
            const TypeMask t = type_of(st.expr);
            if (!(t & mask(st.type)))
                throw DslError(DslError::Kind::type_mismatch, st.expr.loc,
                               "'" + st.name + "' is declared " + std::string(to_string(st.type)) +
                                   " but its value is " + describe_mask(t));
            if (!names_.emplace(st.name, st.type).second)
                throw DslError(DslError::Kind::redefinition, st.loc, "'" + st.name + "' is already defined");
        }
    }

private:
    static std::string describe_mask(TypeMask m)
    {
        std::string out;
        for (unsigned k = 0; k <= static_cast<unsigned>(Type::arrow); ++k)
            if (m & (1u << k))
                out += (out.empty() ? "" : "/") + std::string(to_string(static_cast<Type>(k)));
        return out.empty() ? "nothing" : out;
    }

    TypeMask type_of(const Expr& e)
    {
        switch (e.kind) {
            case Expr::Kind::name: {
                auto it = names_.find(e.text);
                if (it == names_.end())
                    throw DslError(DslError::Kind::unknown_name, e.loc, "'" + e.text + "' is not defined");
                return mask(it->second);
            }
            case Expr::Kind::integer: return mask(Type::integer) | mask(Type::elem);
            case Expr::Kind::string: return mask(Type::elem);
            case Expr::Kind::tuple:
                for (const auto& item : e.items)
                    if (!(type_of(item) & mask(Type::elem)))
                        throw DslError(DslError::Kind::type_mismatch, item.loc, "tuple members must be element literals");
                return mask(Type::elem);
            case Expr::Kind::arrow:
                for (const auto& side : e.items)
                    if (!(type_of(side) & mask(Type::ring)))
                        throw DslError(DslError::Kind::type_mismatch, side.loc, "both sides of '->' must be rings");
                return mask(Type::arrow);
            case Expr::Kind::call: return call_type(e, builtin_table(), "function");
        }
        return 0;
    }

    TypeMask call_type(const Expr& e, const std::vector<Shape>& table, const char* what)
    {
        const std::string shapes = shapes_text(table, e.text);
        if (shapes.empty())
            throw DslError(DslError::Kind::unknown_name, e.loc, std::string("unknown ") + what + " '" + e.text + "'");
        std::vector<std::vector<TypeMask>> args;
        for (const auto& sec : e.sections) {
            args.emplace_back();
            for (const auto& a : sec)
                args.back().push_back(type_of(a));
        }
        const int k = match_shape(table, e.text, args);
        if (k < 0) {
            std::string found = e.text + "(";
            for (std::size_t s = 0; s < args.size(); ++s) {
                found += s ? "; " : "";
                for (std::size_t i = 0; i < args[s].size(); ++i)
                    found += (i ? ", " : "") + describe_mask(args[s][i]);
            }
            found += ")";
            throw DslError(DslError::Kind::type_mismatch, e.loc, "no overload accepts " + found, {shapes});
        }
        return mask(table[static_cast<std::size_t>(k)].result);
    }

    std::map<std::string, Type> names_;
};

void render_to(std::string& out, const Expr& e)
{
    switch (e.kind) {
        case Expr::Kind::name: out += e.text; break;
        case Expr::Kind::integer: out += std::to_string(e.value); break;
        case Expr::Kind::string:
            out += '"';
            for (char c : e.text) {
                if (c == '"' || c == '\\')
                    out += '\\';
                out += c;
            }
            out += '"';
            break;
        case Expr::Kind::tuple:
            out += '(';
            for (std::size_t i = 0; i < e.items.size(); ++i) {
                if (i)
                    out += ',';
                render_to(out, e.items[i]);
            }
            out += ')';
            break;
        case Expr::Kind::arrow:
            render_to(out, e.items[0]);
            out += " -> ";
            render_to(out, e.items[1]);
            break;
        case Expr::Kind::call:
            out += e.text;
            out += '(';
            for (std::size_t s = 0; s < e.sections.size(); ++s) {
                if (s)
                    out += e.sections[s].empty() ? ";" : "; ";
                for (std::size_t i = 0; i < e.sections[s].size(); ++i) {
                    if (i)
                        out += ", ";
                    render_to(out, e.sections[s][i]);
                }
            }
            out += ')';
            break;
    }
}

} // namespace

Script parse(std::string_view text)
{
    Script s = Parser(Lexer(text).run()).run();
    Checker().run(s);
    return s;
}

std::string render(const Expr& expr)
{
    std::string out;
    render_to(out, expr);
    return out;
}

std::string render(const Script& script)
{
    std::string out;
    for (const auto& w : script.warnings)
        out += "# warning: " + w + "\n";
    for (const auto& st : script.statements) {
        if (st.kind == Statement::Kind::check)
            out += "check ";
        else
            out += std::string(to_string(st.type)) + " " + st.name + " = ";
        render_to(out, st.expr);
        out += ";\n";
    }
    return out;
}

std::vector<std::string> builtin_shapes(std::string_view name)
{
    std::vector<std::string> out;
    for (const auto& s : builtin_table())
        if (s.name == name)
            out.push_back(s.text);
    return out;
}

std::vector<std::string> check_shapes(std::string_view name)
{
    std::vector<std::string> out;
    for (const auto& s : check_table())
        if (s.name == name)
            out.push_back(s.text);
    return out;
}

std::vector<std::string> check_names()
{
    std::vector<std::string> out;
    for (const auto& s : check_table())
        if (out.empty() || out.back() != s.name)
            out.push_back(s.name);
    return out;
}

std::optional<std::string> explain(std::string_view check)
{
    static const std::map<std::string_view, std::string_view> text{
        {"f_join_iso",
         "The map A (+) J -> A join^f J, (a, j) -> (a, f(a) + j), is an injective ring homomorphism onto the "
         "amalgamation, where A (+) J carries the product (aa', aj' + a'j + jj'). Consequently |A join^f J| = |A| * |J|."},
        {"graph_inclusion",
         "The graph {(a, f(a))} is a subring of A join^f J, and the first projection maps it isomorphically onto A."},
        {"iter_iso",
         "A join^{n,f} J, the amalgamation of the diagonal A -> B^n along J^n, is isomorphic to the amalgamated "
         "duplication of A join^{n-1,f} J along {0} x (0, ..., 0, J), through (a, (b1..bn)) -> (a'', a'' + j'') "
         "with a'' = (a, (b1..b_{n-1})) and a'' + j'' = (a, (b1..b_{n-2}, bn))."},
        {"pull_identity",
         "A join^f J equals, as a subset of A x B, the fiber product of f-breve = pi o f: A -> B/J and the projection "
         "pi: B -> B/J."},
        {"alt_pullback",
         "A join^f J is isomorphic to the fiber product of u: A -> A x B/J, a -> (a, f(a) + J) and v: A x B -> A x B/J, "
         "(a, b) -> (a, b + J); and to the fiber product of the induced maps from A/f^-1(J) and A x B into "
         "A/f^-1(J) x B/J."},
        {"factor",
         "For alpha: A -> C, beta: B -> C and f: A -> B, the fiber product of alpha and beta has the form "
         "A join^f J for some ideal J exactly when alpha = beta o f, and then J = Ker(beta)."},
        {"fibret",
         "The fiber product of alpha: A -> C and beta: B -> C is an amalgamation of A exactly when the projection "
         "onto A has a ring section iota; then f = p_B o iota and J = Ker(beta) present it. Without a section the "
         "search is exhaustive and every unital hom A -> B is tried as a presentation."},
        {"prid",
         "For D the fiber product of alpha and beta: if D is reduced then Nilp(A) meets Ker(alpha) trivially and "
         "Nilp(B) meets Ker(beta) trivially; if A is reduced and Nilp(B) meets Ker(beta) trivially, or B is reduced "
         "and Nilp(A) meets Ker(alpha) trivially, then D is reduced."},
        {"kernel_identity", "The kernel of the projection of the fiber product onto A is {0} x Ker(beta)."},
        {"canonical_isos",
         "I join^f J is an ideal with quotient isomorphic to A/I; Ker(p_A) = {0} x J with quotient A; "
         "p_B has image f(A) + J and kernel f^-1(J) x {0}; gamma: (a, f(a) + j) -> f(a) + J has kernel "
         "f^-1(J) x J with quotient (f(A) + J)/J, which is B/J when f is onto. Every isomorphism is the "
         "explicit induced map, validated."},
        {"b_diamond", "f(A) + J is a subring of B and amalgamating along it gives the same ring: A join^{f'} J = A join^f J."},
        {"domain_criterion",
         "For J != 0: A join^f J is a domain iff f(A) + J is a domain and f^-1(J) = 0. On finite rings both sides "
         "are false, since a finite domain is a field and {0} x J is a proper nonzero ideal."},
        {"reduced_criterion",
         "A join^f J is reduced iff A is reduced and Nilp(B) meets J trivially; if J is radical and the amalgam is "
         "reduced then B is reduced."},
        {"same_amalgam", "A join^f J = A join^g J iff f(a) - g(a) lies in J for every a."},
        {"split_sequence",
         "For an A-algebra R without identity, A (+) R has identity (1, 0) and 0 -> R -> A (+) R -> A -> 0 is a "
         "split exact sequence."},
        {"dorroh",
         "The Dorroh extension Dh_n(R) = Z/n (+) R of a rng of characteristic n is unital, equals (Z/n)(1,0) + R, and "
         "Dh_n(R)/R is isomorphic to Z/n."},
        {"idealization", "In the idealization A x| M the ideal 0 x M squares to zero."},
        {"nagata_as_amalgam",
         "The idealization A x| M coincides with A join^iota M for iota: A -> A x| M and M viewed as the ideal 0 x M."},
        {"d_plus_m",
         "For D a subring of T with identity and maximal ideals M of T meeting D trivially, D + J with J their "
         "intersection is isomorphic to D join^iota J."},
        {"cpi_prime",
         "C(A,P), the preimage of A/P under A_P -> k(P), equals lambda(A) + P A_P and is isomorphic to "
         "(A join^lambda P A_P)/(P x {0})."},
        {"cpi_ideal",
         "C(A,I), the preimage of A/I under S_I^-1 A -> Tot(A/I), equals lambda_I(A) + S_I^-1 I and is isomorphic "
         "to (A join^lambda_I S_I^-1 I)/(lambda_I^-1(S_I^-1 I) x {0}); for prime I it agrees with C(A,I) at a prime."},
        {"trunc_poly_amalgam",
         "With polynomials truncated above a degree bound, {h : h(0) in A, other coefficients in J} equals "
         "A join^sigma J' for sigma the constant embedding and J' the polynomials with coefficients in J and zero "
         "constant term."},
        {"noetherian",
         "Every finite ring is Noetherian; the report exhibits a minimum generating set of J as an A-module and the "
         "finiteness of A -> B/J."},
        {"noetherian_verdict_xjx",
         "Theorem-backed: A + XJ[X] is Noetherian iff A is Noetherian and J is idempotent and finitely generated "
         "over A; A + XB[X] is Noetherian when A is Noetherian and A in B is finite. Only the finite hypotheses are "
         "computed."},
        {"reduced_diamond_search",
         "Searches the given amalgams for A reduced with Nilp(B) meeting J trivially (so the amalgam is reduced) "
         "while f(A) + J is not reduced."},
    };
    auto it = text.find(check);
    if (it == text.end())
        return std::nullopt;
    return std::string(it->second);
}

} // namespace amalg::dsl
