#include "syllogic/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <sstream>

namespace syllogic {

namespace {

constexpr std::array<std::string_view, 8> kCopulaTokens = {"a", "e", "i", "o", "sa", "se", "si", "so"};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace

// ---------------------------------------------------------------------------
// TermId / Copula

TermId::TermId(std::string name) : name_(std::move(name))
{
    if (!isValidName(name_))
        throw std::invalid_argument("invalid term identifier '" + name_ + "'");
    if (isReserved(name_))
        throw std::invalid_argument("term identifier '" + name_ + "' is a reserved copula keyword");
}

bool TermId::isValidName(std::string_view s) noexcept
{
    if (s.empty() || !isIdentStart(s.front()))
        return false;
    return std::all_of(s.begin(), s.end(), isIdentChar);
}

bool TermId::isReserved(std::string_view s) noexcept { return copulaFromToken(s).has_value(); }

CopulaFamily familyOf(Copula c) noexcept
{
    switch (c) {
    case Copula::AnA:
    case Copula::AnE:
    case Copula::AnI:
    case Copula::AnO:
        return CopulaFamily::Analytic;
    default:
        return CopulaFamily::Synthetic;
    }
}

std::string_view copulaToken(Copula c) noexcept { return kCopulaTokens[static_cast<std::size_t>(c)]; }

std::optional<Copula> copulaFromToken(std::string_view tok) noexcept
{
    for (std::size_t k = 0; k < kCopulaTokens.size(); ++k)
        if (kCopulaTokens[k] == tok)
            return static_cast<Copula>(k);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(TermId subject, Copula copula, TermId predicate)
{
    return atom(Atom{std::move(subject), copula, std::move(predicate)});
}

Formula Formula::atom(Atom a)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}}));
}

Formula Formula::negation(Formula f)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(f)}}));
}

Formula Formula::conj(Formula l, Formula r)
{
    return Formula(std::make_shared<const Node>(Node{Kind::And, std::nullopt, {std::move(l), std::move(r)}}));
}

Formula Formula::disj(Formula l, Formula r)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Or, std::nullopt, {std::move(l), std::move(r)}}));
}

Formula Formula::implies(Formula l, Formula r)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Implies, std::nullopt, {std::move(l), std::move(r)}}));
}

const Atom& Formula::asAtom() const
{
    if (!node_->atom)
        throw std::logic_error("formula is not an atom");
    return *node_->atom;
}

const Formula& Formula::operand() const
{
    if (kind() != Kind::Not)
        throw std::logic_error("formula is not a negation");
    return node_->children[0];
}

const Formula& Formula::lhs() const
{
    if (node_->children.size() != 2)
        throw std::logic_error("formula is not binary");
    return node_->children[0];
}

const Formula& Formula::rhs() const
{
    if (node_->children.size() != 2)
        throw std::logic_error("formula is not binary");
    return node_->children[1];
}

bool Formula::operator==(const Formula& other) const
{
    if (node_ == other.node_)
        return true;
    if (kind() != other.kind())
        return false;
    if (isAtom())
        return asAtom() == other.asAtom();
    return node_->children == other.node_->children;
}

std::vector<Atom> Formula::atoms() const
{
    std::vector<Atom> out;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        if (f.isAtom()) {
            if (std::find(out.begin(), out.end(), f.asAtom()) == out.end())
                out.push_back(f.asAtom());
            return;
        }
        for (const auto& c : f.node_->children)
            walk(c);
    };
    walk(*this);
    return out;
}

std::vector<TermId> Formula::terms() const
{
    std::set<TermId> s;
    for (const auto& a : atoms()) {
        s.insert(a.subject);
        s.insert(a.predicate);
    }
    return {s.begin(), s.end()};
}

bool Formula::usesOnly(CopulaFamily family) const
{
    const auto as = atoms();
    return std::all_of(as.begin(), as.end(), [&](const Atom& a) { return familyOf(a.copula) == family; });
}

std::size_t Formula::depth() const
{
    std::size_t d = 0;
    for (const auto& c : node_->children)
        d = std::max(d, c.depth());
    return d + 1;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "syntax error at byte " << offset << ": expected ";
          for (std::size_t k = 0; k < expected.size(); ++k)
              os << (k ? ", " : "") << expected[k];
          os << "; found " << found;
          return os.str();
      }()),
      offset_(offset), expected_(std::move(expected)), found_(std::move(found))
{
}

namespace {

enum class Tok { Word, Not, And, Or, Arrow, LParen, RParen, End, Bad };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size())
            return {Tok::End, {}, start};
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            return Token{k, src_.substr(start, 1), start};
        };
        switch (c) {
        case '~': return single(Tok::Not);
        case '&': return single(Tok::And);
        case '|': return single(Tok::Or);
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        case '-':
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                pos_ += 2;
                return {Tok::Arrow, src_.substr(start, 2), start};
            }
            return single(Tok::Bad);
        default:
            break;
        }
        if (isIdentStart(c)) {
            while (pos_ < src_.size() && isIdentChar(src_[pos_]))
                ++pos_;
            return {Tok::Word, src_.substr(start, pos_ - start), start};
        }
        return single(Tok::Bad);
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string describe(const Token& t)
{
    if (t.kind == Tok::End)
        return "end of input";
    std::string s;
    for (char c : t.text) {
        const auto u = static_cast<unsigned char>(c);
        if (u >= 0x20 && u < 0x7f) {
            s += c;
        } else {
            static constexpr char hex[] = "0123456789abcdef";
            s += "\\x";
            s += hex[u >> 4];
            s += hex[u & 0xf];
        }
    }
    return "'" + s + "'";
}

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    Formula run()
    {
        Formula f = parseImplies();
        if (cur_.kind != Tok::End)
            fail({"'->'", "'|'", "'&'", "end of input"});
        return f;
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        throw ParseError(cur_.offset, std::move(expected), describe(cur_));
    }

    Formula parseImplies()
    {
        Formula lhs = parseOr();
        if (cur_.kind == Tok::Arrow) {
            advance();
            return Formula::implies(std::move(lhs), parseImplies());
        }
        return lhs;
    }

    Formula parseOr()
    {
        Formula f = parseAnd();
        while (cur_.kind == Tok::Or) {
            advance();
            f = Formula::disj(std::move(f), parseAnd());
        }
        return f;
    }

    Formula parseAnd()
    {
        Formula f = parseUnary();
        while (cur_.kind == Tok::And) {
            advance();
            f = Formula::conj(std::move(f), parseUnary());
        }
        return f;
    }

    Formula parseUnary()
    {
        if (cur_.kind == Tok::Not) {
            advance();
            return Formula::negation(parseUnary());
        }
        if (cur_.kind == Tok::LParen) {
            advance();
            Formula f = parseImplies();
            if (cur_.kind != Tok::RParen)
                fail({"')'", "'->'", "'|'", "'&'"});
            advance();
            return f;
        }
        return parseAtom();
    }

    TermId parseTerm()
    {
        if (cur_.kind != Tok::Word || TermId::isReserved(cur_.text))
            fail({"identifier"});
        TermId t{std::string(cur_.text)};
        advance();
        return t;
    }

    Formula parseAtom()
    {
        if (cur_.kind != Tok::Word || TermId::isReserved(cur_.text))
            fail({"'~'", "'('", "identifier"});
        TermId subject = parseTerm();
        const auto cop = cur_.kind == Tok::Word ? copulaFromToken(cur_.text) : std::nullopt;
        if (!cop)
            fail({"copula (a, e, i, o, sa, se, si, so)"});
        advance();
        TermId predicate = parseTerm();
        return Formula::atom(std::move(subject), *cop, std::move(predicate));
    }

    Lexer lex_;
    Token cur_{Tok::End, {}, 0};
};

// Binding strength: Implies 1, Or 2, And 3, Not/Atom 4.
int precedence(const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    default: return 4;
    }
}

void renderInto(std::string& out, const Formula& f);

void renderChild(std::string& out, const Formula& child, bool parens)
{
    if (parens)
        out += '(';
    renderInto(out, child);
    if (parens)
        out += ')';
}

void renderInto(std::string& out, const Formula& f)
{
    const int p = precedence(f);
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out += render(f.asAtom());
        return;
    case Formula::Kind::Not:
        out += '~';
        renderChild(out, f.operand(), precedence(f.operand()) < 4);
        return;
    case Formula::Kind::Implies:
        // right-associative
        renderChild(out, f.lhs(), precedence(f.lhs()) <= p);
        out += " -> ";
        renderChild(out, f.rhs(), precedence(f.rhs()) < p);
        return;
    case Formula::Kind::Or:
    case Formula::Kind::And:
        // left-associative
        renderChild(out, f.lhs(), precedence(f.lhs()) < p);
        out += f.kind() == Formula::Kind::Or ? " | " : " & ";
        renderChild(out, f.rhs(), precedence(f.rhs()) <= p);
        return;
    }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Atom& a)
{
    std::string s = a.subject.name();
    s += ' ';
    s += copulaToken(a.copula);
    s += ' ';
    s += a.predicate.name();
    return s;
}

std::string render(const Formula& f)
{
    std::string out;
    renderInto(out, f);
    return out;
}

// ---------------------------------------------------------------------------
// Schema

Schema::Schema(Formula body, std::vector<TermId> metavariables)
    : body_(std::move(body)), metavars_(std::move(metavariables))
{
    const auto used = body_.terms();
    for (const auto& m : metavars_)
        if (std::find(used.begin(), used.end(), m) == used.end())
            throw std::invalid_argument("metavariable '" + m.name() + "' does not occur in the schema");
}

Schema Schema::fromText(std::string_view text, const std::vector<std::string>& metavariables)
{
    std::vector<TermId> mv;
    mv.reserve(metavariables.size());
    for (const auto& m : metavariables)
        mv.emplace_back(m);
    return Schema(parse(text), std::move(mv));
}

Formula instantiate(const Schema& s, const Binding& binding)
{
    std::map<TermId, TermId> subst;
    for (const auto& m : s.metavariables()) {
        auto it = binding.find(m.name());
        if (it == binding.end())
            throw InstantiationError("missing binding for metavariable '" + m.name() + "'");
        if (TermId::isReserved(it->second))
            throw InstantiationError("metavariable '" + m.name() + "' bound to reserved token '" + it->second + "'");
        if (!TermId::isValidName(it->second))
            throw InstantiationError("metavariable '" + m.name() + "' bound to malformed identifier '" + it->second + "'");
        subst.emplace(m, TermId(it->second));
    }
    auto sub = [&](const TermId& t) {
        auto it = subst.find(t);
        return it == subst.end() ? t : it->second;
    };
    std::function<Formula(const Formula&)> go = [&](const Formula& f) -> Formula {
        switch (f.kind()) {
        case Formula::Kind::Atom: {
            const Atom& a = f.asAtom();
            return Formula::atom(sub(a.subject), a.copula, sub(a.predicate));
        }
        case Formula::Kind::Not: return Formula::negation(go(f.operand()));
        case Formula::Kind::And: return Formula::conj(go(f.lhs()), go(f.rhs()));
        case Formula::Kind::Or: return Formula::disj(go(f.lhs()), go(f.rhs()));
        case Formula::Kind::Implies: return Formula::implies(go(f.lhs()), go(f.rhs()));
        }
        throw std::logic_error("unreachable");
    };
    return go(s.body());
}

}  // namespace syllogic
