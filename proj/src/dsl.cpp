#include "ffgs/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ffgs::dsl {

namespace {

const std::set<std::string> kReserved = {
    "ring",  "algebra",  "over",     "gens", "comul",  "counit",
    "antipode", "comodule", "rank", "action", "pi"};

bool small_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- lexer ----------------------------------------------------------------

enum class Tok : uint8_t { Ident, Number, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    uint64_t value = 0; // for Number
    size_t line = 1, col = 1;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    size_t line = 1, col = 1, i = 0;
    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j) {
            if (text[i + j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += k;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            t.kind = Tok::Ident;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            uint64_t v = 0;
            bool overflow = false;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + static_cast<uint64_t>(text[j] - '0');
                if (v > 1'000'000'000ULL) overflow = true;
                ++j;
            }
            if (overflow)
                throw ParseError({"E005", "numeric literal out of range", line, col});
            t.kind = Tok::Number;
            t.text = text.substr(i, j - i);
            t.value = v;
            advance(j - i);
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            t.kind = Tok::Punct;
            t.text = "->";
            advance(2);
        } else if (std::string("=(),;^@+-*[]").find(c) != std::string::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw ParseError({"E002",
                              std::string("unexpected character '") + c + "'", line,
                              col});
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// --- parser ---------------------------------------------------------------

struct EvalCtx {
    AlgebraPtr target;
    const std::vector<std::string>* gen_names = nullptr;
    uint32_t max_slot = 0; // 0: slots forbidden; 2: comultiplication context
};

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    SourceFile run();

  private:
    [[noreturn]] void fail(const std::string& code, const std::string& msg,
                           const Token& at) const {
        throw ParseError({code, msg, at.line, at.col});
    }
    const Token& peek() const { return toks_[pos_]; }
    const Token& get() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::End) ++pos_;
        return t;
    }
    bool at_punct(const std::string& s) const {
        return peek().kind == Tok::Punct && peek().text == s;
    }
    void expect_punct(const std::string& s) {
        if (peek().kind == Tok::End)
            fail("E012", "unexpected end of file, expected '" + s + "'", peek());
        if (!at_punct(s))
            fail("E002", "expected '" + s + "', found '" + peek().text + "'", peek());
        ++pos_;
    }
    std::string expect_ident(const std::string& what) {
        if (peek().kind == Tok::End)
            fail("E012", "unexpected end of file, expected " + what, peek());
        if (peek().kind != Tok::Ident)
            fail("E002", "expected " + what + ", found '" + peek().text + "'", peek());
        return get().text;
    }
    uint64_t expect_number(const std::string& what) {
        if (peek().kind == Tok::End)
            fail("E012", "unexpected end of file, expected " + what, peek());
        if (peek().kind != Tok::Number)
            fail("E005", "expected " + what + ", found '" + peek().text + "'", peek());
        return get().value;
    }

    void parse_ring();
    void parse_algebra();
    void parse_structure(const std::string& which);
    void parse_comodule();
    size_t skip_expr(); // returns token index of the expression start
    AlgElem parse_expr(const EvalCtx& ctx);
    AlgElem parse_term(const EvalCtx& ctx);
    AlgElem parse_unary(const EvalCtx& ctx);
    AlgElem parse_power(const EvalCtx& ctx);
    AlgElem parse_atom(const EvalCtx& ctx);
    size_t gen_index(const std::string& name, const Token& at) const;

    std::vector<Token> toks_;
    size_t pos_ = 0;

    // accumulated declarations
    bool have_ring_ = false;
    std::string ring_name_;
    std::optional<BaseRing> ring_;
    bool have_algebra_ = false;
    std::string algebra_name_;
    std::vector<std::string> names_;
    std::vector<uint32_t> bounds_;
    AlgebraPtr A_;  // assembled algebra
    AlgebraPtr T2_; // its tensor square
    std::map<size_t, AlgElem> comul_, antipode_;
    std::map<size_t, uint32_t> counit_;
    struct PendingComodule {
        std::string name;
        size_t rank;
        std::vector<std::vector<AlgElem>> action;
    };
    std::vector<PendingComodule> comodules_;
};

size_t Parser::gen_index(const std::string& name, const Token& at) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    fail("E003", "unknown identifier '" + name + "'", at);
}

AlgElem Parser::parse_atom(const EvalCtx& ctx) {
    const Token& t = peek();
    if (t.kind == Tok::End) fail("E012", "unexpected end of file in expression", t);
    if (t.kind == Tok::Number) {
        get();
        return alg_scalar(ctx.target,
                          ctx.target->base().from_int(static_cast<int64_t>(t.value)));
    }
    if (at_punct("(")) {
        get();
        AlgElem e = parse_expr(ctx);
        expect_punct(")");
        return e;
    }
    if (t.kind == Tok::Ident) {
        Token name_tok = get();
        if (name_tok.text == "pi")
            return alg_scalar(ctx.target, ctx.target->base().pi());
        size_t i = gen_index(name_tok.text, name_tok);
        if (at_punct("@")) {
            Token at_tok = get();
            uint64_t slot = expect_number("tensor slot");
            if (ctx.max_slot == 0)
                fail("E006", "tensor slot not allowed in this context", at_tok);
            if (slot < 1 || slot > ctx.max_slot)
                fail("E006", "unknown tensor slot @" + std::to_string(slot), at_tok);
            return alg_gen(ctx.target,
                           (static_cast<size_t>(slot) - 1) * names_.size() + i);
        }
        if (ctx.max_slot != 0)
            fail("E006",
                 "generator '" + name_tok.text +
                     "' requires a tensor slot in this context",
                 name_tok);
        return alg_gen(ctx.target, i);
    }
    fail("E002", "expected an expression, found '" + t.text + "'", t);
}

AlgElem Parser::parse_power(const EvalCtx& ctx) {
    Token start = peek();
    AlgElem base = parse_atom(ctx);
    if (!at_punct("^")) return base;
    get();
    bool negative = false;
    if (at_punct("-")) {
        get();
        negative = true;
    }
    uint64_t e = expect_number("exponent");
    if (negative) {
        try {
            base = inv(base);
        } catch (const std::exception&) {
            fail("E008", "inverse of a non-unit", start);
        }
    }
    return pow(base, static_cast<uint32_t>(e));
}

AlgElem Parser::parse_unary(const EvalCtx& ctx) {
    if (at_punct("-")) {
        get();
        return neg(parse_unary(ctx));
    }
    return parse_power(ctx);
}

AlgElem Parser::parse_term(const EvalCtx& ctx) {
    AlgElem e = parse_unary(ctx);
    while (at_punct("*")) {
        get();
        e = mul(e, parse_unary(ctx));
    }
    return e;
}

AlgElem Parser::parse_expr(const EvalCtx& ctx) {
    AlgElem e = parse_term(ctx);
    while (at_punct("+") || at_punct("-")) {
        bool minus = peek().text == "-";
        get();
        AlgElem rhs = parse_term(ctx);
        e = minus ? sub(e, rhs) : add(e, rhs);
    }
    return e;
}

size_t Parser::skip_expr() {
    size_t start = pos_;
    int depth = 0;
    while (true) {
        const Token& t = peek();
        if (t.kind == Tok::End)
            fail("E012", "unexpected end of file in expression", t);
        if (t.kind == Tok::Punct) {
            if (t.text == "(" || t.text == "[") ++depth;
            else if (t.text == ")" || t.text == "]") --depth;
            else if (depth == 0 && (t.text == "," || t.text == ";")) break;
        }
        get();
    }
    return start;
}

void Parser::parse_ring() {
    Token kw = get(); // 'ring'
    if (have_ring_) fail("E004", "duplicate ring declaration", kw);
    ring_name_ = expect_ident("ring name");
    expect_punct("=");
    Token ctor = peek();
    std::string which = expect_ident("ring constructor");
    if (which != "Fp_pi" && which != "Zmod")
        fail("E009", "unknown ring constructor '" + which + "'", ctor);
    expect_punct("(");
    if (expect_ident("parameter name") != "p")
        fail("E009", "first ring parameter must be p", ctor);
    expect_punct("=");
    uint64_t p = expect_number("prime p");
    expect_punct(",");
    std::string second = expect_ident("parameter name");
    std::string want = which == "Fp_pi" ? "e" : "s";
    if (second != want)
        fail("E009", "ring parameter must be " + want + " for " + which, ctor);
    expect_punct("=");
    uint64_t len = expect_number("ring length");
    expect_punct(")");
    expect_punct(";");
    if (!small_prime(static_cast<uint32_t>(p)))
        fail("E009", "p = " + std::to_string(p) + " is not prime", ctor);
    if (len < 1 || len > 2)
        fail("E009", want + " must be 1 or 2", ctor);
    ring_ = which == "Fp_pi"
                ? BaseRing(RingKind::FpPi, static_cast<uint32_t>(p),
                           static_cast<uint32_t>(len))
                : BaseRing(RingKind::Zmod, static_cast<uint32_t>(p),
                           static_cast<uint32_t>(len));
    have_ring_ = true;
}

void Parser::parse_algebra() {
    Token kw = get(); // 'algebra'
    if (!have_ring_) fail("E001", "missing ring declaration", kw);
    if (have_algebra_) fail("E004", "duplicate algebra declaration", kw);
    algebra_name_ = expect_ident("algebra name");
    if (expect_ident("'over'") != "over")
        fail("E002", "expected 'over'", kw);
    Token rtok = peek();
    std::string rname = expect_ident("ring name");
    if (rname != ring_name_) fail("E003", "unknown identifier '" + rname + "'", rtok);
    expect_punct("=");
    if (expect_ident("'gens'") != "gens") fail("E002", "expected 'gens'", kw);

    std::vector<size_t> tail_starts;
    while (true) {
        Token ntok = peek();
        std::string gname = expect_ident("generator name");
        if (kReserved.count(gname))
            fail("E002", "'" + gname + "' is a reserved word", ntok);
        for (const auto& existing : names_)
            if (existing == gname)
                fail("E004", "duplicate generator '" + gname + "'", ntok);
        expect_punct("^");
        uint64_t bound = expect_number("generator bound");
        if (bound < 1) fail("E005", "generator bound must be positive", ntok);
        expect_punct("->");
        names_.push_back(gname);
        bounds_.push_back(static_cast<uint32_t>(bound));
        tail_starts.push_back(skip_expr());
        if (at_punct(",")) {
            get();
            continue;
        }
        expect_punct(";");
        break;
    }

    // Tail expressions are polynomial data: evaluate them in the bound-
    // truncated model with zero tails, then feed the raw terms to make().
    AlgebraPtr A0 = AlgebraPresentation::make(
        *ring_, names_, bounds_, std::vector<RawPoly>(names_.size()));
    EvalCtx tail_ctx{A0, &names_, 0};
    std::vector<RawPoly> tails;
    size_t resume = pos_;
    for (size_t s : tail_starts) {
        pos_ = s;
        AlgElem t = parse_expr(tail_ctx);
        tails.emplace_back(t.terms().begin(), t.terms().end());
    }
    pos_ = resume;
    try {
        A_ = AlgebraPresentation::make(*ring_, names_, bounds_, tails);
    } catch (const std::exception& e) {
        fail("E010", std::string("invalid algebra presentation: ") + e.what(), kw);
    }
    T2_ = tensor_power(A_, 2);
    have_algebra_ = true;
}

void Parser::parse_structure(const std::string& which) {
    Token kw = get(); // 'comul' | 'counit' | 'antipode'
    if (!have_algebra_) fail("E007", "missing algebra declaration", kw);
    Token htok = peek();
    std::string head = expect_ident("generator name");
    bool is_gen = false;
    size_t idx = 0;
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == head) {
            is_gen = true;
            idx = i;
        }
    if (!is_gen)
        fail("E010", which + " head '" + head + "' is not a generator", htok);
    expect_punct("=");
    if (which == "comul") {
        if (comul_.count(idx)) fail("E004", "duplicate comul for '" + head + "'", kw);
        comul_.emplace(idx, parse_expr({T2_, &names_, 2}));
    } else if (which == "counit") {
        if (counit_.count(idx)) fail("E004", "duplicate counit for '" + head + "'", kw);
        AlgElem e = parse_expr({A_, &names_, 0});
        for (const auto& [m, c] : e.terms())
            for (auto ex : m)
                if (ex) fail("E010", "counit must be a scalar", htok);
        counit_.emplace(idx, constant_term(e));
    } else {
        if (antipode_.count(idx))
            fail("E004", "duplicate antipode for '" + head + "'", kw);
        antipode_.emplace(idx, parse_expr({A_, &names_, 0}));
    }
    expect_punct(";");
}

void Parser::parse_comodule() {
    Token kw = get(); // 'comodule'
    if (!have_algebra_) fail("E007", "missing algebra declaration", kw);
    Token ntok = peek();
    std::string name = expect_ident("comodule name");
    for (const auto& c : comodules_)
        if (c.name == name) fail("E004", "duplicate comodule '" + name + "'", ntok);
    if (expect_ident("'over'") != "over") fail("E002", "expected 'over'", kw);
    Token atok = peek();
    std::string aname = expect_ident("algebra name");
    if (aname != algebra_name_)
        fail("E003", "unknown identifier '" + aname + "'", atok);
    expect_punct("=");
    if (expect_ident("'rank'") != "rank") fail("E002", "expected 'rank'", kw);
    Token rtok = peek();
    uint64_t rank = expect_number("comodule rank");
    if (rank < 1) fail("E011", "comodule rank must be positive", rtok);
    if (expect_ident("'action'") != "action") fail("E002", "expected 'action'", kw);
    expect_punct("[");
    std::vector<std::vector<AlgElem>> action;
    while (true) {
        expect_punct("[");
        std::vector<AlgElem> row;
        while (true) {
            row.push_back(parse_expr({A_, &names_, 0}));
            if (at_punct(",")) {
                get();
                continue;
            }
            expect_punct("]");
            break;
        }
        if (row.size() != rank)
            fail("E011",
                 "action row has " + std::to_string(row.size()) + " entries, rank is " +
                     std::to_string(rank),
                 rtok);
        action.push_back(std::move(row));
        if (at_punct(",")) {
            get();
            continue;
        }
        expect_punct("]");
        break;
    }
    if (action.size() != rank)
        fail("E011",
             "action has " + std::to_string(action.size()) + " rows, rank is " +
                 std::to_string(rank),
             rtok);
    expect_punct(";");
    comodules_.push_back({name, static_cast<size_t>(rank), std::move(action)});
}

SourceFile Parser::run() {
    while (peek().kind != Tok::End) {
        const Token& t = peek();
        if (t.kind != Tok::Ident)
            fail("E002", "expected a declaration, found '" + t.text + "'", t);
        if (t.text == "ring") parse_ring();
        else if (t.text == "algebra") parse_algebra();
        else if (t.text == "comul" || t.text == "counit" || t.text == "antipode")
            parse_structure(t.text);
        else if (t.text == "comodule") parse_comodule();
        else fail("E002", "unknown declaration '" + t.text + "'", t);
    }
    if (!have_ring_) fail("E001", "missing ring declaration", peek());

    if (!have_algebra_) fail("E007", "missing algebra declaration", peek());

    SourceFile out;
    out.ring_name = ring_name_;
    out.ring = *ring_;
    out.algebra_name = algebra_name_;
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!comul_.count(i))
            fail("E010", "missing comul for generator '" + names_[i] + "'", peek());
        if (!counit_.count(i))
            fail("E010", "missing counit for generator '" + names_[i] + "'", peek());
    }
    if (!antipode_.empty() && antipode_.size() != names_.size())
        fail("E010", "antipode must be declared for every generator or none", peek());

    std::vector<AlgElem> comul;
    std::vector<uint32_t> counit;
    for (size_t i = 0; i < names_.size(); ++i) {
        comul.push_back(comul_.at(i));
        counit.push_back(counit_.at(i));
    }
    std::optional<std::vector<AlgElem>> antipode;
    if (!antipode_.empty()) {
        antipode.emplace();
        for (size_t i = 0; i < names_.size(); ++i) antipode->push_back(antipode_.at(i));
    }
    try {
        out.hopf = make_hopf(A_, std::move(comul), std::move(counit),
                             std::move(antipode));
    } catch (const std::exception& e) {
        fail("E010", std::string("invalid Hopf presentation: ") + e.what(), peek());
    }
    for (auto& pc : comodules_) {
        Comodule V{out.hopf, pc.rank, std::move(pc.action), pc.name};
        out.comodules.push_back({pc.name, std::move(V)});
    }
    return out;
}

// --- printing ---------------------------------------------------------------

void print_summand(std::string& out, bool& first, uint32_t c, bool pi_flag,
                   const Monomial& m, const std::vector<std::string>& names) {
    std::vector<std::string> factors;
    bool has_gen = false;
    for (auto e : m)
        if (e) has_gen = true;
    if (c != 1 || (!pi_flag && !has_gen)) factors.push_back(std::to_string(c));
    if (pi_flag) factors.emplace_back("pi");
    for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        factors.push_back(m[i] == 1 ? names[i]
                                    : names[i] + "^" + std::to_string(m[i]));
    }
    if (!first) out += " + ";
    first = false;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " * ";
        out += factors[i];
    }
}

std::string print_elem(const AlgElem& e) {
    if (e.is_zero()) return "0";
    const auto& base = e.owner()->base();
    const auto& names = e.owner()->names();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (base.kind() == RingKind::FpPi && base.length() == 2) {
            uint32_t c0 = c % base.p(), c1 = c / base.p();
            if (c0) print_summand(out, first, c0, false, m, names);
            if (c1) print_summand(out, first, c1, true, m, names);
        } else {
            print_summand(out, first, c, false, m, names);
        }
    }
    return out;
}

std::string print_scalar(const BaseRing& base, uint32_t c) {
    if (base.kind() == RingKind::FpPi && base.length() == 2) {
        uint32_t c0 = c % base.p(), c1 = c / base.p();
        if (c1 == 0) return std::to_string(c0);
        std::string out = c0 ? std::to_string(c0) + " + " : "";
        out += c1 == 1 ? "pi" : std::to_string(c1) + " * pi";
        return out;
    }
    return std::to_string(c);
}

} // namespace

ParseError::ParseError(Diagnostic d)
    : std::runtime_error(d.code + ": " + d.message + " (line " +
                         std::to_string(d.line) + ", col " + std::to_string(d.col) +
                         ")"),
      diag_(std::move(d)) {}

SourceFile parse(const std::string& text) { return Parser(text).run(); }

SourceFile parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string print(const SourceFile& f) {
    std::string out;
    const BaseRing& R = f.ring;
    out += "ring " + f.ring_name + " = ";
    if (R.kind() == RingKind::FpPi)
        out += "Fp_pi(p=" + std::to_string(R.p()) + ", e=" + std::to_string(R.length());
    else
        out += "Zmod(p=" + std::to_string(R.p()) + ", s=" + std::to_string(R.length());
    out += ");\n";
    if (!f.hopf.A) return out;

    const auto& A = f.hopf.A;
    out += "\nalgebra " + f.algebra_name + " over " + f.ring_name + " = gens\n";
    for (size_t i = 0; i < A->gen_count(); ++i) {
        out += "    " + A->names()[i] + "^" + std::to_string(A->bounds()[i]) + " -> " +
               print_elem(A->tails()[i]);
        out += i + 1 == A->gen_count() ? ";\n" : ",\n";
    }
    out += "\n";
    for (size_t i = 0; i < A->gen_count(); ++i)
        out += "comul " + A->names()[i] + " = " + print_elem(f.hopf.comul[i]) + ";\n";
    out += "\n";
    for (size_t i = 0; i < A->gen_count(); ++i)
        out += "counit " + A->names()[i] + " = " +
               print_scalar(R, f.hopf.counit[i]) + ";\n";
    if (f.hopf.antipode) {
        out += "\n";
        for (size_t i = 0; i < A->gen_count(); ++i)
            out += "antipode " + A->names()[i] + " = " +
                   print_elem((*f.hopf.antipode)[i]) + ";\n";
    }
    for (const auto& cd : f.comodules) {
        out += "\ncomodule " + cd.name + " over " + f.algebra_name + " = rank " +
               std::to_string(cd.comodule.rank) + " action [\n";
        for (size_t i = 0; i < cd.comodule.rank; ++i) {
            out += "    [";
            for (size_t j = 0; j < cd.comodule.rank; ++j) {
                if (j) out += ", ";
                out += print_elem(cd.comodule.action[i][j]);
            }
            out += i + 1 == cd.comodule.rank ? "]\n" : "],\n";
        }
        out += "];\n";
    }
    return out;
}

SourceFile wrap(std::string ring_name, std::string algebra_name,
                const HopfPresentation& G, std::vector<ComoduleDecl> comodules) {
    SourceFile f;
    f.ring_name = std::move(ring_name);
    f.ring = G.base();
    f.algebra_name = std::move(algebra_name);
    f.hopf = G;
    f.comodules = std::move(comodules);
    return f;
}

} // namespace ffgs::dsl
