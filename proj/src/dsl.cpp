#include "ringlab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/groups.hpp"

namespace ringlab {

std::string to_string(ExprKind kind) {
    switch (kind) {
        case ExprKind::ZMod: return "Z";
        case ExprKind::GF: return "GF";
        case ExprKind::Prod: return "Prod";
        case ExprKind::M: return "M";
        case ExprKind::T: return "T";
        case ExprKind::Tskew: return "Tskew";
        case ExprKind::PolyMod: return "PolyMod";
        case ExprKind::SkewPolyMod: return "SkewPolyMod";
        case ExprKind::TrivExt: return "TrivExt";
        case ExprKind::DT: return "DT";
        case ExprKind::Ks: return "Ks";
        case ExprKind::FM: return "FM";
        case ExprKind::MoritaTriv: return "MoritaTriv";
        case ExprKind::GroupRing: return "GroupRing";
    }
    return "?";
}

namespace {

struct Token {
    enum class Kind { Ident, Int, LParen, RParen, Comma, Equals, End } kind;
    std::string text;
    std::int64_t value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            current_.text = "end of input";
            return;
        }
        const char c = text_[pos_];
        if (c == '(' || c == ')' || c == ',' || c == '=') {
            current_.kind = c == '(' ? Token::Kind::LParen
                           : c == ')' ? Token::Kind::RParen
                           : c == ',' ? Token::Kind::Comma
                                      : Token::Kind::Equals;
            current_.text = std::string(1, c);
            bump();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                bump();
            }
            current_.kind = Token::Kind::Int;
            current_.text = digits;
            if (digits.size() > 12)
                throw RangeError("integer literal too large: " + digits, current_.line,
                                 current_.column);
            current_.value = std::stoll(digits);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ident += text_[pos_];
                bump();
            }
            current_.kind = Token::Kind::Ident;
            current_.text = ident;
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, column_);
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_;
};

[[noreturn]] void expected(const Token& got, const std::string& what) {
    throw ParseError(std::to_string(got.line) + ":" + std::to_string(got.column) + ": expected " +
                         what + ", found '" + got.text + "'",
                     got.line, got.column);
}

struct Arg {
    enum class Kind { Expr, Int, Name, Alpha, Scalar } kind;
    RingExpr expr;
    std::int64_t value = 0;
    std::string name;
    std::size_t line = 1, column = 1;
};

const std::map<std::string, ExprKind, std::less<>>& construction_names() {
    static const std::map<std::string, ExprKind, std::less<>> names = {
        {"Prod", ExprKind::Prod},       {"M", ExprKind::M},
        {"T", ExprKind::T},             {"Tskew", ExprKind::Tskew},
        {"PolyMod", ExprKind::PolyMod}, {"SkewPolyMod", ExprKind::SkewPolyMod},
        {"TrivExt", ExprKind::TrivExt}, {"DT", ExprKind::DT},
        {"Ks", ExprKind::Ks},           {"FM", ExprKind::FM},
        {"MoritaTriv", ExprKind::MoritaTriv}, {"GroupRing", ExprKind::GroupRing},
    };
    return names;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

std::optional<std::pair<std::int64_t, std::int64_t>> prime_power_split(std::int64_t q) {
    if (q < 2) return std::nullopt;
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) return std::make_pair(q, std::int64_t{1});  // q itself prime
    std::int64_t k = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) return std::nullopt;
    return std::make_pair(p, k);
}

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    RingExpr parse() {
        RingExpr e = parse_expr();
        if (lex_.peek().kind != Token::Kind::End) expected(lex_.peek(), "end of input");
        return e;
    }

  private:
    RingExpr parse_expr() {
        const Token t = lex_.take();
        if (t.kind != Token::Kind::Ident) expected(t, "a construction name");
        if (t.text.size() > 1 && t.text[0] == 'Z' && all_digits(t.text.substr(1))) {
            RingExpr e;
            e.kind = ExprKind::ZMod;
            if (t.text.size() > 13)
                throw RangeError("modulus too large in " + t.text, t.line, t.column);
            e.ints.push_back(std::stoll(t.text.substr(1)));
            if (e.ints[0] < 2)
                throw RangeError("Z requires a modulus >= 2 (the zero ring is rejected)", t.line,
                                 t.column);
            return e;
        }
        if (t.text == "GF") return parse_gf(t);
        auto it = construction_names().find(t.text);
        if (it == construction_names().end())
            expected(t, "one of Z<n>, GF, Prod, M, T, Tskew, PolyMod, SkewPolyMod, TrivExt, DT, "
                        "Ks, FM, MoritaTriv, GroupRing");
        std::vector<Arg> args = parse_args();
        return assemble(it->second, t, std::move(args));
    }

    RingExpr parse_gf(const Token& head) {
        std::vector<Arg> args = parse_args();
        for (const Arg& a : args)
            if (a.kind != Arg::Kind::Int)
                throw ArityError("GF takes one or two integer arguments", a.line, a.column);
        RingExpr e;
        e.kind = ExprKind::GF;
        if (args.size() == 1) {
            const std::int64_t q = args[0].value;
            if (q < 2) throw RangeError("GF requires q >= 2", args[0].line, args[0].column);
            if (auto pk = prime_power_split(q)) {
                e.ints = {pk->first, pk->second};
            } else {
                // Not a prime power; evaluation reports NotPrime.
                e.ints = {q, 1};
            }
        } else if (args.size() == 2) {
            if (args[0].value < 2 || args[1].value < 1)
                throw RangeError("GF(p, k) requires p >= 2 and k >= 1", head.line, head.column);
            e.ints = {args[0].value, args[1].value};
        } else {
            throw ArityError("GF takes one or two integer arguments", head.line, head.column);
        }
        return e;
    }

    std::vector<Arg> parse_args() {
        if (lex_.peek().kind != Token::Kind::LParen) expected(lex_.peek(), "'('");
        lex_.take();
        std::vector<Arg> args;
        if (lex_.peek().kind == Token::Kind::RParen) {
            lex_.take();
            return args;
        }
        while (true) {
            args.push_back(parse_arg());
            const Token t = lex_.take();
            if (t.kind == Token::Kind::RParen) break;
            if (t.kind != Token::Kind::Comma) expected(t, "',' or ')'");
        }
        return args;
    }

    Arg parse_arg() {
        const Token& t = lex_.peek();
        Arg a;
        a.line = t.line;
        a.column = t.column;
        if (t.kind == Token::Kind::Int) {
            a.kind = Arg::Kind::Int;
            a.value = lex_.take().value;
            return a;
        }
        if (t.kind != Token::Kind::Ident) expected(t, "an argument");
        // Key-value arguments.
        if (t.text == "alpha" || t.text == "s") {
            const Token key = lex_.take();
            if (lex_.peek().kind != Token::Kind::Equals) expected(lex_.peek(), "'='");
            lex_.take();
            if (key.text == "alpha") {
                const Token v = lex_.take();
                if (v.kind != Token::Kind::Ident || (v.text != "id" && v.text != "frobenius"))
                    expected(v, "'id' or 'frobenius'");
                a.kind = Arg::Kind::Alpha;
                a.name = v.text;
                return a;
            }
            const Token v = lex_.take();
            if (v.kind != Token::Kind::Int) expected(v, "an element index");
            a.kind = Arg::Kind::Scalar;
            a.value = v.value;
            return a;
        }
        // Sub-expression or group name.
        const bool is_expr = (t.text.size() > 1 && t.text[0] == 'Z' && all_digits(t.text.substr(1))) ||
                             t.text == "GF" || construction_names().count(t.text) > 0;
        if (is_expr) {
            a.kind = Arg::Kind::Expr;
            a.expr = parse_expr();
            return a;
        }
        a.kind = Arg::Kind::Name;
        a.name = lex_.take().text;
        return a;
    }

    RingExpr assemble(ExprKind kind, const Token& head, std::vector<Arg> args) {
        RingExpr e;
        e.kind = kind;
        auto arity_fail = [&](const std::string& msg) -> RingExpr {
            throw ArityError(to_string(kind) + ": " + msg, head.line, head.column);
        };
        auto want_expr = [&](std::size_t i) -> RingExpr {
            if (i >= args.size() || args[i].kind != Arg::Kind::Expr)
                arity_fail("argument " + std::to_string(i + 1) + " must be a ring expression");
            return std::move(args[i].expr);
        };
        auto want_int = [&](std::size_t i) -> std::int64_t {
            if (i >= args.size() || args[i].kind != Arg::Kind::Int)
                arity_fail("argument " + std::to_string(i + 1) + " must be an integer");
            return args[i].value;
        };
        switch (kind) {
            case ExprKind::Prod: {
                if (args.empty()) arity_fail("needs at least one factor");
                for (std::size_t i = 0; i < args.size(); ++i)
                    e.children.push_back(want_expr(i));
                break;
            }
            case ExprKind::M:
            case ExprKind::T: {
                if (args.size() != 2) arity_fail("takes (n, R)");
                e.ints.push_back(want_int(0));
                if (e.ints[0] < 1)
                    throw RangeError(to_string(kind) + " requires n >= 1", head.line, head.column);
                e.children.push_back(want_expr(1));
                break;
            }
            case ExprKind::Tskew: {
                if (args.size() != 2 && args.size() != 3) arity_fail("takes (n, R[, alpha=...])");
                e.ints.push_back(want_int(0));
                if (e.ints[0] < 1)
                    throw RangeError("Tskew requires n >= 1", head.line, head.column);
                e.children.push_back(want_expr(1));
                e.alpha = "id";
                if (args.size() == 3) {
                    if (args[2].kind != Arg::Kind::Alpha) arity_fail("third argument must be alpha=");
                    e.alpha = args[2].name;
                }
                break;
            }
            case ExprKind::PolyMod: {
                if (args.size() != 2) arity_fail("takes (R, n)");
                e.children.push_back(want_expr(0));
                e.ints.push_back(want_int(1));
                if (e.ints[0] < 2)
                    throw RangeError("PolyMod requires n >= 2", head.line, head.column);
                break;
            }
            case ExprKind::SkewPolyMod: {
                if (args.size() != 2 && args.size() != 3) arity_fail("takes (R, n[, alpha=...])");
                e.children.push_back(want_expr(0));
                e.ints.push_back(want_int(1));
                if (e.ints[0] < 2)
                    throw RangeError("SkewPolyMod requires n >= 2", head.line, head.column);
                e.alpha = "id";
                if (args.size() == 3) {
                    if (args[2].kind != Arg::Kind::Alpha) arity_fail("third argument must be alpha=");
                    e.alpha = args[2].name;
                }
                break;
            }
            case ExprKind::TrivExt:
            case ExprKind::DT:
            case ExprKind::MoritaTriv: {
                if (args.size() != 1) arity_fail("takes (R)");
                e.children.push_back(want_expr(0));
                break;
            }
            case ExprKind::Ks: {
                if (args.size() != 2) arity_fail("takes (R, s=...)");
                e.children.push_back(want_expr(0));
                if (args[1].kind != Arg::Kind::Scalar) arity_fail("second argument must be s=");
                if (args[1].value < 0)
                    throw RangeError("element literal must be nonnegative", head.line, head.column);
                e.scalar = args[1].value;
                break;
            }
            case ExprKind::FM: {
                if (args.size() != 3) arity_fail("takes (n, R, s=...)");
                e.ints.push_back(want_int(0));
                if (e.ints[0] < 2) throw RangeError("FM requires n >= 2", head.line, head.column);
                e.children.push_back(want_expr(1));
                if (args[2].kind != Arg::Kind::Scalar) arity_fail("third argument must be s=");
                if (args[2].value < 0)
                    throw RangeError("element literal must be nonnegative", head.line, head.column);
                e.scalar = args[2].value;
                break;
            }
            case ExprKind::GroupRing: {
                if (args.size() != 2) arity_fail("takes (R, GROUPNAME)");
                e.children.push_back(want_expr(0));
                if (args[1].kind != Arg::Kind::Name) arity_fail("second argument must be a group name");
                e.group_name = args[1].name;
                break;
            }
            default:
                arity_fail("unreachable");
        }
        return e;
    }

    Lexer lex_;
};

}  // namespace

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_ring_expr(const RingExpr& e) {
    switch (e.kind) {
        case ExprKind::ZMod:
            return "Z" + std::to_string(e.ints.at(0));
        case ExprKind::GF: {
            std::int64_t q = 1;
            for (std::int64_t i = 0; i < e.ints.at(1); ++i) q *= e.ints.at(0);
            return "GF(" + std::to_string(q) + ")";
        }
        case ExprKind::Prod: {
            std::string s = "Prod(";
            for (std::size_t i = 0; i < e.children.size(); ++i)
                s += (i ? ", " : "") + format_ring_expr(e.children[i]);
            return s + ")";
        }
        case ExprKind::M:
        case ExprKind::T:
            return to_string(e.kind) + "(" + std::to_string(e.ints.at(0)) + ", " +
                   format_ring_expr(e.children.at(0)) + ")";
        case ExprKind::Tskew:
            return "Tskew(" + std::to_string(e.ints.at(0)) + ", " +
                   format_ring_expr(e.children.at(0)) + ", alpha=" + e.alpha + ")";
        case ExprKind::PolyMod:
            return "PolyMod(" + format_ring_expr(e.children.at(0)) + ", " +
                   std::to_string(e.ints.at(0)) + ")";
        case ExprKind::SkewPolyMod:
            return "SkewPolyMod(" + format_ring_expr(e.children.at(0)) + ", " +
                   std::to_string(e.ints.at(0)) + ", alpha=" + e.alpha + ")";
        case ExprKind::TrivExt:
        case ExprKind::DT:
        case ExprKind::MoritaTriv:
            return to_string(e.kind) + "(" + format_ring_expr(e.children.at(0)) + ")";
        case ExprKind::Ks:
            return "Ks(" + format_ring_expr(e.children.at(0)) + ", s=" +
                   std::to_string(e.scalar.value_or(0)) + ")";
        case ExprKind::FM:
            return "FM(" + std::to_string(e.ints.at(0)) + ", " +
                   format_ring_expr(e.children.at(0)) + ", s=" +
                   std::to_string(e.scalar.value_or(0)) + ")";
        case ExprKind::GroupRing:
            return "GroupRing(" + format_ring_expr(e.children.at(0)) + ", " + e.group_name + ")";
    }
    return "?";
}

namespace {

Elem scalar_of(const RingExpr& e, const RingPtr& child) {
    const std::int64_t s = e.scalar.value_or(0);
    if (s < 0 || static_cast<std::uint64_t>(s) >= child->order())
        throw RangeError("element literal " + std::to_string(s) + " out of range for " +
                             child->label() + " of order " + std::to_string(child->order()),
                         0, 0);
    return static_cast<Elem>(s);
}

Endomorphism endo_of(const std::string& alpha, const RingPtr& child) {
    if (alpha == "frobenius") return frobenius_endo(child);
    return identity_endo(child);
}

}  // namespace

RingPtr eval_ring_expr(const RingExpr& e, const EvalConfig& cfg) {
    RingPtr result;
    switch (e.kind) {
        case ExprKind::ZMod: {
            const std::int64_t n = e.ints.at(0);
            if (static_cast<std::uint64_t>(n) > cfg.max_order)
                throw BudgetExceeded("Z" + std::to_string(n) + " exceeds the order budget of " +
                                     std::to_string(cfg.max_order));
            result = ring_zn(static_cast<std::uint64_t>(n));
            break;
        }
        case ExprKind::GF:
            result = ring_gf(static_cast<std::uint64_t>(e.ints.at(0)),
                             static_cast<std::uint32_t>(e.ints.at(1)), cfg.max_order);
            break;
        case ExprKind::Prod: {
            std::vector<RingPtr> factors;
            for (const RingExpr& c : e.children) factors.push_back(eval_ring_expr(c, cfg));
            result = product(factors, cfg.max_order);
            break;
        }
        case ExprKind::M:
            result = matrix_ring(static_cast<std::size_t>(e.ints.at(0)),
                                 eval_ring_expr(e.children.at(0), cfg), cfg.max_order);
            break;
        case ExprKind::T:
            result = upper_triangular(static_cast<std::size_t>(e.ints.at(0)),
                                      eval_ring_expr(e.children.at(0), cfg), cfg.max_order);
            break;
        case ExprKind::Tskew: {
            RingPtr child = eval_ring_expr(e.children.at(0), cfg);
            result = skew_triangular(static_cast<std::size_t>(e.ints.at(0)), child,
                                     endo_of(e.alpha, child), cfg.max_order);
            break;
        }
        case ExprKind::PolyMod:
            result = poly_mod(eval_ring_expr(e.children.at(0), cfg),
                              static_cast<std::size_t>(e.ints.at(0)), cfg.max_order);
            break;
        case ExprKind::SkewPolyMod: {
            RingPtr child = eval_ring_expr(e.children.at(0), cfg);
            result = skew_poly_mod(child, endo_of(e.alpha, child),
                                   static_cast<std::size_t>(e.ints.at(0)), cfg.max_order);
            break;
        }
        case ExprKind::TrivExt:
            result = trivial_extension(eval_ring_expr(e.children.at(0), cfg), cfg.max_order);
            break;
        case ExprKind::DT:
            result = dt_extension(eval_ring_expr(e.children.at(0), cfg), cfg.max_order);
            break;
        case ExprKind::Ks: {
            RingPtr child = eval_ring_expr(e.children.at(0), cfg);
            result = ks_ring(child, scalar_of(e, child), cfg.max_order);
            break;
        }
        case ExprKind::FM: {
            RingPtr child = eval_ring_expr(e.children.at(0), cfg);
            result = formal_matrix(static_cast<std::size_t>(e.ints.at(0)), child,
                                   scalar_of(e, child), cfg.max_order);
            break;
        }
        case ExprKind::MoritaTriv:
            result = trivial_morita(eval_ring_expr(e.children.at(0), cfg), cfg.max_order);
            break;
        case ExprKind::GroupRing:
            result = group_ring(eval_ring_expr(e.children.at(0), cfg),
                                group_catalog(e.group_name), cfg.max_order);
            break;
    }
    if (cfg.force_validate) {
        ValidationReport rep = validate_ring(result, cfg.validate_budget);
        if (rep.status == ValidationReport::Status::Violation)
            throw RinglabError("validation of " + result->label() + " failed: " + rep.detail);
    }
    return result;
}

std::vector<std::string> parse_catalog_lines(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos) {
            const auto last = line.find_last_not_of(" \t\r");
            out.emplace_back(line.substr(first, last - first + 1));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace ringlab
