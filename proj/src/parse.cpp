#include "crm/parse.hpp"

#include "crm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace crm {

namespace {

enum class Tok { Num, Ident, Op, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
            out.push_back({Tok::Num, s.substr(start, i - start), start});
        } else if (std::isalpha(c) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else if (std::string("+-*/^()|{}").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Tok::Op, std::string(1, static_cast<char>(c)), start});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, int n) : toks_(tokenize(text)), n_(n) {}

    Poly run() {
        Poly p = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return p;
    }

private:
    std::vector<Token> toks_;
    std::size_t k_ = 0;
    int n_;
    int absDepth_ = 0;  // inside |...| a bar closes; outside it opens an implicit factor

    const Token& peek() const { return toks_[k_]; }
    bool isOp(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
    void expect(const char* op) {
        if (!isOp(op)) fail(std::string("expected '") + op + "'");
        ++k_;
    }

    Poly expr() {
        Poly acc = term();
        while (isOp("+") || isOp("-")) {
            bool minus = peek().text == "-";
            ++k_;
            Poly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    bool startsPrimary() const {
        const Token& t = peek();
        return t.kind == Tok::Num || t.kind == Tok::Ident ||
               (t.kind == Tok::Op && (t.text == "(" || (t.text == "|" && absDepth_ == 0)));
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (isOp("*")) {
                ++k_;
                acc = acc * unary();
            } else if (isOp("/")) {
                std::size_t at = peek().pos;
                ++k_;
                Poly d = unary();
                if (d.total_degree() != 0) throw ParseError("division only by nonzero constants", at);
                acc *= Complex(1) / d.constant_term();
            } else if (startsPrimary()) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (isOp("-")) {
            ++k_;
            return -unary();
        }
        if (isOp("+")) {
            ++k_;
            return unary();
        }
        return power();
    }

    unsigned exponent() {
        bool braced = isOp("{") || isOp("(");
        std::string close = isOp("{") ? "}" : ")";
        if (braced) ++k_;
        if (peek().kind != Tok::Num || peek().text.find('.') != std::string::npos)
            fail("exponent must be a nonnegative integer");
        unsigned long e = std::stoul(peek().text);
        if (e > 10000) fail("exponent too large");
        ++k_;
        if (braced) expect(close.c_str());
        return static_cast<unsigned>(e);
    }

    Poly power() {
        if (isOp("|")) {
            std::size_t at = peek().pos;
            ++k_;
            ++absDepth_;
            Poly inner = expr();
            --absDepth_;
            expect("|");
            if (!isOp("^")) throw ParseError("modulus must be raised to an even power", at);
            ++k_;
            std::size_t epos = peek().pos;
            unsigned e = exponent();
            if (e % 2 != 0) throw ParseError("odd power of a modulus is not polynomial", epos);
            return (inner * inner.conj()).pow(e / 2);
        }
        Poly base = primary();
        if (isOp("^")) {
            ++k_;
            base = base.pow(exponent());
        }
        return base;
    }

    int varIndex(const std::string& digits, std::size_t pos) const {
        int idx = std::stoi(digits);
        if (idx < 1) throw ParseError("variable index must start at 1", pos);
        if (idx > n_)
            throw DimensionError("variable index " + std::to_string(idx) + " exceeds dimension " +
                                 std::to_string(n_));
        return idx - 1;
    }

    Poly call() {
        expect("(");
        int saved = absDepth_;
        absDepth_ = 0;
        Poly p = expr();
        absDepth_ = saved;
        expect(")");
        return p;
    }

    Poly primary() {
        const Token t = peek();
        if (t.kind == Tok::Num) {
            ++k_;
            return Poly::constant(n_, Complex(parse_rational(t.text)));
        }
        if (t.kind == Tok::Op && t.text == "(") return call();
        if (t.kind != Tok::Ident) fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        ++k_;
        static const std::regex var(R"((z|zb|zbar)([0-9]+))");
        std::smatch m;
        if (std::regex_match(t.text, m, var)) {
            int j = varIndex(m[2].str(), t.pos);
            return m[1].str() == "z" ? Poly::z(n_, j) : Poly::zbar(n_, j);
        }
        if (t.text == "i" || t.text == "I") return Poly::constant(n_, Complex::i());
        if (t.text == "Re") return call().real_part();
        if (t.text == "Im") return call().imag_part();
        if (t.text == "conj") return call().conj();
        throw ParseError("unknown identifier '" + t.text + "'", t.pos);
    }
};

}  // namespace

Poly parse_expression(const std::string& text, int n) {
    if (n < 1) throw DimensionError("dimension must be positive");
    return Parser(text, n).run();
}

HermPoly parse_poly(const std::string& text, int n) {
    return HermPoly(parse_expression(text, n));
}

int infer_dimension(const std::string& text) {
    static const std::regex var(R"(\b(?:z|zb|zbar)([0-9]+)\b)");
    int n = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
        n = std::max(n, std::stoi((*it)[1].str()));
    return n;
}

}  // namespace crm
