#include "qil/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "qil/errors.hpp"

namespace qil {
namespace {

struct Token {
    enum Kind { Plus, Minus, Star, Caret, Int, Ident, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        cur_.line = line_;
        cur_.col = col_;
        cur_.text.clear();
        if (pos_ >= s_.size()) {
            cur_.kind = Token::End;
            return;
        }
        char c = s_[pos_];
        if (c == '+') cur_.kind = Token::Plus;
        else if (c == '-') cur_.kind = Token::Minus;
        else if (c == '*') cur_.kind = Token::Star;
        else if (c == '^') cur_.kind = Token::Caret;
        else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Token::Int;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                cur_.text += s_[pos_];
                bump();
            }
            return;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            cur_.kind = Token::Ident;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                cur_.text += s_[pos_];
                bump();
            }
            return;
        } else {
            throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
        }
        cur_.text = c;
        bump();
    }
    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

struct VarRef {
    std::string name;
    int64_t exp;
    int line, col;
};

struct RawTerm {
    mpz_class coeff;
    int64_t qexp;
    std::vector<VarRef> vars;
};

int64_t parse_exponent(Lexer& lx) {
    bool neg = false;
    if (lx.peek().kind == Token::Minus) {
        lx.take();
        neg = true;
    }
    if (lx.peek().kind != Token::Int)
        throw parse_error(lx.peek().line, lx.peek().col, "expected integer exponent");
    Token t = lx.take();
    if (t.text.size() > 15)
        throw parse_error(t.line, t.col, "exponent out of range");
    int64_t v = std::stoll(t.text);
    return neg ? -v : v;
}

void parse_factor(Lexer& lx, RawTerm& term) {
    Token t = lx.take();
    if (t.kind != Token::Ident)
        throw parse_error(t.line, t.col, "expected variable or q");
    int64_t exp = 1;
    if (lx.peek().kind == Token::Caret) {
        lx.take();
        exp = parse_exponent(lx);
    }
    if (t.text == "q") {
        term.qexp += exp;
        return;
    }
    if (exp < 0)
        throw parse_error(t.line, t.col, "negative exponent on variable " + t.text);
    term.vars.push_back({t.text, exp, t.line, t.col});
}

RawTerm parse_term(Lexer& lx, bool negative) {
    RawTerm term;
    term.coeff = negative ? -1 : 1;
    term.qexp = 0;
    const Token& t = lx.peek();
    if (t.kind == Token::Int) {
        Token n = lx.take();
        term.coeff *= mpz_class(n.text);
    } else if (t.kind == Token::Ident) {
        parse_factor(lx, term);
    } else {
        throw parse_error(t.line, t.col, "expected term");
    }
    while (lx.peek().kind == Token::Star) {
        lx.take();
        parse_factor(lx, term);
    }
    return term;
}

std::vector<RawTerm> parse_raw(const std::string& text) {
    Lexer lx(text);
    std::vector<RawTerm> terms;
    if (lx.peek().kind == Token::End)
        throw parse_error(lx.peek().line, lx.peek().col, "empty input");
    bool neg = false;
    if (lx.peek().kind == Token::Plus) lx.take();
    else if (lx.peek().kind == Token::Minus) {
        lx.take();
        neg = true;
    }
    terms.push_back(parse_term(lx, neg));
    while (lx.peek().kind != Token::End) {
        Token s = lx.take();
        if (s.kind == Token::Plus) neg = false;
        else if (s.kind == Token::Minus) neg = true;
        else throw parse_error(s.line, s.col, "expected '+' or '-'");
        terms.push_back(parse_term(lx, neg));
    }
    return terms;
}

bool is_x_indexed(const std::string& name, int64_t& index) {
    if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return false;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    if (name.size() > 7) return false;
    index = std::stoll(name.substr(1));
    return true;
}

MultiPoly assemble(const std::vector<RawTerm>& terms,
                   const std::map<std::string, int>& slot, int nvars) {
    MultiPoly p(nvars);
    for (const RawTerm& t : terms) {
        ExpVec e(static_cast<size_t>(nvars), 0);
        for (const VarRef& v : t.vars) {
            auto it = slot.find(v.name);
            if (it == slot.end())
                throw parse_error(v.line, v.col, "unknown variable " + v.name);
            e[static_cast<size_t>(it->second)] += v.exp;
        }
        p.add_term(e, QCoef(IntPoly(t.coeff), t.qexp));
    }
    return p;
}

} // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    std::map<std::string, int> slot;
    for (size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = static_cast<int>(i);
    return assemble(parse_raw(text), slot, static_cast<int>(vars.size()));
}

std::pair<MultiPoly, std::vector<std::string>> parse_poly_infer(const std::string& text) {
    std::vector<RawTerm> terms = parse_raw(text);
    std::set<std::string> names;
    for (const RawTerm& t : terms)
        for (const VarRef& v : t.vars) names.insert(v.name);
    bool all_indexed = true;
    int64_t max_index = 0;
    for (const std::string& n : names) {
        int64_t k = 0;
        if (!is_x_indexed(n, k)) {
            all_indexed = false;
            break;
        }
        max_index = std::max(max_index, k);
    }
    std::vector<std::string> vars;
    if (all_indexed) {
        vars = default_var_names(static_cast<int>(max_index));
    } else {
        vars.assign(names.begin(), names.end());
    }
    std::map<std::string, int> slot;
    for (size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = static_cast<int>(i);
    return {assemble(terms, slot, static_cast<int>(vars.size())), vars};
}

QCoef parse_coef(const std::string& text) {
    MultiPoly p = parse_poly(text, {});
    return p.constant_coeff();
}

namespace {

void append_piece(std::string& out, bool first, const mpz_class& a, int64_t qexp,
                  const ExpVec& e, const std::vector<std::string>& vars) {
    mpz_class mag = abs(a);
    if (sgn(a) < 0) out += '-';
    else if (!first) out += '+';
    std::vector<std::string> parts;
    if (mag != 1) parts.push_back(mag.get_str());
    if (qexp != 0) parts.push_back(qexp == 1 ? "q" : "q^" + std::to_string(qexp));
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        parts.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
    }
    if (parts.empty()) parts.push_back("1");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '*';
        out += parts[i];
    }
}

} // namespace

std::string poly_to_string(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    if (static_cast<int>(vars.size()) != p.nvars()) throw dimension_mismatch();
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const IntPoly& num = it->second.numerator();
        for (int64_t i = num.degree(); i >= 0; --i) {
            const mpz_class& a = num.coeff(i);
            if (a == 0) continue;
            append_piece(out, first, a, i + it->second.qshift(), it->first, vars);
            first = false;
        }
    }
    return out;
}

std::string monomial_to_string(const ExpVec& e, const std::vector<std::string>& vars) {
    std::string out;
    append_piece(out, true, 1, 0, e, vars);
    return out;
}

std::string coef_to_string(const QCoef& c) {
    return poly_to_string(MultiPoly::constant(0, c), {});
}

std::vector<std::string> default_var_names(int n) {
    std::vector<std::string> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::string MultiPoly::to_string() const {
    if (nvars_ == 1) return poly_to_string(*this, {"y"});
    return poly_to_string(*this, default_var_names(nvars_));
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

} // namespace qil
