#include <cctype>

#include "epsilon/error.hpp"
#include "epsilon/sheaf.hpp"

namespace eps {

namespace {

class Parser {
public:
    Parser(const FqPtr &F, const std::string &text) : F_(F), s_(text) {}

    RatFunc ratfunc_only() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

    SheafExpr sheaf() {
        std::vector<KummerFactor> kummer;
        std::vector<ASFactor> as;
        CycNum twist(1);
        for (;;) {
            skip();
            std::string word = ident();
            if (word == "kummer") {
                expect('(');
                skip();
                if (ident() != "chi") error("expected chi[k]");
                expect('[');
                int64_t k = integer();
                expect(']');
                expect(',');
                RatFunc f = expr();
                expect(')');
                if (f.is_zero()) fail("zero-function", "Kummer argument is the zero function");
                kummer.push_back({k, f});
            } else if (word == "as") {
                expect('(');
                RatFunc c = expr();
                expect(',');
                RatFunc f = expr();
                expect(')');
                if (!c.is_constant() || c.is_zero()) error("Artin-Schreier scalar must be a nonzero constant");
                as.push_back({c.num().coeff(0), f});
            } else if (word == "twist") {
                expect('(');
                size_t start = pos_;
                int depth = 0;
                while (pos_ < s_.size() && !(s_[pos_] == ')' && depth == 0)) {
                    if (s_[pos_] == '(') ++depth;
                    if (s_[pos_] == ')') --depth;
                    ++pos_;
                }
                if (pos_ >= s_.size()) error("unterminated twist(...)");
                CycNum a = CycNum::parse(s_.substr(start, pos_ - start));
                ++pos_;
                if (a.is_zero()) fail("zero-function", "twist by zero");
                twist *= a;
            } else if (word == "const") {
                // nothing
            } else {
                error(word.empty() ? "expected a sheaf term" : "unknown sheaf term '" + word + "'");
            }
            skip();
            if (pos_ == s_.size()) break;
            expect('*');
        }
        return SheafExpr(F_, std::move(kummer), std::move(as), twist, s_);
    }

private:
    [[noreturn]] void error(const std::string &why) const {
        fail("syntax-error", "'" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) error(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string ident() {
        skip();
        size_t st = pos_;
        while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(st, pos_ - st);
    }
    int64_t integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) error("expected an integer");
        if (pos_ - st > 18) error("integer too large");
        int64_t v = std::stoll(s_.substr(st, pos_ - st));
        return neg ? -v : v;
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                r = r + term();
            } else if (peek('-')) {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }
    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r = r * unary();
            } else if (peek('/')) {
                ++pos_;
                RatFunc d = unary();
                if (d.is_zero()) error("division by zero");
                r = r / d;
            } else {
                return r;
            }
        }
    }
    RatFunc unary() {
        if (peek('-')) {
            ++pos_;
            return RatFunc::constant(F_, 0) - unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }
    RatFunc power() {
        RatFunc base = atom();
        if (peek('^')) {
            ++pos_;
            int64_t e = integer();
            if (e < 0 && base.is_zero()) error("negative power of zero");
            return base.pow(e);
        }
        return base;
    }
    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Int v(s_.substr(st, pos_ - st));
            Int r = v % F_->p();
            return RatFunc::constant(F_, F_->from_int(r.get_si()));
        }
        std::string w = ident();
        if (w == "x") return RatFunc::x(F_);
        if (w == "g") {
            if (F_->f() == 1) error("'g' names the root of the defining polynomial and needs f > 1");
            return RatFunc::constant(F_, static_cast<Elem>(F_->p()));
        }
        error(w.empty() ? "expected a term" : "unknown symbol '" + w + "'");
    }

    FqPtr F_;
    std::string s_;
    size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(const FqPtr &F, const std::string &text) { return Parser(F, text).ratfunc_only(); }

SheafExpr parse_sheaf_spec(const FqPtr &F, const std::string &text) { return Parser(F, text).sheaf(); }

} // namespace eps
