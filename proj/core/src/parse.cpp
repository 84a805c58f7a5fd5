#include "qkoszul/parse.hpp"

#include "qkoszul/errors.hpp"

#include <gmpxx.h>

#include <cctype>
#include <functional>

namespace qkoszul {

namespace {

constexpr std::string_view unicode_minus = "\xE2\x88\x92";

class Parser {
public:
    Parser(std::string_view text, Field field) : s_(text), field_(field) {}

    std::size_t pos() const { return pos_; }

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        ws();
        return pos_ == s_.size();
    }
    char peek() {
        ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    // Length of a minus sign at the cursor, 0 if none.
    std::size_t minus() {
        ws();
        if (pos_ < s_.size() && s_[pos_] == '-') return 1;
        if (s_.substr(pos_, unicode_minus.size()) == unicode_minus) return unicode_minus.size();
        return 0;
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

    // Identifier at the cursor without consuming it.
    std::string_view word() {
        ws();
        std::size_t end = pos_;
        while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
        return s_.substr(pos_, end - pos_);
    }
    bool at_letter() {
        const auto w = word();
        return w == "x" || w == "xt" || w == "chi";
    }
    bool at_variable() {
        const auto w = word();
        return w == "q" || w == "z";
    }

    int integer() {
        ws();
        const std::size_t start = pos_;
        int sign = 1;
        if (const std::size_t m = minus()) {
            sign = -1;
            pos_ += m;
        } else if (peek() == '+') {
            ++pos_;
        }
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        if (pos_ - digits > 9) {
            pos_ = digits;
            fail("integer out of range");
        }
        return sign * std::stoi(std::string(s_.substr(digits, pos_ - digits)));
    }

    Scalar sum() {
        Scalar r = product();
        for (;;) {
            if (const std::size_t m = minus()) {
                pos_ += m;
                r -= product();
            } else if (eat('+')) {
                r += product();
            } else {
                return r;
            }
        }
    }

    // Stops in front of "* x[..]" so the caller can read the monomial.
    Scalar product() {
        Scalar r = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                const std::size_t save = pos_;
                ++pos_;
                if (at_letter()) {
                    pos_ = save;
                    return r;
                }
                r *= unary();
            } else if (c == '/') {
                ++pos_;
                const std::size_t at = pos_;
                const Scalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r /= d;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || at_variable()) {
                r *= power();
            } else {
                return r;
            }
        }
    }

    Scalar unary() {
        if (const std::size_t m = minus()) {
            pos_ += m;
            return -unary();
        }
        if (eat('+')) return unary();
        return power();
    }

    Scalar power() {
        const std::size_t at = (ws(), pos_);
        Scalar base = atom();
        if (!eat('^')) return base;
        const int k = integer();
        if (k < 0 && base.is_zero()) throw ParseError("negative power of zero", at);
        return base.pow(k);
    }

    Scalar atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar r = sum();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return field_.from_rational(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        const auto w = word();
        if (w.empty()) fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
        if (w == "q" || w == "z") {
            if (w[0] != field_.variable())
                throw ModeMismatch("variable '" + std::string(w) + "' at position " + std::to_string(pos_) +
                                   " does not match " + field_.describe() + " (use '" + field_.variable() + "')");
            pos_ += 1;
            return field_.zeta();
        }
        fail("unknown identifier '" + std::string(w) + "'");
    }

    // sign? coefficient? '*'? letters*, separated by + and -. `letter` consumes one
    // letter and folds it into the term's monomial.
    void combination(const std::function<void()>& begin_term, const std::function<void()>& letter,
                     const std::function<void(const Scalar&)>& end_term) {
        if (done()) fail("empty expression");
        bool first = true;
        while (!done()) {
            Scalar sign = field_.one();
            if (const std::size_t m = minus()) {
                pos_ += m;
                sign = -sign;
            } else if (eat('+')) {
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            begin_term();
            Scalar coeff = field_.one();
            bool any = false;
            if (!at_letter()) {
                coeff = product();
                any = true;
                if (eat('*') && !at_letter()) fail("expected a monomial after '*'");
            }
            while (at_letter()) {
                letter();
                any = true;
            }
            if (!any) fail("expected a term");
            end_term(sign * coeff);
        }
    }

    Field field() const { return field_; }
    void advance(std::size_t k) { pos_ += k; }

private:
    std::string_view s_;
    Field field_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, Field field) {
    Parser p(text, field);
    if (p.done()) p.fail("empty expression");
    Scalar r = p.sum();
    if (!p.done()) p.fail(std::string("unexpected '") + p.peek() + "'");
    return r;
}

XiPoly parse_xi(std::string_view text, Field field, int n) {
    Parser p(text, field);
    std::vector<std::pair<Scalar, XiMonomial>> terms;
    XiMonomial word;
    int tilde = -1;  // unknown until the first letter
    p.combination([&] { word.clear(); },
                  [&] {
                      const std::size_t at = p.pos();
                      const bool t = p.word() == "xt";
                      if (p.word() == "chi") p.fail("chi is not a matrix coefficient");
                      if (tilde >= 0 && tilde != static_cast<int>(t))
                          throw ParseError("x and xt letters cannot be mixed", at);
                      tilde = t;
                      p.advance(t ? 2 : 1);
                      p.expect('[');
                      const std::size_t ir = p.pos();
                      const int r = p.integer();
                      p.expect(',');
                      const std::size_t is = p.pos();
                      const int s = p.integer();
                      p.expect(']');
                      for (auto [v, where] : {std::pair{r, ir}, std::pair{s, is}})
                          if (v < 1 || (n > 0 && v > n))
                              throw ParseError("index " + std::to_string(v) + " out of range", where);
                      if (t && r >= s) throw ParseError("xt[r,s] needs r < s", ir);
                      word.emplace_back(r, s);
                  },
                  [&](const Scalar& c) { terms.emplace_back(c, word); });
    XiPoly out(field, tilde == 1);
    for (const auto& [c, m] : terms) out.add_term(m, c);
    return out;
}

GroupAlgebraElement parse_group_element(std::string_view text, Field field, int n) {
    Parser p(text, field);
    std::vector<std::pair<Scalar, Weight>> terms;
    Weight lambda;
    p.combination([&] { lambda = Weight(); },
                  [&] {
                      if (p.word() != "chi") p.fail("expected chi[...]");
                      p.advance(3);
                      p.expect('[');
                      const std::size_t at = p.pos();
                      std::vector<int> c{p.integer()};
                      while (p.eat(',')) c.push_back(p.integer());
                      p.expect(']');
                      if (n <= 0) n = static_cast<int>(c.size());
                      if (static_cast<int>(c.size()) != n)
                          throw ParseError("weight has " + std::to_string(c.size()) + " coordinates, expected " +
                                               std::to_string(n),
                                           at);
                      lambda = lambda.n() ? lambda + Weight(std::move(c)) : Weight(std::move(c));
                  },
                  [&](const Scalar& c) { terms.emplace_back(c, lambda); });
    if (n <= 0) throw ParseError("cannot infer the rank without a chi term", 0);
    GroupAlgebraElement out(n, field);
    for (auto& [c, l] : terms) out.add_term(l.n() ? l : Weight(n), c);
    return out;
}

}  // namespace qkoszul
