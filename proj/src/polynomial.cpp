#include "sullivan/polynomial.hpp"

#include <cctype>
#include <string>

#include "sullivan/error.hpp"

namespace sullivan {

namespace {

class Parser {
public:
    Parser(const GeneratorsPtr& gens, std::string_view text) : gens_(gens)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                text_ += c;
    }

    AlgebraElement parse()
    {
        if (text_.empty())
            fail("empty polynomial");
        AlgebraElement out(gens_);
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        else if (peek() == '+') {
            ++pos_;
        }
        out += signed_term(negative);
        while (pos_ < text_.size()) {
            const char c = text_[pos_++];
            if (c != '+' && c != '-')
                fail(std::string("expected '+' or '-', found '") + c + "'");
            out += signed_term(c == '-');
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    std::string digits()
    {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            s += text_[pos_++];
        if (s.empty())
            fail("expected digits");
        return s;
    }

    AlgebraElement signed_term(bool negative)
    {
        Rational coef = 1;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos)
                    fail("zero denominator");
                coef = Rational(num + "/" + den);
                coef.canonicalize();
            }
            else {
                coef = Rational(num);
            }
            if (peek() == '*')
                ++pos_;
            else
                need_factor = false;
        }
        AlgebraElement t = AlgebraElement::constant(gens_, negative ? Rational(-coef) : coef);
        if (!need_factor)
            return t;
        t = t * factor();
        while (peek() == '*') {
            ++pos_;
            t = t * factor();
        }
        return t;
    }

    AlgebraElement factor()
    {
        const char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            fail("expected a generator name");
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            name += text_[pos_++];
        AlgebraElement g = AlgebraElement::generator(gens_, name);
        if (peek() != '^')
            return g;
        ++pos_;
        const std::string e = digits();
        if (e.size() > 6)
            fail("exponent too large");
        return power(g, static_cast<unsigned>(std::stoul(e)));
    }

    GeneratorsPtr gens_;
    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(const GeneratorsPtr& gens, std::string_view text)
{
    return Parser(gens, text).parse();
}

}  // namespace sullivan
