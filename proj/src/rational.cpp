#include "stocenv/rational.hpp"

#include <cctype>
#include <cmath>

#include "stocenv/errors.hpp"

namespace stocenv {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw ParseError("bad rational literal: " + text);
        Integer n(num), d(den);
        if (d == 0) throw ParseError("zero denominator: " + text);
        Rational q(n, d);
        q.canonicalize();
        return q;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
        std::string sign;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            sign = head.substr(0, 1);
            head = head.substr(1);
        }
        if (head.empty() && frac.empty()) throw ParseError("bad decimal literal: " + text);
        if (!head.empty() && !is_integer_token(head)) throw ParseError("bad decimal literal: " + text);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad decimal literal: " + text);
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer digits(head.empty() ? std::string("0") : head);
        digits *= scale;
        if (!frac.empty()) digits += Integer(frac);
        Rational q(digits, scale);
        q.canonicalize();
        if (sign == "-") q = -q;
        return q;
    }

    if (!is_integer_token(s)) throw ParseError("bad rational literal: " + text);
    return Rational(Integer(s));
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite double");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

}  // namespace stocenv
