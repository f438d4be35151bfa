#include "tiltwall/rational.hpp"

namespace tiltwall {

std::string to_text(const Rat& x) {
    const Int num = numerator(x);
    const Int den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') i = 1;
        if (i == s.size()) throw ParseError("sign without digits");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw ParseError("invalid character in integer literal: " + std::string(s));
        return Int(std::string(s));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    return Rat(num, den);
}

bool is_integer(const Rat& x) { return denominator(x) == 1; }

Int floor_int(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

Int ceil_int(const Rat& x) { return -floor_int(-x); }

} // namespace tiltwall
