#include "orbitmult/rational.hpp"

#include <cctype>

namespace orbitmult {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw ParseError("malformed rational '" + text + "'");
    }
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

std::string format_rational(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace orbitmult
