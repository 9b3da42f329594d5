#include "artal/rational.hpp"

#include <stdexcept>

namespace artal {

using boost::multiprecision::cpp_int;

std::string format_rational(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

namespace {

cpp_int parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size())
        throw std::invalid_argument(std::string("bad rational \"") + std::string(whole) +
                                    "\": missing digits");
    cpp_int value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("bad rational \"") + std::string(whole) +
                                        "\": unexpected character");
        value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw std::invalid_argument("bad rational: empty string");
    std::string_view trimmed = text.substr(begin, end - begin + 1);

    size_t slash = trimmed.find('/');
    cpp_int num, den;
    if (slash == std::string_view::npos) {
        num = parse_integer(trimmed, text);
        den = 1;
    } else {
        num = parse_integer(trimmed.substr(0, slash), text);
        den = parse_integer(trimmed.substr(slash + 1), text);
    }
    if (den == 0)
        throw std::invalid_argument(std::string("bad rational \"") + std::string(text) +
                                    "\": zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);  // normalized by the backend
}

}  // namespace artal
