#include "fracdecomp/rational.hpp"

#include <cctype>
#include <ios>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

namespace {

bool is_integer_text(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
        throw InputError("malformed rational '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string format_rational(const Rational& value)
{
    return numerator_of(value).str() + "/" + denominator_of(value).str();
}

std::string format_real(const Real& value, int digits)
{
    return value.str(digits, std::ios_base::fixed);
}

}  // namespace fracdecomp
