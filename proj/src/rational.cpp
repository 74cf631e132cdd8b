#include "sctd/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sctd {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit((unsigned char)c)) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = s.substr(0, slash);
        const auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational literal: " +
                                        std::string(text));
        const Integer d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        value = Rational(Integer{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto whole = s.substr(0, dot);
        const auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw std::invalid_argument("malformed decimal literal: " +
                                        std::string(text));
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const Integer whole_part = whole.empty() ? Integer{0} : Integer{std::string(whole)};
        value = Rational(whole_part * scale + Integer{std::string(frac)}, scale);
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational literal: " +
                                        std::string(text));
        value = Rational(Integer{std::string(s)});
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const std::optional<Rational>& r)
{
    return r ? to_string(*r) : std::string("undefined");
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

}  // namespace sctd
