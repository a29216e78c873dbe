#include "hcara/rational.hpp"

#include "hcara/errors.hpp"

#include <cctype>

namespace hcara {
namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
    const std::string_view text = trim(raw);
    if (text.empty()) throw InputError("empty rational literal");
    if (text.find_first_of(".eE") != std::string_view::npos) {
        throw InputError("floating-point literal '" + std::string(text) +
                         "' rejected; write it as an exact fraction such as 1/2");
    }

    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    }

    Integer num{std::string(num_text)};
    Integer den{std::string(den_text)};
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace hcara
