#include "qpd/rational.hpp"

#include <cctype>

#include "qpd/errors.hpp"

namespace qpd {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body;
    std::string den = "1";
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorKind::SyntaxError, "malformed rational '" + text + "'");
    }
    Rational value{mpz_class(num), mpz_class(den)};
    if (value.get_den() == 0) {
        throw Error(ErrorKind::SyntaxError, "zero denominator in '" + text + "'");
    }
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

} // namespace qpd
