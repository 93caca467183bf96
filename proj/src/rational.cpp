#include "hankelforge/rational.hpp"

#include <cctype>
#include <ostream>

namespace hankelforge {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("Rational: malformed '" + s + "'");
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return Rational(num, den);
}

}  // namespace hankelforge
