#include "cayley/rational.hpp"

#include <sstream>

namespace cayley {

std::string to_fraction_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) {
        os << '/' << denominator(q);
    }
    return os.str();
}

double to_approx(const Rational& q) {
    return q.convert_to<double>();
}

Rational make_rational(long long num, long long den) {
    return Rational(BigInt(num), BigInt(den));
}

} // namespace cayley
