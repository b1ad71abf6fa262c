#include "shw/rational.hpp"

#include <stdexcept>

namespace shw {

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0) throw std::domain_error("pow_rational: 0 to a negative power");
    Rational acc = 1;
    Rational b = e > 0 ? base : Rational(1) / base;
    for (long i = 0; i < (e > 0 ? e : -e); ++i) acc *= b;
    return acc;
}

std::string format_fraction(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    q.canonicalize();
    return q;
}

}  // namespace shw
