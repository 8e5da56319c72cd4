#ifndef QMF_RATIONAL_HPP
#define QMF_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmf {

// Exact scalars. Every computation in this project runs over Q; there is no
// floating point anywhere. mpq_class keeps values canonical (reduced, positive
// denominator, 0 = 0/1), which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// Parses "a" or "a/b" with optional sign, decimal digits only.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rational(Int(s), Int(1));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;  // base canonical => powers canonical
}

inline Int pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace qmf

#endif
