#ifndef HTDYN_RATIONAL_HPP
#define HTDYN_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace htdyn {

using Int = mpz_class;
using Rat = mpq_class;

struct invalid_argument_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when a height/minimal-polynomial consumer requires a certified
// irreducible minimal polynomial and factorization gave up.
struct factorization_inconclusive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw invalid_argument_error("rational with zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline int sign(const Int& z) { return sgn(z); }
inline int sign(const Rat& q) { return sgn(q); }

inline const Int num(const Rat& q) { return q.get_num(); }
inline const Int den(const Rat& q) { return q.get_den(); }

inline Int pow_int(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    return Rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

inline Int abs_int(const Int& z) { return abs(z); }
inline Rat abs_rat(const Rat& q) { return abs(q); }

// floor(sqrt(z)) for z >= 0
inline Int isqrt(const Int& z) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p", "-p", "p/q". Throws on malformed input.
Rat parse_rat(const std::string& s);

} // namespace htdyn

#endif
