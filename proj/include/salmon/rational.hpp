#pragma once

// Exact arithmetic substrate. Integers and rationals are GMP-backed;
// everything downstream (polynomials, tensors, linear algebra) is exact
// unless it explicitly opts into numeric mode.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace salmon {

using Int = mpz_class;
using Rat = mpq_class;

// Input that violates a documented precondition (bad dims, malformed file, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed; indicates a bug, not bad input.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

#define SALMON_CHECK(cond, msg)                          \
    do {                                                 \
        if (!(cond)) throw ::salmon::contract_error(msg); \
    } while (0)

inline Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw input_error("not an integer: '" + s + "'");
    }
}

// Accepts "p" or "p/q"; result is canonicalized.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        Rat q = slash == std::string::npos ? Rat(Int(s)) : Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        if (q.get_den() == 0) throw input_error("zero denominator: '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("not a rational: '" + s + "'");
    }
}

// mpq_class(p, q) does not canonicalize on its own; use this whenever the
// numerator/denominator pair is not already coprime.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw input_error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sign_of(const Int& z) { return sgn(z); }
inline int sign_of(const Rat& q) { return sgn(q); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace salmon
