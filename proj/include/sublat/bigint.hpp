#pragma once

#include <gmpxx.h>

#include <string>

namespace sublat {

using BigInt = mpz_class;

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient n / d for exactly divisible operands.
inline BigInt div_exact(const BigInt& n, const BigInt& d) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Strips every factor p from n (n must be nonzero) and returns how many
/// were removed.
inline int remove_factor(BigInt& n, const BigInt& p) {
    BigInt reduced;
    const auto k = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    n = reduced;
    return static_cast<int>(k);
}

inline bool is_probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline std::string to_decimal(const BigInt& n) { return n.get_str(); }

}  // namespace sublat
