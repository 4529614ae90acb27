#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace genuslab {

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class pow_ui(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// x < 2^e, decided from the bit length alone (exact, no huge power needed).
inline bool less_than_pow2(const mpz_class& x, unsigned long e) {
    if (x <= 0) return true;
    return mpz_sizeinbase(x.get_mpz_t(), 2) <= e;
}

inline std::string to_string(const mpz_class& x) { return x.get_str(); }

}  // namespace genuslab
