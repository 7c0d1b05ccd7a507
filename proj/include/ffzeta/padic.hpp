#pragma once

// Fixed-precision p-adic integers (residues mod p^M), exact valuations and
// Teichmuller lifting.  Precision is absolute: a value is a residue in
// [0, p^M); a residue of 0 only certifies valuation >= M.

#include <cstdint>

#include <gmpxx.h>

#include "ffzeta/error.hpp"
#include "ffzeta/rational.hpp"

namespace ffz {

struct PadicInt {
    mpz_class p;
    int precision = 0;  // M
    mpz_class value;    // in [0, p^M)

    mpz_class modulus() const { return pow_z(p, static_cast<unsigned long>(precision)); }

    // min(ord_p(value), M); at_least_M marks the residue-zero case.
    struct Valuation {
        long v;
        bool at_least_M;
    };
    Valuation known_valuation() const;
};

PadicInt make_padic(const mpz_class& p, int precision, const mpz_class& value);

PadicInt padic_add(const PadicInt& x, const PadicInt& y);
PadicInt padic_mul(const PadicInt& x, const PadicInt& y);
PadicInt padic_pow(const PadicInt& x, const mpz_class& e);

// The unique root of x^p = x in Z/p^M congruent to `residue` mod p,
// computed by iterating x -> x^p until fixed.
PadicInt teichmuller(const mpz_class& p, const mpz_class& residue, int precision);

} // namespace ffz
