#pragma once

// Exact rational helpers shared by the zeta, polygon and isocrystal modules:
// p-adic valuations of integers/rationals and dense univariate polynomial
// arithmetic over Q (ascending coefficient order, trailing zeros trimmed).

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ffzeta/error.hpp"

namespace ffz {

using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

// ord_p of a nonzero integer.
long valuation(const mpz_class& x, const mpz_class& p);

// ord_p of a nonzero rational (may be negative).  Throws zero_input on 0.
long valuation(const mpq_class& x, const mpz_class& p);

mpz_class pow_z(const mpz_class& base, unsigned long e);
mpq_class pow_q(const mpq_class& base, long e);

// ---- QPoly utilities ----

void qp_trim(QPoly& f);
int qp_degree(const QPoly& f); // -1 for the zero polynomial
QPoly qp_add(const QPoly& f, const QPoly& g);
QPoly qp_mul(const QPoly& f, const QPoly& g);
QPoly qp_scale(const QPoly& f, const mpq_class& c);
mpq_class qp_eval(const QPoly& f, const mpq_class& x);

// Remainder of f by nonzero g.
QPoly qp_rem(const QPoly& f, const QPoly& g);

// Monic gcd (constant polynomials give gcd 1).
QPoly qp_gcd(QPoly f, QPoly g);

// Exact division; throws inconsistent if the remainder is nonzero.
QPoly qp_divexact(const QPoly& f, const QPoly& g);

QPoly zp_to_qp(const ZPoly& f);

// Conversion that must be integral.
ZPoly qp_to_zp(const QPoly& f, errc on_fail = errc::integrality_violation);

} // namespace ffz
