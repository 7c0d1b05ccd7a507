#pragma once

// Zeta functions from point counts: exponential series, rational-function
// reconstruction, curve numerators with the functional-equation symmetry,
// trace-formula counts by Newton's identities, and slope / root-modulus
// consistency checks on the factored form.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ffzeta/polygon.hpp"
#include "ffzeta/rational.hpp"

namespace ffz {

struct CountSequence {
    std::int64_t q = 0;              // cardinality of the base field
    std::vector<mpz_class> counts;   // N_1, N_2, ...
};

// Coefficients 0..order of exp(sum_{a<=order} N_a t^a / a).  Every
// coefficient must come out a nonnegative integer.
std::vector<mpz_class> zeta_series(const CountSequence& counts, int order);

struct ZetaFunction {
    QPoly num; // constant term 1
    QPoly den; // constant term 1, coprime to num
};

// Unique rational function with deg(num) <= deg_num, deg(den) <= deg_den and
// both constant terms 1 matching the series to order deg_num + deg_den;
// any extra series coefficients are verified.
ZetaFunction reconstruct_rational(const std::vector<mpq_class>& series, int deg_num, int deg_den);

// P_1(t) of a genus-g curve over F_q from N_1..N_g, degree 2g, with the
// symmetry c_{2g-i} = q^{g-i} c_i.
ZPoly curve_numerator(const std::vector<mpz_class>& counts, int genus, std::int64_t q);

// Newton polygon of a numerator over F_{p^a}, slopes normalized by a so the
// ordinary/supersingular reading is uniform across base fields.
Polygon curve_newton_polygon(const ZPoly& numerator, const mpz_class& p, int a);

// Factored Weil data: P_0 .. P_{2d}, each with constant term 1.
struct WeilData {
    int d = 0;
    std::int64_t q = 0;
    std::vector<ZPoly> factors; // size 2d+1; {1} for a trivial factor
};

WeilData make_weil_data(int d, std::int64_t q, std::vector<ZPoly> factors);

// N_s = sum_i (-1)^i (power sum of inverse roots of P_i), no root extraction.
mpz_class trace_formula_counts(const WeilData& weil, int s);

struct SlopeViolation {
    int i;            // cohomological degree
    mpq_class slope;  // offending normalized slope
};

struct SlopeIntervalResult {
    bool pass = true;
    std::vector<SlopeViolation> violations;
};

// Every slope of the Newton polygon of P_i, divided by a (q = p^a), must lie
// in [max(0, i-d), min(i, d)].
SlopeIntervalResult slope_interval_check(const WeilData& weil, int d, const mpz_class& p);

struct RiemannVerdict {
    bool pass = false;
    bool exact = false; // exact route (deg <= 2) vs numeric root moduli
};

// All inverse roots of P_i must have archimedean absolute value q^{i/2}.
// Exact for deg <= 2; numeric at 1e-2 relative tolerance up to deg 6.
RiemannVerdict riemann_hypothesis_check(const ZPoly& poly, int i, std::int64_t q);

} // namespace ffz
