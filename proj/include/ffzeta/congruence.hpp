#pragma once

// Point-count congruence checks: Chevalley-Warning (mod p), Ax-Katz
// (mod q^b), restriction of scalars to the prime field, the Teichmuller-sum
// congruence (mod p^M), and the birational / rational-chain-connected
// congruences (mod q^s).  Geometric hypotheses (smooth, proper, birational,
// Fano) are caller-asserted; reports carry the assertion for auditability.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ffzeta/padic.hpp"
#include "ffzeta/polysys.hpp"

namespace ffz {

struct CongruenceReport {
    std::string kind;
    mpz_class count;            // N (or N_X for pair checks)
    mpz_class other_count = 0;  // N_Y for pair checks
    mpz_class modulus;          // p, q^b, q^s or p^M
    mpz_class residue;          // tested value mod modulus
    mpz_class expected_residue;
    bool pass = false;
    int b = 0;                  // Ax-Katz exponent when relevant
    std::string assertion;      // caller-asserted hypotheses, recorded
};

// Requires n > sum d_i (throws inapplicable otherwise); N mod p == 0.
CongruenceReport check_chevalley_warning(const PolySystem& system,
                                         const CountOptions& opts = {});

// N mod q^b == 0 with b from degree_data (b = 0 passes vacuously).
CongruenceReport check_ax_katz(const PolySystem& system, const CountOptions& opts = {});

// Rewrites a system over F_{p^a} (a >= 2) as a*r polynomials in n*a
// variables over F_p; point counts are preserved.
PolySystem weil_restriction(const PolySystem& system);

// The p roots of x^p = x in Z/p^M.
std::vector<PadicInt> teichmuller_set(const mpz_class& p, int precision);

// sum over Teichmuller points of prod_i (1 - F_i(x)^{p^M (p-1)}) mod p^M,
// compared with the exact point count mod p^M.
CongruenceReport wan_sum(const PolySystem& system, int precision,
                         const CountOptions& opts = {});

// |X(F_{q^s})| == |Y(F_{q^s})| mod q^s for birational smooth proper X, Y.
CongruenceReport check_birational_pair(const PolySystem& x, const PolySystem& y, int s,
                                       const CountOptions& opts = {});

// |X(F_{q^s})| == 1 mod q^s for chain rationally connected X.
CongruenceReport check_esnault(const PolySystem& x, int s, const CountOptions& opts = {});

} // namespace ffz
