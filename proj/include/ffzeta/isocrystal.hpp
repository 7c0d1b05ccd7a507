#pragma once

// F-isocrystal algebra with exact rational matrices: standard modules
// M_{r/d}, direct sums, tensor products, slopes via the Newton polygon of
// the characteristic polynomial of F^a, the Dieudonne-Manin multiplicity
// certificate, and a boundedness probe for the slope filtration.
//
// Matrix entries are rationals, hence sigma-fixed; F^a is the plain a-th
// matrix power.  This covers every example the theory needs at desk scale
// and keeps all arithmetic exact.

#include <vector>

#include <gmpxx.h>

#include "ffzeta/polygon.hpp"
#include "ffzeta/rational.hpp"

namespace ffz {

using QMat = std::vector<std::vector<mpq_class>>; // row-major, square

struct FIsocrystal {
    mpz_class p;
    int a = 1;   // inertia degree, sigma^a = id
    QMat matrix; // invertible action of F on the chosen basis

    int dim() const { return static_cast<int>(matrix.size()); }
};

// Validates squareness and invertibility (throws singular_matrix).
FIsocrystal make_isocrystal(const mpz_class& p, int a, QMat matrix);

// Slope alpha = r/d in lowest terms: F(e_1)=e_2, ..., F(e_d) = p^r e_1.
FIsocrystal standard(const mpq_class& alpha, const mpz_class& p, int a = 1);

FIsocrystal direct_sum(const FIsocrystal& m, const FIsocrystal& n);
FIsocrystal tensor(const FIsocrystal& m, const FIsocrystal& n);

// (slope, multiplicity) pairs, slopes increasing, multiplicities sum to dim.
using SlopeMultiset = std::vector<std::pair<mpq_class, int>>;

// Valuations read off the Newton polygon of det(I - t F^a), divided by a.
SlopeMultiset slopes(const FIsocrystal& m);

Polygon newton_polygon(const FIsocrystal& m);

struct DieudonneManin {
    // Decomposition as sum over alpha of n_alpha copies of M_alpha.
    struct Piece {
        mpq_class alpha;
        int n_alpha;
    };
    std::vector<Piece> pieces;
};

// Structural certificate: every slope r/d must appear with multiplicity
// divisible by d (throws indivisible_multiplicity otherwise).
DieudonneManin dieudonne_manin(const FIsocrystal& m);

enum class ProbeVerdict { bounded, unbounded, inconclusive };

// Tracks v_n - alpha n for v_n = min coordinate valuation of F^n(x); compares
// across a window of dim * den(alpha) * a iterations at the tail.
ProbeVerdict filtration_probe(const FIsocrystal& m, const std::vector<mpq_class>& x,
                              const mpq_class& alpha, int n_max = 64);

// det(I - t F^a), constant term 1.
QPoly reversed_charpoly(const QMat& matrix);

QMat matrix_power(const QMat& matrix, int e);

} // namespace ffz
