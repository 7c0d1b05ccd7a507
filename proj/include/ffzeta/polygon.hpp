#pragma once

// Newton polygons from p-adic valuations, Hodge polygons from Hodge numbers,
// the Newton-above-Hodge comparison, and Hodge numbers of smooth complete
// intersections.  All slope arithmetic is exact rational.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ffzeta/rational.hpp"

namespace ffz {

// Convex piecewise-linear function on [0, n]: value 0 at 0, slope `first`
// over `second` consecutive unit intervals, slopes strictly increasing.
struct Polygon {
    std::vector<std::pair<mpq_class, int>> segments;

    int total_length() const;
    bool operator==(const Polygon&) const = default;
};

// Exact evaluation at x in [0, n].
mpq_class polygon_value(const Polygon& poly, const mpq_class& x);

// Lower convex hull of (index, valuation) points; nullopt marks an infinite
// valuation (a vanishing coefficient).  Index 0 must be present with value 0.
Polygon newton_from_valuations(const std::vector<std::pair<int, std::optional<mpq_class>>>& points);

// Newton polygon of P with P(0) = 1: hull of (i, ord_p(c_i)).  The slopes are
// ord_p of the inverse roots of P; division by the inertia degree is the
// caller's job.
Polygon newton_of_polynomial(const QPoly& poly, const mpz_class& p);

struct HodgeNumbers {
    int m = 0;              // cohomological degree
    std::vector<long> h;    // h_i = dim H^{m-i}(Omega^i), i = 0..m
};

// Slope i with multiplicity h_i for each nonzero h_i.
Polygon hodge_polygon(const HodgeNumbers& hodge);

// A(x) >= B(x) at every breakpoint of both polygons (equal total lengths).
bool polygon_geq(const Polygon& a, const Polygon& b);

struct MazurVerdict {
    bool pass = false;
    bool strict_somewhere = false; // strictly above at some interior breakpoint
};

// Newton >= Hodge; endpoints must agree unless require_equal_endpoints=false.
MazurVerdict check_mazur(const Polygon& newton, const Polygon& hodge,
                         bool require_equal_endpoints = true);

struct CiHodge {
    HodgeNumbers hodge;     // middle cohomology H^d, hyperplane classes included
    std::optional<int> b;   // min{ i : h_i != 0 }; nullopt when H^d = 0
    int formula_b = 0;      // max(0, ceil((n - sum d_i) / max d_i))
};

// Hodge numbers of the middle cohomology of a smooth complete intersection of
// multidegree (d_1..d_r) in P^{n-1}, by exact power-series extraction from the
// chi_y generating function.  Checks the returned b against formula_b.
CiHodge ci_hodge_numbers(int n, const std::vector<int>& degrees);

} // namespace ffz
