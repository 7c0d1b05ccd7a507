#pragma once

// Multivariate polynomial systems over finite fields and brute-force point
// counting over extension towers.
//
// The counting core exists twice: an OpenMP kernel that partitions the
// outermost coordinate across threads (each worker owns private power
// tables), and a plain serial reference used for testing and benchmarking.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffzeta/ffield.hpp"

namespace ffz {

struct Monomial {
    FieldElement coeff;    // nonzero
    std::vector<int> exps; // length nvars, entries >= 0
};

struct Polynomial {
    FieldDesc field;
    int nvars = 0;
    std::vector<Monomial> monomials; // canonical: sorted exps, no zero coeffs

    bool is_zero() const { return monomials.empty(); }
    int degree() const; // -1 sentinel for the zero polynomial
};

// Canonicalize: merge duplicate exponent vectors, drop zeros, sort.
Polynomial make_polynomial(const FieldDesc& field, int nvars, std::vector<Monomial> monomials);

struct PolySystem {
    FieldDesc field;
    int nvars = 0;
    std::vector<Polynomial> polys;
    bool homogeneous = false;
    // Homogeneity blocks for product projective spaces; sizes sum to nvars.
    // Empty means a single block covering all variables.
    std::vector<int> blocks;
};

PolySystem make_system(const FieldDesc& field, int nvars, std::vector<Polynomial> polys,
                       bool homogeneous, std::vector<int> blocks = {});

struct DegreeData {
    int n = 0;
    std::vector<int> degrees; // d_1..d_r of the nonzero polynomials
    int b = 0;                // max(0, ceil((n - sum d_i) / max d_i))
};

DegreeData degree_data(const PolySystem& system);

struct CountOptions {
    u64 budget = 1'000'000'000; // maximum number of points enumerated
    int threads = 0;            // 0 = OpenMP default
};

FieldElement evaluate(const Polynomial& poly, const std::vector<FieldElement>& point);

// Number of common zeros in (F_{q^s})^n.
u64 count_affine(const PolySystem& system, int s, const CountOptions& opts = {});

// Serial reference implementation (same contract, no OpenMP).
u64 count_affine_serial(const PolySystem& system, int s, const CountOptions& opts = {});

// Zeros with every block nonzero, divided by (q^s - 1)^{#blocks}.
u64 count_projective(const PolySystem& system, int s, const CountOptions& opts = {});

} // namespace ffz
