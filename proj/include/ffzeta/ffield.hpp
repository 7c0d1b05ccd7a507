#pragma once

// Exact arithmetic, enumeration and embeddings for finite fields F_{p^a}.
//
// Elements are dense coefficient vectors in the basis 1, u, ..., u^{a-1}
// modulo a fixed monic irreducible polynomial.  Enumeration order is the
// base-p integer encoding of the coefficient vector (constant coefficient
// least significant), so index 0 is the zero element and index 1 is one.
// That ordering is part of the external contract.

#include <cstdint>
#include <vector>

#include "ffzeta/error.hpp"

namespace ffz {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Coordinates in the basis 1, u, ..., u^{a-1}; length a, entries in [0, p).
using FieldElement = std::vector<i64>;

bool is_prime(i64 p);

struct FieldDesc {
    i64 p = 0;                // prime characteristic
    int a = 0;                // extension degree
    std::vector<i64> modulus; // monic, degree a, irreducible over F_p
    i64 q = 0;                // p^a

    FieldElement zero() const { return FieldElement(a, 0); }
    FieldElement one() const;
    FieldElement from_int(i64 c) const; // c mod p as a constant
    FieldElement generator() const;     // the class of u (a >= 2)

    bool is_zero(const FieldElement& x) const;
    bool same_field(const FieldDesc& other) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement inv(const FieldElement& x) const;
    FieldElement pow(const FieldElement& x, i64 e) const; // e < 0 via inv
    FieldElement frobenius(const FieldElement& x) const;  // x -> x^p

    // Enumeration by index: element_at(0) = 0, element_at(1) = 1, ...
    FieldElement element_at(u64 index) const;
    u64 index_of(const FieldElement& x) const;

    void check_element(const FieldElement& x) const; // throws field_mismatch
};

// Deterministic field construction: modulus is the first monic irreducible
// polynomial of degree a in enumeration order (a = 1 gives modulus x).
FieldDesc make_field(i64 p, int a);

// Internal variant with a caller-supplied modulus (verified irreducible).
FieldDesc make_field_with_modulus(i64 p, int a, std::vector<i64> modulus);

// All q elements in enumeration order.  Guarded: q must stay small enough to
// materialize; counting loops use element_at instead.
std::vector<FieldElement> enumerate(const FieldDesc& field, u64 budget = u64(1) << 22);

// Sum of t^m over all t in the field.  Equals -1 iff (q-1) | m and m >= 1,
// otherwise 0 (including m = 0, where the sum is q copies of 1).
FieldElement power_sum(const FieldDesc& field, u64 m);

struct FieldEmbedding {
    FieldDesc source;
    FieldDesc target;
    FieldElement image_of_generator; // a root of source.modulus in target

    FieldElement apply(const FieldElement& x) const;
};

// Deterministic embedding F_{p^a} -> F_{p^{as}}: image_of_generator is the
// first root of source.modulus in target enumeration order.
FieldEmbedding embed(const FieldDesc& source, const FieldDesc& target);

// ---- low-level kernels (flat buffers, no allocation) ----
// Layout: an element is `a` consecutive i64 limbs.  scratch needs 2a-1 limbs.

namespace detail {

void raw_mul(const FieldDesc& F, const i64* x, const i64* y, i64* out, i64* scratch);
void raw_add(const FieldDesc& F, const i64* x, const i64* y, i64* out);
bool raw_is_zero(const FieldDesc& F, const i64* x);
void raw_decode(const FieldDesc& F, u64 index, i64* out);

} // namespace detail

} // namespace ffz
