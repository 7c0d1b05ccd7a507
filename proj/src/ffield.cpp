#include "ffzeta/ffield.hpp"

#include <algorithm>

namespace ffz {

namespace {

constexpr i64 kMaxPrime = (i64(1) << 31) - 1;
constexpr u64 kMaxCardinality = u64(1) << 40;

i64 mod_p(i64 x, i64 p) {
    i64 r = x % p;
    return r < 0 ? r + p : r;
}

i64 inv_mod_p(i64 x, i64 p) {
    // extended Euclid; x nonzero mod p
    i64 t = 0, t1 = 1, r = p, r1 = mod_p(x, p);
    while (r1 != 0) {
        i64 q = r / r1;
        i64 tmp = t - q * t1;
        t = t1;
        t1 = tmp;
        tmp = r - q * r1;
        r = r1;
        r1 = tmp;
    }
    return mod_p(t, p);
}

// ---- dense F_p[x] arithmetic for modulus construction ----

using PPoly = std::vector<i64>; // ascending, not necessarily trimmed

void pp_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pp_mulmod(const PPoly& f, const PPoly& g, const PPoly& m, i64 p) {
    // m monic of degree a
    const int a = static_cast<int>(m.size()) - 1;
    std::vector<i64> acc(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j)
            acc[i + j] = (acc[i + j] + f[i] * g[j]) % p;
    }
    for (int i = static_cast<int>(acc.size()) - 1; i >= a; --i) {
        i64 c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (int j = 0; j < a; ++j)
            acc[i - a + j] = mod_p(acc[i - a + j] - c * m[j] % p, p);
    }
    acc.resize(a);
    return acc;
}

PPoly pp_powmod(PPoly base, u64 e, const PPoly& m, i64 p) {
    PPoly r = {1};
    while (e > 0) {
        if (e & 1) r = pp_mulmod(r, base, m, p);
        base = pp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PPoly pp_gcd(PPoly f, PPoly g, i64 p) {
    pp_trim(f);
    pp_trim(g);
    while (!g.empty()) {
        // f mod g
        i64 glead_inv = inv_mod_p(g.back(), p);
        while (f.size() >= g.size()) {
            i64 c = f.back() * glead_inv % p;
            size_t off = f.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i)
                f[off + i] = mod_p(f[off + i] - c * g[i] % p, p);
            pp_trim(f);
            if (f.empty()) break;
        }
        std::swap(f, g);
    }
    return f;
}

// Degree-a monic f is irreducible over F_p iff it has no irreducible factor
// of degree <= a/2, i.e. gcd(x^{p^k} - x, f) = 1 for 1 <= k <= a/2.
bool is_irreducible(const PPoly& f, i64 p) {
    const int a = static_cast<int>(f.size()) - 1;
    if (a == 1) return true;
    PPoly xp = {0, 1}; // running x^{p^k} mod f
    for (int k = 1; k <= a / 2; ++k) {
        xp = pp_powmod(xp, static_cast<u64>(p), f, p);
        PPoly d = xp;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = mod_p(d[1] - 1, p); // x^{p^k} - x
        PPoly g = pp_gcd(d, f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

} // namespace

bool is_prime(i64 p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldDesc make_field_with_modulus(i64 p, int a, std::vector<i64> modulus) {
    require(p >= 2 && p <= kMaxPrime && is_prime(p), errc::not_prime,
            "p = " + std::to_string(p) + " is not a prime below 2^31");
    require(a >= 1, errc::invalid_input, "extension degree must be >= 1");
    u64 q = 1;
    for (int i = 0; i < a; ++i) {
        require(q <= kMaxCardinality / static_cast<u64>(p), errc::budget_exceeded,
                "p^a exceeds the 2^40 enumeration budget");
        q *= static_cast<u64>(p);
    }
    require(modulus.size() == static_cast<size_t>(a) + 1 && modulus.back() == 1,
            errc::invalid_input, "modulus must be monic of degree a");
    for (i64& c : modulus) c = mod_p(c, p);
    modulus.back() = 1;
    require(a == 1 || is_irreducible(modulus, p), errc::invalid_input,
            "modulus is reducible over F_p");
    FieldDesc F;
    F.p = p;
    F.a = a;
    F.modulus = std::move(modulus);
    F.q = static_cast<i64>(q);
    return F;
}

FieldDesc make_field(i64 p, int a) {
    require(p >= 2 && p <= kMaxPrime && is_prime(p), errc::not_prime,
            "p = " + std::to_string(p) + " is not a prime below 2^31");
    require(a >= 1, errc::invalid_input, "extension degree must be >= 1");
    if (a == 1) return make_field_with_modulus(p, 1, {0, 1});

    // First monic irreducible of degree a in enumeration order of the lower
    // coefficient vector (c_0 least significant).
    u64 count = 1;
    for (int i = 0; i < a; ++i) count *= static_cast<u64>(p); // p^a candidates
    for (u64 idx = 0; idx < count; ++idx) {
        PPoly f(a + 1, 0);
        u64 v = idx;
        for (int i = 0; i < a; ++i) {
            f[i] = static_cast<i64>(v % static_cast<u64>(p));
            v /= static_cast<u64>(p);
        }
        f[a] = 1;
        if (is_irreducible(f, p)) return make_field_with_modulus(p, a, f);
    }
    fail(errc::inconsistent, "no irreducible polynomial found"); // unreachable
}

FieldElement FieldDesc::one() const {
    FieldElement e(a, 0);
    e[0] = 1;
    return e;
}

FieldElement FieldDesc::from_int(i64 c) const {
    FieldElement e(a, 0);
    e[0] = mod_p(c, p);
    return e;
}

FieldElement FieldDesc::generator() const {
    require(a >= 2, errc::invalid_input, "prime field has no basis generator");
    FieldElement e(a, 0);
    e[1] = 1;
    return e;
}

bool FieldDesc::is_zero(const FieldElement& x) const {
    check_element(x);
    return std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; });
}

bool FieldDesc::same_field(const FieldDesc& o) const {
    return p == o.p && a == o.a && modulus == o.modulus;
}

void FieldDesc::check_element(const FieldElement& x) const {
    require(x.size() == static_cast<size_t>(a), errc::field_mismatch,
            "element has wrong coordinate count for this field");
    for (i64 c : x)
        require(c >= 0 && c < p, errc::field_mismatch, "coordinate out of range [0, p)");
}

FieldElement FieldDesc::add(const FieldElement& x, const FieldElement& y) const {
    check_element(x);
    check_element(y);
    FieldElement r(a);
    for (int i = 0; i < a; ++i) {
        r[i] = x[i] + y[i];
        if (r[i] >= p) r[i] -= p;
    }
    return r;
}

FieldElement FieldDesc::neg(const FieldElement& x) const {
    check_element(x);
    FieldElement r(a);
    for (int i = 0; i < a; ++i) r[i] = x[i] == 0 ? 0 : p - x[i];
    return r;
}

FieldElement FieldDesc::sub(const FieldElement& x, const FieldElement& y) const {
    return add(x, neg(y));
}

FieldElement FieldDesc::mul(const FieldElement& x, const FieldElement& y) const {
    check_element(x);
    check_element(y);
    FieldElement r(a);
    std::vector<i64> scratch(2 * a - 1);
    detail::raw_mul(*this, x.data(), y.data(), r.data(), scratch.data());
    return r;
}

FieldElement FieldDesc::pow(const FieldElement& x, i64 e) const {
    check_element(x);
    if (e < 0) return pow(inv(x), -e);
    FieldElement r = one(), base = x;
    u64 k = static_cast<u64>(e);
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FieldElement FieldDesc::inv(const FieldElement& x) const {
    require(!is_zero(x), errc::division_by_zero, "inverse of zero");
    // x^(q-2); q <= 2^40 keeps this cheap
    return pow(x, q - 2);
}

FieldElement FieldDesc::frobenius(const FieldElement& x) const { return pow(x, p); }

FieldElement FieldDesc::element_at(u64 index) const {
    FieldElement e(a);
    detail::raw_decode(*this, index, e.data());
    return e;
}

u64 FieldDesc::index_of(const FieldElement& x) const {
    check_element(x);
    u64 idx = 0;
    for (int i = a - 1; i >= 0; --i) idx = idx * static_cast<u64>(p) + static_cast<u64>(x[i]);
    return idx;
}

std::vector<FieldElement> enumerate(const FieldDesc& field, u64 budget) {
    require(static_cast<u64>(field.q) <= budget, errc::budget_exceeded,
            "field too large to enumerate into memory");
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(field.q));
    for (u64 i = 0; i < static_cast<u64>(field.q); ++i) out.push_back(field.element_at(i));
    return out;
}

FieldElement power_sum(const FieldDesc& field, u64 m) {
    FieldElement acc = field.zero();
    for (u64 i = 0; i < static_cast<u64>(field.q); ++i)
        acc = field.add(acc, field.pow(field.element_at(i), static_cast<i64>(m)));
    return acc;
}

FieldElement FieldEmbedding::apply(const FieldElement& x) const {
    source.check_element(x);
    // Horner in the image of the generator
    FieldElement r = target.zero();
    for (int i = source.a - 1; i >= 0; --i) {
        r = target.mul(r, image_of_generator);
        r = target.add(r, target.from_int(x[i]));
    }
    return r;
}

FieldEmbedding embed(const FieldDesc& source, const FieldDesc& target) {
    require(source.p == target.p, errc::no_embedding, "different characteristics");
    require(target.a % source.a == 0, errc::no_embedding,
            "source degree does not divide target degree");
    FieldEmbedding e;
    e.source = source;
    e.target = target;
    if (source.a == 1) {
        e.image_of_generator = target.zero(); // modulus x has root 0
        return e;
    }
    // first root of source.modulus in enumeration order
    for (u64 i = 0; i < static_cast<u64>(target.q); ++i) {
        FieldElement cand = target.element_at(i);
        FieldElement v = target.zero();
        for (int k = source.a; k >= 0; --k) {
            v = target.mul(v, cand);
            v = target.add(v, target.from_int(source.modulus[k]));
        }
        if (target.is_zero(v)) {
            e.image_of_generator = cand;
            return e;
        }
    }
    fail(errc::no_embedding, "modulus has no root in target"); // unreachable for valid inputs
}

namespace detail {

void raw_add(const FieldDesc& F, const i64* x, const i64* y, i64* out) {
    for (int i = 0; i < F.a; ++i) {
        i64 s = x[i] + y[i];
        out[i] = s >= F.p ? s - F.p : s;
    }
}

bool raw_is_zero(const FieldDesc& F, const i64* x) {
    for (int i = 0; i < F.a; ++i)
        if (x[i] != 0) return false;
    return true;
}

void raw_decode(const FieldDesc& F, u64 index, i64* out) {
    for (int i = 0; i < F.a; ++i) {
        out[i] = static_cast<i64>(index % static_cast<u64>(F.p));
        index /= static_cast<u64>(F.p);
    }
}

void raw_mul(const FieldDesc& F, const i64* x, const i64* y, i64* out, i64* scratch) {
    const int a = F.a;
    const i64 p = F.p;
    if (a == 1) {
        out[0] = x[0] * y[0] % p;
        return;
    }
    const int m = 2 * a - 1;
    for (int i = 0; i < m; ++i) scratch[i] = 0;
    for (int i = 0; i < a; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < a; ++j)
            scratch[i + j] = (scratch[i + j] + x[i] * y[j]) % p;
    }
    // reduce by the monic modulus, top down
    for (int i = m - 1; i >= a; --i) {
        i64 c = scratch[i];
        if (c == 0) continue;
        for (int j = 0; j < a; ++j) {
            i64 t = scratch[i - a + j] - c * F.modulus[j] % p;
            scratch[i - a + j] = t < 0 ? t + p : t;
        }
    }
    for (int i = 0; i < a; ++i) out[i] = scratch[i];
}

} // namespace detail

} // namespace ffz
