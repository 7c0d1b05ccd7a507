#include "ffzeta/rational.hpp"

namespace ffz {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::no_embedding: return "NoEmbedding";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::integrality_violation: return "IntegralityViolation";
        case errc::empty_system: return "EmptySystem";
        case errc::inapplicable: return "Inapplicable";
        case errc::not_prime_field: return "NotPrimeField";
        case errc::no_solution: return "NoSolution";
        case errc::not_verified: return "NotVerified";
        case errc::inconsistent: return "Inconsistent";
        case errc::unnormalized: return "Unnormalized";
        case errc::empty_hodge: return "EmptyHodge";
        case errc::invalid_dimensions: return "InvalidDimensions";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::not_lowest_terms: return "NotLowestTerms";
        case errc::base_mismatch: return "BaseMismatch";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::indivisible_multiplicity: return "IndivisibleMultiplicity";
        case errc::zero_vector: return "ZeroVector";
        case errc::precision_mismatch: return "PrecisionMismatch";
        case errc::zero_input: return "ZeroInput";
        case errc::invalid_input: return "InvalidInput";
    }
    return "UnknownError";
}

long valuation(const mpz_class& x, const mpz_class& p) {
    require(x != 0, errc::zero_input, "valuation of zero integer");
    mpz_class rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const mpq_class& x, const mpz_class& p) {
    require(x != 0, errc::zero_input, "valuation of zero rational");
    long v = valuation(mpz_class(x.get_num()), p);
    if (x.get_den() != 1) v -= valuation(mpz_class(x.get_den()), p);
    return v;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpq_class pow_q(const mpq_class& base, long e) {
    if (e == 0) return 1;
    if (e < 0) {
        require(base != 0, errc::division_by_zero, "0 to a negative power");
        return pow_q(1 / base, -e);
    }
    mpq_class r = 1, b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

void qp_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int qp_degree(const QPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

QPoly qp_add(const QPoly& f, const QPoly& g) {
    QPoly r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    qp_trim(r);
    return r;
}

QPoly qp_mul(const QPoly& f, const QPoly& g) {
    if (f.empty() || g.empty()) return {};
    QPoly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    }
    qp_trim(r);
    return r;
}

QPoly qp_scale(const QPoly& f, const mpq_class& c) {
    if (c == 0) return {};
    QPoly r = f;
    for (auto& x : r) x *= c;
    return r;
}

mpq_class qp_eval(const QPoly& f, const mpq_class& x) {
    mpq_class r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

QPoly qp_rem(const QPoly& f, const QPoly& g) {
    int dg = qp_degree(g);
    require(dg >= 0, errc::division_by_zero, "polynomial remainder by zero");
    QPoly r = f;
    qp_trim(r);
    while (qp_degree(r) >= dg) {
        int dr = qp_degree(r);
        mpq_class c = r[dr] / g[dg];
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= c * g[i];
        r[dr] = 0; // cancel exactly
        qp_trim(r);
    }
    return r;
}

QPoly qp_gcd(QPoly f, QPoly g) {
    qp_trim(f);
    qp_trim(g);
    while (!g.empty()) {
        QPoly r = qp_rem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (f.empty()) return {};
    mpq_class lead = f[qp_degree(f)];
    for (auto& c : f) c /= lead;
    return f;
}

QPoly qp_divexact(const QPoly& f, const QPoly& g) {
    int dg = qp_degree(g);
    require(dg >= 0, errc::division_by_zero, "polynomial division by zero");
    QPoly r = f, q;
    qp_trim(r);
    int df = qp_degree(r);
    if (df < 0) return {};
    require(df >= dg, errc::inconsistent, "inexact polynomial division");
    q.assign(df - dg + 1, 0);
    while (qp_degree(r) >= dg) {
        int dr = qp_degree(r);
        mpq_class c = r[dr] / g[dg];
        q[dr - dg] = c;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= c * g[i];
        r[dr] = 0;
        qp_trim(r);
    }
    require(r.empty(), errc::inconsistent, "inexact polynomial division");
    return q;
}

QPoly zp_to_qp(const ZPoly& f) {
    QPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = mpq_class(f[i]);
    return r;
}

ZPoly qp_to_zp(const QPoly& f, errc on_fail) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        require(f[i].get_den() == 1, on_fail, "non-integer coefficient");
        r[i] = f[i].get_num();
    }
    return r;
}

} // namespace ffz
