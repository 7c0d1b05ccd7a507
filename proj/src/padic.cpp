#include "ffzeta/padic.hpp"

namespace ffz {

namespace {

void check_compatible(const PadicInt& x, const PadicInt& y) {
    require(x.p == y.p && x.precision == y.precision, errc::precision_mismatch,
            "p-adic operands have different p or precision");
}

} // namespace

PadicInt make_padic(const mpz_class& p, int precision, const mpz_class& value) {
    require(precision >= 1, errc::invalid_input, "precision must be >= 1");
    PadicInt x;
    x.p = p;
    x.precision = precision;
    mpz_class m = x.modulus();
    x.value = ((value % m) + m) % m;
    return x;
}

PadicInt::Valuation PadicInt::known_valuation() const {
    if (value == 0) return {static_cast<long>(precision), true};
    return {std::min(valuation(value, p), static_cast<long>(precision)), false};
}

PadicInt padic_add(const PadicInt& x, const PadicInt& y) {
    check_compatible(x, y);
    return make_padic(x.p, x.precision, x.value + y.value);
}

PadicInt padic_mul(const PadicInt& x, const PadicInt& y) {
    check_compatible(x, y);
    return make_padic(x.p, x.precision, x.value * y.value);
}

PadicInt padic_pow(const PadicInt& x, const mpz_class& e) {
    require(e >= 0, errc::invalid_input, "negative p-adic exponent");
    PadicInt r = x;
    mpz_class m = x.modulus();
    mpz_powm(r.value.get_mpz_t(), x.value.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

PadicInt teichmuller(const mpz_class& p, const mpz_class& residue, int precision) {
    require(precision >= 1, errc::invalid_input, "precision must be >= 1");
    require(residue >= 0 && residue < p, errc::invalid_input, "residue must lie in [0, p)");
    mpz_class m = pow_z(p, static_cast<unsigned long>(precision));
    mpz_class x = residue;
    // x_{k+1} = x_k^p agrees with x_k to one more digit; M steps suffice.
    for (int k = 0; k < precision + 1; ++k) {
        mpz_class next;
        mpz_powm(next.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t(), m.get_mpz_t());
        if (next == x) break;
        x = next;
    }
    return make_padic(p, precision, x);
}

} // namespace ffz
