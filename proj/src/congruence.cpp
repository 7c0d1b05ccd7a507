#include "ffzeta/congruence.hpp"

#include <map>
#include <numeric>

namespace ffz {

namespace {

mpz_class mod_nonneg(const mpz_class& x, const mpz_class& m) {
    mpz_class r = x % m;
    if (r < 0) r += m;
    return r;
}

} // namespace

CongruenceReport check_chevalley_warning(const PolySystem& system, const CountOptions& opts) {
    DegreeData dd = degree_data(system);
    long sum = std::accumulate(dd.degrees.begin(), dd.degrees.end(), 0L);
    require(dd.n > sum, errc::inapplicable,
            "Chevalley-Warning needs n > sum of the degrees");
    CongruenceReport rep;
    rep.kind = "chevalley-warning";
    rep.count = mpz_class(static_cast<unsigned long>(count_affine(system, 1, opts)));
    rep.modulus = mpz_class(static_cast<long>(system.field.p));
    rep.residue = mod_nonneg(rep.count, rep.modulus);
    rep.expected_residue = 0;
    rep.pass = rep.residue == rep.expected_residue;
    return rep;
}

CongruenceReport check_ax_katz(const PolySystem& system, const CountOptions& opts) {
    DegreeData dd = degree_data(system);
    CongruenceReport rep;
    rep.kind = "ax-katz";
    rep.b = dd.b;
    rep.count = mpz_class(static_cast<unsigned long>(count_affine(system, 1, opts)));
    rep.modulus = pow_z(mpz_class(static_cast<long>(system.field.q)),
                        static_cast<unsigned long>(dd.b));
    rep.residue = mod_nonneg(rep.count, rep.modulus);
    rep.expected_residue = 0;
    rep.pass = rep.residue == rep.expected_residue;
    return rep;
}

PolySystem weil_restriction(const PolySystem& system) {
    const FieldDesc& F = system.field;
    require(F.a >= 2, errc::inapplicable, "restriction of scalars needs a >= 2");
    const int a = F.a;
    const int n = system.nvars;
    FieldDesc Fp = make_field(F.p, 1);

    // powers of the basis element u as field elements
    std::vector<FieldElement> upow(a);
    upow[0] = F.one();
    for (int t = 1; t < a; ++t) upow[t] = F.mul(upow[t - 1], F.generator());

    std::vector<Polynomial> out;
    for (const auto& poly : system.polys) {
        // expand F(sum_t u^t y_{j,t}) as a polynomial over F in y_{j,t};
        // variable y_{j,t} sits at index j*a + t
        std::map<std::vector<int>, FieldElement> expansion;
        for (const auto& mono : poly.monomials) {
            std::map<std::vector<int>, FieldElement> term;
            term[std::vector<int>(n * a, 0)] = mono.coeff;
            for (int j = 0; j < n; ++j) {
                for (int rep = 0; rep < mono.exps[j]; ++rep) {
                    std::map<std::vector<int>, FieldElement> next;
                    for (const auto& [exps, coeff] : term) {
                        for (int t = 0; t < a; ++t) {
                            std::vector<int> e = exps;
                            ++e[j * a + t];
                            FieldElement c = F.mul(coeff, upow[t]);
                            auto it = next.find(e);
                            if (it == next.end())
                                next.emplace(std::move(e), std::move(c));
                            else
                                it->second = F.add(it->second, c);
                        }
                    }
                    term = std::move(next);
                }
            }
            for (const auto& [exps, coeff] : term) {
                auto it = expansion.find(exps);
                if (it == expansion.end())
                    expansion.emplace(exps, coeff);
                else
                    it->second = F.add(it->second, coeff);
            }
        }
        // split each F_{p^a} coefficient into its a prime-field components
        for (int t = 0; t < a; ++t) {
            std::vector<Monomial> monos;
            for (const auto& [exps, coeff] : expansion)
                if (coeff[t] != 0) monos.push_back({Fp.from_int(coeff[t]), exps});
            out.push_back(make_polynomial(Fp, n * a, std::move(monos)));
        }
    }
    std::vector<int> blocks;
    for (int b : system.blocks) blocks.push_back(b * a);
    return make_system(Fp, n * a, std::move(out), system.homogeneous, std::move(blocks));
}

std::vector<PadicInt> teichmuller_set(const mpz_class& p, int precision) {
    require(precision >= 1, errc::invalid_input, "precision must be >= 1");
    require(p <= 10'000'000, errc::budget_exceeded, "Teichmuller set too large to list");
    std::vector<PadicInt> out;
    for (mpz_class r = 0; r < p; ++r) out.push_back(teichmuller(p, r, precision));
    return out;
}

CongruenceReport wan_sum(const PolySystem& system, int precision, const CountOptions& opts) {
    require(system.field.a == 1, errc::not_prime_field,
            "the Teichmuller sum needs a prime-field system");
    require(precision >= 1, errc::invalid_input, "precision must be >= 1");
    const mpz_class p(static_cast<long>(system.field.p));
    const int n = system.nvars;

    u64 points = 1;
    for (int i = 0; i < n; ++i) {
        require(points <= opts.budget / static_cast<u64>(system.field.p),
                errc::budget_exceeded, "p^n exceeds the evaluation budget");
        points *= static_cast<u64>(system.field.p);
    }

    const mpz_class modulus = pow_z(p, static_cast<unsigned long>(precision));
    const mpz_class exponent = modulus * (p - 1); // p^M (p-1)

    std::vector<PadicInt> lifts = teichmuller_set(p, precision);
    std::vector<mpz_class> S(lifts.size());
    for (size_t i = 0; i < lifts.size(); ++i) S[i] = lifts[i].value;

    // Teichmuller lifts of all polynomial coefficients
    struct LiftedMono {
        mpz_class coeff;
        const std::vector<int>* exps;
    };
    std::vector<std::vector<LiftedMono>> lifted(system.polys.size());
    for (size_t i = 0; i < system.polys.size(); ++i)
        for (const auto& m : system.polys[i].monomials)
            lifted[i].push_back({teichmuller(p, m.coeff[0], precision).value, &m.exps});

    mpz_class sum = 0;
    std::vector<size_t> idx(n, 0);
    for (u64 pt = 0; pt < points; ++pt) {
        mpz_class prod = 1;
        for (const auto& poly : lifted) {
            mpz_class value = 0;
            for (const auto& m : poly) {
                mpz_class term = m.coeff;
                for (int v = 0; v < n; ++v)
                    for (int e = 0; e < (*m.exps)[v]; ++e) term = term * S[idx[v]] % modulus;
                value = (value + term) % modulus;
            }
            mpz_class powered;
            mpz_powm(powered.get_mpz_t(), value.get_mpz_t(), exponent.get_mpz_t(),
                     modulus.get_mpz_t());
            prod = prod * mod_nonneg(1 - powered, modulus) % modulus;
            if (prod == 0) break;
        }
        sum = (sum + prod) % modulus;
        for (int v = 0; v < n; ++v) {
            if (++idx[v] < S.size()) break;
            idx[v] = 0;
        }
    }

    CongruenceReport rep;
    rep.kind = "wan";
    rep.count = mpz_class(static_cast<unsigned long>(count_affine(system, 1, opts)));
    rep.modulus = modulus;
    rep.residue = sum;
    rep.expected_residue = mod_nonneg(rep.count, modulus);
    rep.pass = rep.residue == rep.expected_residue;
    return rep;
}

CongruenceReport check_birational_pair(const PolySystem& x, const PolySystem& y, int s,
                                       const CountOptions& opts) {
    require(x.field.same_field(y.field), errc::field_mismatch,
            "the two models must share a base field");
    CongruenceReport rep;
    rep.kind = "birational";
    rep.assertion = "smooth, proper, geometrically connected, birational (caller-asserted)";
    rep.count = mpz_class(static_cast<unsigned long>(count_projective(x, s, opts)));
    rep.other_count = mpz_class(static_cast<unsigned long>(count_projective(y, s, opts)));
    rep.modulus = pow_z(mpz_class(static_cast<long>(x.field.q)), static_cast<unsigned long>(s));
    rep.residue = mod_nonneg(rep.count - rep.other_count, rep.modulus);
    rep.expected_residue = 0;
    rep.pass = rep.residue == rep.expected_residue;
    return rep;
}

CongruenceReport check_esnault(const PolySystem& x, int s, const CountOptions& opts) {
    CongruenceReport rep;
    rep.kind = "esnault";
    rep.assertion = "smooth Fano / chain rationally connected (caller-asserted)";
    rep.count = mpz_class(static_cast<unsigned long>(count_projective(x, s, opts)));
    rep.modulus = pow_z(mpz_class(static_cast<long>(x.field.q)), static_cast<unsigned long>(s));
    rep.residue = mod_nonneg(rep.count, rep.modulus);
    rep.expected_residue = mod_nonneg(mpz_class(1), rep.modulus);
    rep.pass = rep.residue == rep.expected_residue;
    return rep;
}

} // namespace ffz
