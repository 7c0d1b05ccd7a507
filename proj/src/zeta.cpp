#include "ffzeta/zeta.hpp"

#include <algorithm>
#include <complex>

namespace ffz {

std::vector<mpz_class> zeta_series(const CountSequence& counts, int order) {
    require(order >= 0 && static_cast<size_t>(order) <= counts.counts.size(),
            errc::invalid_input, "order exceeds the number of supplied counts");
    // z_0 = 1, (k+1) z_{k+1} = sum_j (j+1) l_{j+1} z_{k-j} with l_a = N_a / a
    std::vector<mpq_class> z(order + 1, 0), l(order + 1, 0);
    z[0] = 1;
    for (int a = 1; a <= order; ++a) l[a] = mpq_class(counts.counts[a - 1], a);
    for (int k = 0; k < order; ++k) {
        mpq_class s = 0;
        for (int j = 0; j <= k; ++j) s += (j + 1) * l[j + 1] * z[k - j];
        z[k + 1] = s / (k + 1);
    }
    std::vector<mpz_class> out(order + 1);
    for (int k = 0; k <= order; ++k) {
        require(z[k].get_den() == 1 && z[k] >= 0, errc::integrality_violation,
                "zeta series coefficient is not a nonnegative integer");
        out[k] = z[k].get_num();
    }
    return out;
}

ZetaFunction reconstruct_rational(const std::vector<mpq_class>& series, int deg_num,
                                  int deg_den) {
    require(deg_num >= 0 && deg_den >= 0, errc::invalid_input, "negative degree bound");
    require(series.size() >= static_cast<size_t>(deg_num + deg_den + 1), errc::invalid_input,
            "series too short for the degree bounds");
    require(series[0] == 1, errc::unnormalized, "series must start with 1");

    // unknown denominator coefficients b_1..b_D satisfy, for each k in
    // (deg_num, deg_num + deg_den],  sum_j b_j z_{k-j} = -z_k
    const int D = deg_den;
    std::vector<std::vector<mpq_class>> m(D, std::vector<mpq_class>(D + 1, 0));
    for (int r = 0; r < D; ++r) {
        int k = deg_num + 1 + r;
        for (int c = 0; c < D; ++c)
            if (k - (c + 1) >= 0) m[r][c] = series[k - (c + 1)];
        m[r][D] = -series[k];
    }
    // Gaussian elimination; a singular but consistent system picks free
    // variables = 0, the gcd reduction below restores canonical form
    std::vector<int> pivot_of_col(D, -1);
    int row = 0;
    for (int col = 0; col < D && row < D; ++col) {
        int pr = -1;
        for (int r = row; r < D; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        for (int r = 0; r < D; ++r) {
            if (r == row || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[row][col];
            for (int c = col; c <= D; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (int r = row; r < D; ++r)
        require(m[r][D] == 0, errc::no_solution, "degree bounds too small");

    QPoly den(D + 1, 0);
    den[0] = 1;
    for (int col = 0; col < D; ++col) {
        int pr = pivot_of_col[col];
        den[col + 1] = pr < 0 ? mpq_class(0) : m[pr][D] / m[pr][col];
    }
    qp_trim(den);

    // numerator = den * series truncated at deg_num; all later coefficients
    // of the product must vanish through the whole supplied series
    QPoly num(deg_num + 1, 0);
    for (size_t k = 0; k < series.size(); ++k) {
        mpq_class conv = 0;
        for (size_t j = 0; j < den.size() && j <= k; ++j) conv += den[j] * series[k - j];
        if (k <= static_cast<size_t>(deg_num))
            num[k] = conv;
        else
            require(conv == 0, errc::not_verified,
                    "extra series coefficients contradict the reconstruction");
    }
    qp_trim(num);

    QPoly g = qp_gcd(num, den);
    if (qp_degree(g) >= 1) {
        num = qp_divexact(num, g);
        den = qp_divexact(den, g);
    }
    mpq_class d0 = den.empty() ? mpq_class(0) : den[0];
    require(d0 != 0, errc::inconsistent, "denominator lost its constant term");
    for (auto& c : num) c /= d0;
    for (auto& c : den) c /= d0;
    return ZetaFunction{std::move(num), std::move(den)};
}

ZPoly curve_numerator(const std::vector<mpz_class>& counts, int genus, std::int64_t q) {
    require(genus >= 0, errc::invalid_input, "negative genus");
    require(counts.size() == static_cast<size_t>(genus), errc::invalid_input,
            "need exactly g counts");
    if (genus == 0) return {1};

    // power sums of the inverse roots: S_s = q^s + 1 - N_s
    std::vector<mpq_class> S(genus + 1, 0), e(genus + 1, 0);
    mpz_class qz(q), qs = 1;
    for (int s = 1; s <= genus; ++s) {
        qs *= qz;
        S[s] = mpq_class(qs + 1 - counts[s - 1]);
    }
    e[0] = 1;
    for (int k = 1; k <= genus; ++k) {
        mpq_class acc = 0;
        for (int i = 0; i < k; ++i) {
            mpq_class term = e[i] * S[k - i];
            acc += (i % 2 == 0) ? term : -term;
        }
        e[k] = ((k % 2 == 1) ? acc : -acc) / k;
    }
    QPoly c(2 * genus + 1, 0);
    for (int k = 0; k <= genus; ++k) c[k] = (k % 2 == 0) ? e[k] : -e[k];
    // functional equation: c_{2g-i} = q^{g-i} c_i
    for (int i = 0; i < genus; ++i) c[2 * genus - i] = c[i] * pow_q(mpq_class(qz), genus - i);
    return qp_to_zp(c, errc::inconsistent);
}

Polygon curve_newton_polygon(const ZPoly& numerator, const mpz_class& p, int a) {
    require(a >= 1, errc::invalid_input, "inertia degree must be >= 1");
    Polygon poly = newton_of_polynomial(zp_to_qp(numerator), p);
    if (a > 1)
        for (auto& [slope, mult] : poly.segments) slope /= a;
    return poly;
}

WeilData make_weil_data(int d, std::int64_t q, std::vector<ZPoly> factors) {
    require(d >= 0 && q >= 2, errc::invalid_input, "bad dimension or cardinality");
    require(factors.size() == static_cast<size_t>(2 * d) + 1, errc::invalid_input,
            "need factors P_0 .. P_{2d}");
    for (const auto& f : factors)
        require(!f.empty() && f[0] == 1, errc::unnormalized, "every P_i needs constant term 1");
    ZPoly p0{1, -1};
    require(factors[0] == p0, errc::inconsistent, "P_0 must be 1 - t");
    ZPoly ptop{1, -pow_z(mpz_class(q), static_cast<unsigned long>(d))};
    require(factors[2 * d] == ptop, errc::inconsistent, "P_{2d} must be 1 - q^d t");
    return WeilData{d, q, std::move(factors)};
}

namespace {

// power sums p_1..p_s of the inverse roots of P (constant term 1), by
// Newton's identities from the coefficients
std::vector<mpz_class> inverse_root_power_sums(const ZPoly& poly, int s) {
    int deg = static_cast<int>(poly.size()) - 1;
    while (deg > 0 && poly[deg] == 0) --deg;
    std::vector<mpz_class> e(deg + 1);
    for (int k = 0; k <= deg; ++k) e[k] = (k % 2 == 0) ? poly[k] : -poly[k];
    std::vector<mpz_class> p(s + 1, 0);
    for (int k = 1; k <= s; ++k) {
        mpz_class acc = 0;
        for (int i = 1; i < k && i <= deg; ++i) {
            mpz_class term = e[i] * p[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (k <= deg) acc += ((k % 2 == 1) ? k : -k) * e[k];
        p[k] = acc;
    }
    return p;
}

} // namespace

mpz_class trace_formula_counts(const WeilData& weil, int s) {
    require(s >= 1, errc::invalid_input, "extension degree must be >= 1");
    mpz_class n = 0;
    for (int i = 0; i < static_cast<int>(weil.factors.size()); ++i) {
        std::vector<mpz_class> p = inverse_root_power_sums(weil.factors[i], s);
        if (i % 2 == 0)
            n += p[s];
        else
            n -= p[s];
    }
    return n;
}

SlopeIntervalResult slope_interval_check(const WeilData& weil, int d, const mpz_class& p) {
    // recover a from q = p^a
    mpz_class qz(weil.q), pw = p;
    int a = 1;
    while (pw < qz) {
        pw *= p;
        ++a;
    }
    require(pw == qz, errc::invalid_input, "q is not a power of p");

    SlopeIntervalResult res;
    for (int i = 0; i < static_cast<int>(weil.factors.size()); ++i) {
        const ZPoly& f = weil.factors[i];
        if (qp_degree(zp_to_qp(f)) < 1) continue;
        Polygon poly = newton_of_polynomial(zp_to_qp(f), p);
        mpq_class lo(std::max(0, i - d)), hi(std::min(i, d));
        for (const auto& [slope, mult] : poly.segments) {
            mpq_class normalized = slope / a;
            if (normalized < lo || normalized > hi) {
                res.pass = false;
                res.violations.push_back({i, normalized});
            }
        }
    }
    return res;
}

namespace {

bool is_perfect_square(const mpz_class& x, mpz_class& root) {
    if (x < 0) return false;
    if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
    return true;
}

// Durand-Kerner roots of a polynomial given by ascending coefficients.
std::vector<std::complex<double>> numeric_roots(const ZPoly& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    while (deg > 0 && poly[deg] == 0) --deg;
    std::vector<std::complex<double>> c(deg + 1);
    for (int i = 0; i <= deg; ++i) c[i] = poly[i].get_d();
    for (int i = 0; i <= deg; ++i) c[i] /= poly[deg].get_d();

    auto eval = [&](std::complex<double> t) {
        std::complex<double> v = 0;
        for (int i = deg; i >= 0; --i) v = v * t + c[i];
        return v;
    };
    std::vector<std::complex<double>> r(deg);
    std::complex<double> seed(0.4, 0.9), w = 1.0;
    for (int i = 0; i < deg; ++i) {
        w *= seed;
        r[i] = w;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> den = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= r[i] - r[j];
            std::complex<double> delta = eval(r[i]) / den;
            r[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    return r;
}

} // namespace

RiemannVerdict riemann_hypothesis_check(const ZPoly& poly, int i, std::int64_t q) {
    int deg = static_cast<int>(poly.size()) - 1;
    while (deg > 0 && poly[deg] == 0) --deg;
    require(deg <= 6, errc::budget_exceeded, "root-modulus check limited to degree 6");
    require(deg >= 0 && poly[0] == 1, errc::unnormalized, "P must have constant term 1");
    mpz_class qi = pow_z(mpz_class(q), static_cast<unsigned long>(i));

    if (deg == 0) return {true, true};
    if (deg == 1) {
        // single inverse root -c_1
        return {poly[1] * poly[1] == qi, true};
    }
    if (deg == 2) {
        const mpz_class &c1 = poly[1], &c2 = poly[2];
        mpz_class disc = c1 * c1 - 4 * c2, s;
        if (disc < 0) return {c2 == qi, true}; // conjugate pair, |root|^2 = c2
        if (is_perfect_square(disc, s)) {
            mpz_class r1 = (-c1 + s) / 2, r2 = (-c1 - s) / 2;
            return {r1 * r1 == qi && r2 * r2 == qi, true};
        }
        // real irrational conjugates: equal moduli only when c1 = 0
        if (c1 == 0) return {-c2 == qi, true};
        return {false, true};
    }

    double target = std::sqrt(static_cast<double>(qi.get_d()));
    for (const auto& t : numeric_roots(poly)) {
        double inv_mod = 1.0 / std::abs(t);
        if (std::abs(inv_mod - target) > 1e-2 * target) return {false, false};
    }
    return {true, false};
}

} // namespace ffz
