#include "ffzeta/isocrystal.hpp"

#include <algorithm>

namespace ffz {

namespace {

QMat identity(int n) {
    QMat m(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat mat_mul(const QMat& x, const QMat& y) {
    int n = static_cast<int>(x.size());
    QMat r(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
        }
    return r;
}

void check_base(const FIsocrystal& m, const FIsocrystal& n) {
    require(m.p == n.p && m.a == n.a, errc::base_mismatch,
            "operands live over different (p, a)");
}

} // namespace

QMat matrix_power(const QMat& matrix, int e) {
    QMat r = identity(static_cast<int>(matrix.size()));
    for (int i = 0; i < e; ++i) r = mat_mul(r, matrix);
    return r;
}

QPoly reversed_charpoly(const QMat& matrix) {
    // Faddeev-LeVerrier: char(t) = t^n + c_1 t^{n-1} + ... + c_n, then
    // det(I - tA) = 1 + c_1 t + ... + c_n t^n
    const int n = static_cast<int>(matrix.size());
    QPoly rev(n + 1, 0);
    rev[0] = 1;
    QMat mk = identity(n);
    mpq_class ck = 1;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            for (int i = 0; i < n; ++i) mk[i][i] += ck;
            mk = mat_mul(matrix, mk);
        } else {
            mk = matrix;
        }
        mpq_class tr = 0;
        for (int i = 0; i < n; ++i) tr += mk[i][i];
        ck = -tr / k;
        rev[k] = ck;
    }
    return rev;
}

FIsocrystal make_isocrystal(const mpz_class& p, int a, QMat matrix) {
    require(p >= 2, errc::invalid_input, "p must be at least 2");
    require(a >= 1, errc::invalid_input, "inertia degree must be >= 1");
    const size_t n = matrix.size();
    require(n >= 1, errc::invalid_input, "empty matrix");
    for (const auto& row : matrix)
        require(row.size() == n, errc::invalid_input, "matrix is not square");
    QPoly rev = reversed_charpoly(matrix);
    require(rev[n] != 0, errc::singular_matrix, "F must be injective (invertible matrix)");
    return FIsocrystal{p, a, std::move(matrix)};
}

FIsocrystal standard(const mpq_class& alpha, const mpz_class& p, int a) {
    mpq_class canon = alpha;
    canon.canonicalize();
    require(canon == alpha, errc::not_lowest_terms, "alpha must be given in lowest terms");
    const long r = static_cast<long>(canon.get_num().get_si());
    const int d = static_cast<int>(canon.get_den().get_si());
    QMat m(d, std::vector<mpq_class>(d, 0));
    mpq_class pr = pow_q(mpq_class(p), r);
    for (int j = 0; j + 1 < d; ++j) m[j + 1][j] = 1; // F(e_j) = e_{j+1}
    m[0][d - 1] = pr;                                // F(e_d) = p^r e_1
    return make_isocrystal(p, a, std::move(m));
}

FIsocrystal direct_sum(const FIsocrystal& m, const FIsocrystal& n) {
    check_base(m, n);
    int dm = m.dim(), dn = n.dim();
    QMat r(dm + dn, std::vector<mpq_class>(dm + dn, 0));
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j) r[i][j] = m.matrix[i][j];
    for (int i = 0; i < dn; ++i)
        for (int j = 0; j < dn; ++j) r[dm + i][dm + j] = n.matrix[i][j];
    return FIsocrystal{m.p, m.a, std::move(r)};
}

FIsocrystal tensor(const FIsocrystal& m, const FIsocrystal& n) {
    check_base(m, n);
    int dm = m.dim(), dn = n.dim();
    QMat r(dm * dn, std::vector<mpq_class>(dm * dn, 0));
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j) {
            if (m.matrix[i][j] == 0) continue;
            for (int k = 0; k < dn; ++k)
                for (int l = 0; l < dn; ++l)
                    r[i * dn + k][j * dn + l] = m.matrix[i][j] * n.matrix[k][l];
        }
    return FIsocrystal{m.p, m.a, std::move(r)};
}

Polygon newton_polygon(const FIsocrystal& m) {
    QMat fa = m.a == 1 ? m.matrix : matrix_power(m.matrix, m.a);
    QPoly rev = reversed_charpoly(fa);
    require(rev.back() != 0, errc::singular_matrix, "singular Frobenius matrix");
    Polygon poly = newton_of_polynomial(rev, m.p);
    if (m.a > 1)
        for (auto& [slope, mult] : poly.segments) slope /= m.a;
    return poly;
}

SlopeMultiset slopes(const FIsocrystal& m) {
    SlopeMultiset out;
    for (const auto& [slope, mult] : newton_polygon(m).segments) out.emplace_back(slope, mult);
    return out;
}

DieudonneManin dieudonne_manin(const FIsocrystal& m) {
    DieudonneManin dm;
    for (const auto& [alpha, mult] : slopes(m)) {
        int d = static_cast<int>(alpha.get_den().get_si());
        require(mult % d == 0, errc::indivisible_multiplicity,
                "slope multiplicity not divisible by its denominator");
        dm.pieces.push_back({alpha, mult / d});
    }
    return dm;
}

ProbeVerdict filtration_probe(const FIsocrystal& m, const std::vector<mpq_class>& x,
                              const mpq_class& alpha, int n_max) {
    require(x.size() == static_cast<size_t>(m.dim()), errc::invalid_input,
            "vector length differs from dim");
    bool zero = std::all_of(x.begin(), x.end(), [](const mpq_class& c) { return c == 0; });
    require(!zero, errc::zero_vector, "probe needs a nonzero vector");

    mpq_class a = alpha;
    a.canonicalize();
    const int window =
        m.dim() * static_cast<int>(a.get_den().get_si()) * m.a;
    if (n_max < 2 * window) return ProbeVerdict::inconclusive;

    // t_n = (min coordinate valuation of F^n x) - alpha n
    std::vector<mpq_class> t;
    std::vector<mpq_class> v = x;
    for (int n = 0; n <= n_max; ++n) {
        long vmin = 0;
        bool first = true;
        for (const auto& c : v) {
            if (c == 0) continue;
            long ord = valuation(c, m.p);
            if (first || ord < vmin) vmin = ord;
            first = false;
        }
        t.push_back(mpq_class(vmin) - a * n);
        if (n < n_max) {
            std::vector<mpq_class> next(v.size(), 0);
            for (size_t i = 0; i < v.size(); ++i)
                for (size_t j = 0; j < v.size(); ++j)
                    if (m.matrix[i][j] != 0 && v[j] != 0) next[i] += m.matrix[i][j] * v[j];
            v = std::move(next);
        }
    }
    bool all_ge = true, all_lt = true;
    for (int n = n_max - window + 1; n <= n_max; ++n) {
        if (t[n] >= t[n - window])
            all_lt = false;
        else
            all_ge = false;
    }
    if (all_ge) return ProbeVerdict::bounded;
    if (all_lt) return ProbeVerdict::unbounded;
    return ProbeVerdict::inconclusive;
}

} // namespace ffz
