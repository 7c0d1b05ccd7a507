#include "ffzeta/polygon.hpp"

#include <algorithm>

namespace ffz {

namespace {

void validate(const Polygon& poly) {
    for (size_t i = 0; i < poly.segments.size(); ++i) {
        require(poly.segments[i].second >= 1, errc::invalid_input,
                "segment multiplicity must be positive");
        if (i > 0)
            require(poly.segments[i - 1].first < poly.segments[i].first, errc::invalid_input,
                    "segment slopes must increase strictly");
    }
}

// breakpoint x-positions, including 0 and n
std::vector<int> breakpoints(const Polygon& poly) {
    std::vector<int> xs{0};
    int at = 0;
    for (const auto& [slope, mult] : poly.segments) {
        at += mult;
        xs.push_back(at);
    }
    return xs;
}

} // namespace

int Polygon::total_length() const {
    int n = 0;
    for (const auto& [slope, mult] : segments) n += mult;
    return n;
}

mpq_class polygon_value(const Polygon& poly, const mpq_class& x) {
    require(x >= 0 && x <= poly.total_length(), errc::out_of_domain,
            "polygon evaluated outside [0, n]");
    mpq_class value = 0, at = 0;
    for (const auto& [slope, mult] : poly.segments) {
        mpq_class next = at + mult;
        if (x <= next) return value + slope * (x - at);
        value += slope * mult;
        at = next;
    }
    return value;
}

Polygon newton_from_valuations(
    const std::vector<std::pair<int, std::optional<mpq_class>>>& points) {
    require(!points.empty(), errc::invalid_input, "no valuation points");
    std::vector<std::pair<int, mpq_class>> finite;
    int top = 0;
    bool have_zero = false;
    for (const auto& [i, v] : points) {
        require(i >= 0, errc::invalid_input, "negative index");
        top = std::max(top, i);
        if (i == 0) {
            have_zero = true;
            require(v && *v == 0, errc::unnormalized, "index 0 must carry valuation 0");
        }
        if (v) finite.emplace_back(i, *v);
    }
    require(have_zero, errc::unnormalized, "index 0 missing");
    std::sort(finite.begin(), finite.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < finite.size(); ++i)
        require(finite[i].first != finite[i - 1].first, errc::invalid_input, "duplicate index");
    require(finite.back().first == top, errc::invalid_input,
            "top index must have a finite valuation");

    // monotone-chain lower hull; popping on slope(prev) >= slope(next) merges
    // collinear points, so hull slopes are strictly increasing
    std::vector<std::pair<int, mpq_class>> hull;
    for (const auto& pt : finite) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // slope(a,b) >= slope(b,pt) ?
            if ((b.second - a.second) * (pt.first - b.first) >=
                (pt.second - b.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    Polygon poly;
    for (size_t i = 1; i < hull.size(); ++i) {
        int run = hull[i].first - hull[i - 1].first;
        mpq_class slope = (hull[i].second - hull[i - 1].second) / run;
        slope.canonicalize();
        poly.segments.emplace_back(slope, run);
    }
    validate(poly);
    return poly;
}

Polygon newton_of_polynomial(const QPoly& poly, const mpz_class& p) {
    int deg = qp_degree(poly);
    require(deg >= 0 && poly[0] == 1, errc::unnormalized, "polynomial must have P(0) = 1");
    std::vector<std::pair<int, std::optional<mpq_class>>> pts;
    for (int i = 0; i <= deg; ++i) {
        if (poly[i] == 0)
            pts.emplace_back(i, std::nullopt);
        else
            pts.emplace_back(i, mpq_class(valuation(poly[i], p)));
    }
    return newton_from_valuations(pts);
}

Polygon hodge_polygon(const HodgeNumbers& hodge) {
    require(hodge.h.size() == static_cast<size_t>(hodge.m) + 1, errc::invalid_input,
            "need h_0..h_m");
    Polygon poly;
    for (int i = 0; i <= hodge.m; ++i) {
        require(hodge.h[i] >= 0, errc::invalid_input, "negative Hodge number");
        if (hodge.h[i] > 0) poly.segments.emplace_back(mpq_class(i), static_cast<int>(hodge.h[i]));
    }
    require(!poly.segments.empty(), errc::empty_hodge, "all Hodge numbers vanish");
    return poly;
}

bool polygon_geq(const Polygon& a, const Polygon& b) {
    require(a.total_length() == b.total_length(), errc::length_mismatch,
            "polygons have different total length");
    std::vector<int> xs = breakpoints(a);
    for (int x : breakpoints(b)) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (int x : xs)
        if (polygon_value(a, x) < polygon_value(b, x)) return false;
    return true;
}

MazurVerdict check_mazur(const Polygon& newton, const Polygon& hodge,
                         bool require_equal_endpoints) {
    MazurVerdict verdict;
    if (!polygon_geq(newton, hodge)) return verdict;
    int n = newton.total_length();
    if (require_equal_endpoints &&
        polygon_value(newton, n) != polygon_value(hodge, n))
        return verdict;
    verdict.pass = true;
    std::vector<int> xs = breakpoints(newton);
    for (int x : breakpoints(hodge)) xs.push_back(x);
    for (int x : xs)
        if (x > 0 && x < n && polygon_value(newton, x) > polygon_value(hodge, x))
            verdict.strict_somewhere = true;
    return verdict;
}

namespace {

// z-series with polynomial-in-y coefficients, truncated after z^K
using YSeries = std::vector<QPoly>;

YSeries ys_mul(const YSeries& f, const YSeries& g, int K) {
    YSeries r(K + 1);
    for (int i = 0; i <= K; ++i)
        for (int j = 0; i + j <= K && j < static_cast<int>(g.size()); ++j) {
            if (i >= static_cast<int>(f.size())) break;
            if (f[i].empty() || g[j].empty()) continue;
            r[i + j] = qp_add(r[i + j], qp_mul(f[i], g[j]));
        }
    return r;
}

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

CiHodge ci_hodge_numbers(int n, const std::vector<int>& degrees) {
    const int r = static_cast<int>(degrees.size());
    require(r >= 1, errc::invalid_dimensions, "need at least one hypersurface degree");
    const int d = n - 1 - r; // dimension of the complete intersection
    require(d >= 0, errc::invalid_dimensions, "codimension exceeds ambient dimension");
    long sum = 0;
    int maxd = 1;
    for (int di : degrees) {
        require(di >= 1, errc::invalid_dimensions, "degrees must be >= 1");
        sum += di;
        maxd = std::max(maxd, di);
    }
    const int K = n - 1; // extract the coefficient of z^{d+r}

    // chi_y generating function: sum over dimensions of chi_y(X) z^{dim+r}
    //   = 1/((1+zy)(1-z)) * prod_j ((1+zy)^{d_j} - (1-z)^{d_j})
    //                            / ((1+zy)^{d_j} + y (1-z)^{d_j})
    YSeries num(K + 1), den(K + 1);
    num[0] = QPoly{1};
    // den starts as (1+zy)(1-z)
    den[0] = QPoly{1};
    if (K >= 1) den[1] = QPoly{-1, 1};      // -1 + y
    if (K >= 2) den[2] = QPoly{0, -1};      // -y z^2
    for (int dj : degrees) {
        YSeries a(K + 1), b(K + 1), fn(K + 1), fd(K + 1);
        for (int k = 0; k <= std::min(K, dj); ++k) {
            mpq_class c(binom(dj, k));
            // (1+zy)^dj: c * y^k z^k ; (1-z)^dj: c * (-1)^k z^k
            QPoly yk(k + 1, 0);
            yk[k] = c;
            a[k] = yk;
            b[k] = QPoly{(k % 2 == 0) ? c : -c};
        }
        for (int k = 0; k <= K; ++k) {
            fn[k] = qp_add(a[k], qp_scale(b[k], -1));
            // y * (1-z)^dj shifts the y-polynomial by one
            QPoly yb;
            if (!b[k].empty()) {
                yb.assign(b[k].size() + 1, 0);
                for (size_t t = 0; t < b[k].size(); ++t) yb[t + 1] = b[k][t];
            }
            fd[k] = qp_add(a[k], yb);
        }
        num = ys_mul(num, fn, K);
        den = ys_mul(den, fd, K);
    }

    // divide: g_k = (num_k - sum_{i<k} g_i den_{k-i}) / den_0, exactly in Q[y]
    YSeries g(K + 1);
    for (int k = 0; k <= K; ++k) {
        QPoly acc = k < static_cast<int>(num.size()) ? num[k] : QPoly{};
        for (int i = 0; i < k; ++i)
            if (!g[i].empty() && !den[k - i].empty())
                acc = qp_add(acc, qp_scale(qp_mul(g[i], den[k - i]), -1));
        g[k] = acc.empty() ? acc : qp_divexact(acc, den[0]);
    }
    const QPoly& chi = g[K]; // chi(Omega^p) is the y^p coefficient

    auto chi_p = [&](int p) -> mpq_class {
        return p < static_cast<int>(chi.size()) ? chi[p] : mpq_class(0);
    };

    CiHodge out;
    out.hodge.m = d;
    out.hodge.h.assign(d + 1, 0);
    for (int p = 0; p <= d; ++p) {
        mpq_class hp;
        if (2 * p == d) {
            hp = (p % 2 == 0) ? chi_p(p) : -chi_p(p);
        } else {
            // remove the (p,p) class sitting in H^{2p}
            mpq_class prim = chi_p(p) - ((p % 2 == 0) ? 1 : -1);
            hp = ((d - p) % 2 == 0) ? prim : -prim;
        }
        require(hp.get_den() == 1 && hp >= 0, errc::inconsistent,
                "middle Hodge number is not a nonnegative integer");
        out.hodge.h[p] = static_cast<long>(hp.get_num().get_si());
        if (out.hodge.h[p] > 0 && !out.b) out.b = p;
    }

    long num_b = n - sum;
    out.formula_b = num_b > 0 ? static_cast<int>((num_b + maxd - 1) / maxd) : 0;

    // The corollary's identity b = formula_b holds exactly when the primitive
    // range [formula_b, d - formula_b] is nonempty; otherwise the middle
    // cohomology is hyperplane classes only (d even) or zero (d odd).
    if (2 * out.formula_b <= d) {
        require(out.b && *out.b == out.formula_b, errc::inconsistent,
                "first nonzero Hodge number disagrees with the degree formula");
    } else if (d % 2 == 0) {
        require(out.b && *out.b == d / 2, errc::inconsistent,
                "expected only the middle hyperplane class");
    } else {
        require(!out.b, errc::inconsistent, "expected vanishing middle cohomology");
    }
    return out;
}

} // namespace ffz
