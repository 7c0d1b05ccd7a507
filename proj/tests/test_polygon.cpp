#include <doctest.h>

#include <map>
#include <random>

#include "ffzeta/polygon.hpp"
#include "oracle.hpp"

using namespace ffz;
using namespace ffz::testing;

namespace {

using VPoints = std::vector<std::pair<int, std::optional<mpq_class>>>;

Polygon segs(std::vector<std::pair<mpq_class, int>> s) { return Polygon{std::move(s)}; }

} // namespace

TEST_CASE("newton_from_valuations: hand-checked hulls") {
    CHECK(newton_from_valuations({{0, mpq_class(0)}, {1, mpq_class(0)}, {2, mpq_class(1)}}) ==
          segs({{0, 1}, {1, 1}}));
    CHECK(newton_from_valuations({{0, mpq_class(0)}, {1, std::nullopt}, {2, mpq_class(1)}}) ==
          segs({{mpq_class(1, 2), 2}}));
    CHECK(newton_from_valuations({{0, mpq_class(0)}, {1, mpq_class(0)}}) == segs({{0, 1}}));

    CHECK_THROWS_AS(newton_from_valuations({{0, mpq_class(1)}, {1, mpq_class(0)}}), error);
    CHECK_THROWS_AS(newton_from_valuations({{1, mpq_class(0)}}), error);
    // top index must carry a finite valuation
    CHECK_THROWS_AS(newton_from_valuations({{0, mpq_class(0)}, {2, std::nullopt}}), error);
}

TEST_CASE("hull oracle: polygon equals the minimum over all chords") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 200; ++trial) {
        int top = 2 + static_cast<int>(rng() % 5);
        VPoints pts{{0, mpq_class(0)}};
        for (int i = 1; i <= top; ++i) {
            if (i < top && rng() % 4 == 0) {
                pts.emplace_back(i, std::nullopt);
            } else {
                mpq_class v(static_cast<long>(rng() % 13) - 4, 1 + static_cast<long>(rng() % 3));
                v.canonicalize();
                pts.emplace_back(i, v);
            }
        }
        Polygon poly = newton_from_valuations(pts);
        CHECK(poly.total_length() == top);
        for (int x = 0; x <= top; ++x) {
            auto expected = naive_hull_value(pts, x);
            if (x == 0 || x == top) REQUIRE(expected.has_value());
            if (expected) CHECK(polygon_value(poly, x) <= *expected);
        }
        // the polygon touches the point set at its vertices
        int at = 0;
        mpq_class val = 0;
        for (const auto& [slope, mult] : poly.segments) {
            auto here = naive_hull_value(pts, at);
            REQUIRE(here.has_value());
            CHECK(*here == val);
            at += mult;
            val += slope * mult;
        }
        // idempotence: rebuilding from the breakpoints reproduces the polygon
        VPoints bps;
        at = 0;
        val = 0;
        bps.emplace_back(0, mpq_class(0));
        for (const auto& [slope, mult] : poly.segments) {
            at += mult;
            val += slope * mult;
            bps.emplace_back(at, val);
        }
        CHECK(newton_from_valuations(bps) == poly);
    }
}

TEST_CASE("newton_of_polynomial: elliptic dichotomy and edge cases") {
    CHECK(newton_of_polynomial(QPoly{1, 0, 2}, 2) == segs({{mpq_class(1, 2), 2}}));
    CHECK(newton_of_polynomial(QPoly{1, 1, 2}, 2) == segs({{0, 1}, {1, 1}}));
    // 1 - q^d t with q = p^a: a single segment of slope d*a
    CHECK(newton_of_polynomial(QPoly{1, -8}, 2) == segs({{3, 1}}));
    CHECK_THROWS_AS(newton_of_polynomial(QPoly{2, 1}, 2), error); // P(0) != 1
}

TEST_CASE("newton polygons multiply: product = slope-multiset union") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 100; ++trial) {
        auto rnd_factor = [&] {
            QPoly f{1};
            int deg = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < deg; ++i)
                f.push_back(mpq_class(static_cast<long>(rng() % 9) - 4));
            qp_trim(f);
            if (qp_degree(f) < 1) f = QPoly{1, 2};
            return f;
        };
        QPoly f = rnd_factor(), g = rnd_factor();
        mpz_class p = (trial % 2 == 0) ? 2 : 3;
        Polygon pf = newton_of_polynomial(f, p), pg = newton_of_polynomial(g, p);
        Polygon prod = newton_of_polynomial(qp_mul(f, g), p);
        std::map<mpq_class, int> expected;
        for (const auto& [s, m] : pf.segments) expected[s] += m;
        for (const auto& [s, m] : pg.segments) expected[s] += m;
        std::map<mpq_class, int> actual;
        for (const auto& [s, m] : prod.segments) actual[s] += m;
        CHECK(actual == expected);
    }
}

TEST_CASE("slope mass equals the valuation of the leading coefficient") {
    std::mt19937_64 rng(5772);
    for (int trial = 0; trial < 200; ++trial) {
        QPoly f{1};
        int deg = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < deg; ++i) f.push_back(mpq_class(static_cast<long>(rng() % 17) - 8));
        if (f[static_cast<size_t>(deg)] == 0) f[static_cast<size_t>(deg)] = 1;
        mpz_class p = 2;
        Polygon poly = newton_of_polynomial(f, p);
        mpq_class mass = 0;
        for (const auto& [s, m] : poly.segments) mass += s * m;
        // hull ends at (deg, ord_p(leading)); the leading point is always a vertex
        CHECK(mass == valuation(f[static_cast<size_t>(deg)], p));
    }
}

TEST_CASE("polygon_value evaluates piecewise-linearly") {
    Polygon half = segs({{mpq_class(1, 2), 2}});
    CHECK(polygon_value(half, 1) == mpq_class(1, 2));
    Polygon ord = segs({{0, 1}, {1, 1}});
    CHECK(polygon_value(ord, 2) == 1);
    Polygon g3 = segs({{0, 3}, {1, 3}});
    CHECK(polygon_value(g3, 4) == 1);
    CHECK_THROWS_AS(polygon_value(g3, 7), error);
    CHECK_THROWS_AS(polygon_value(g3, -1), error);
}

TEST_CASE("hodge_polygon from Hodge numbers") {
    CHECK(hodge_polygon({1, {1, 1}}) == segs({{0, 1}, {1, 1}}));
    CHECK(hodge_polygon({1, {0, 3}}) == segs({{1, 3}}));
    CHECK(hodge_polygon({1, {3, 3}}) == segs({{0, 3}, {1, 3}}));
    CHECK_THROWS_AS(hodge_polygon({1, {0, 0}}), error);
    CHECK_THROWS_AS(hodge_polygon({2, {1, 1}}), error); // needs h_0..h_m
}

TEST_CASE("polygon_geq is a partial order verdict at breakpoints") {
    Polygon ss = segs({{mpq_class(1, 2), 2}});
    Polygon ord = segs({{0, 1}, {1, 1}});
    CHECK(polygon_geq(ss, ord));
    CHECK(!polygon_geq(ord, ss));
    CHECK(polygon_geq(ord, ord)); // reflexive
    CHECK(!polygon_geq(segs({{0, 2}}), ord));
    CHECK_THROWS_AS(polygon_geq(ss, segs({{0, 1}})), error); // length mismatch

    // antisymmetry and transitivity on sampled triples
    std::mt19937_64 rng(141421);
    auto random_polygon = [&](int len) {
        VPoints pts{{0, mpq_class(0)}};
        for (int i = 1; i <= len; ++i)
            pts.emplace_back(i, mpq_class(static_cast<long>(rng() % 9) - 2));
        return newton_from_valuations(pts);
    };
    for (int trial = 0; trial < 100; ++trial) {
        Polygon A = random_polygon(4), B = random_polygon(4), C = random_polygon(4);
        if (polygon_geq(A, B) && polygon_geq(B, A)) CHECK(A == B);
        if (polygon_geq(A, B) && polygon_geq(B, C)) CHECK(polygon_geq(A, C));
    }
}

TEST_CASE("check_mazur: the elliptic and genus-3 comparisons") {
    Polygon hodge = segs({{0, 1}, {1, 1}});
    MazurVerdict ordinary = check_mazur(segs({{0, 1}, {1, 1}}), hodge);
    CHECK(ordinary.pass);
    CHECK(!ordinary.strict_somewhere);
    MazurVerdict supersingular = check_mazur(segs({{mpq_class(1, 2), 2}}), hodge);
    CHECK(supersingular.pass);
    CHECK(supersingular.strict_somewhere);
    // endpoint mismatch fails by default, passes when relaxed
    Polygon high = segs({{1, 1}, {2, 1}});
    CHECK(!check_mazur(high, hodge).pass);
    CHECK(check_mazur(high, hodge, false).pass);
}

TEST_CASE("complete-intersection Hodge numbers: known varieties") {
    CiHodge elliptic = ci_hodge_numbers(3, {3});
    CHECK(elliptic.hodge.h == std::vector<long>{1, 1});
    CHECK(elliptic.b == 0);

    CiHodge quadric = ci_hodge_numbers(4, {2});
    CHECK(quadric.hodge.h == std::vector<long>{0, 2, 0});
    CHECK(quadric.b == 1);

    CiHodge cubic_surface = ci_hodge_numbers(4, {3});
    CHECK(cubic_surface.hodge.h == std::vector<long>{0, 7, 0});
    CHECK(cubic_surface.b == 1);
    CHECK(cubic_surface.hodge.h[0] == 0);

    CiHodge k3 = ci_hodge_numbers(4, {4});
    CHECK(k3.hodge.h == std::vector<long>{1, 20, 1});
    CHECK(k3.b == 0);

    CiHodge quartic_threefold = ci_hodge_numbers(5, {4});
    CHECK(quartic_threefold.hodge.h == std::vector<long>{0, 30, 30, 0});

    CiHodge quartic_curve = ci_hodge_numbers(3, {4});
    CHECK(quartic_curve.hodge.h == std::vector<long>{3, 3}); // genus 3

    CiHodge cubic_threefold = ci_hodge_numbers(5, {3});
    CHECK(cubic_threefold.hodge.h == std::vector<long>{0, 5, 5, 0});
    CHECK(cubic_threefold.b == 1);

    CiHodge quadric_3fold = ci_hodge_numbers(5, {2});
    CHECK(quadric_3fold.hodge.h == std::vector<long>{0, 0, 0, 0}); // H^3(Q^3) = 0
    CHECK(!quadric_3fold.b.has_value());

    CiHodge points = ci_hodge_numbers(3, {2, 2});
    CHECK(points.hodge.h == std::vector<long>{4}); // four points

    CHECK_THROWS_AS(ci_hodge_numbers(3, {}), error);
    CHECK_THROWS_AS(ci_hodge_numbers(2, {2, 2}), error); // negative dimension
}

TEST_CASE("hodge polygon endpoint equals sum i*h_i") {
    for (auto [n, degs] : std::vector<std::pair<int, std::vector<int>>>{
             {3, {3}}, {4, {2}}, {4, {3}}, {4, {4}}, {5, {4}}, {5, {2, 2}}, {6, {2, 3}}}) {
        CiHodge ci = ci_hodge_numbers(n, degs);
        Polygon poly = hodge_polygon(ci.hodge);
        mpq_class expected = 0;
        for (size_t i = 0; i < ci.hodge.h.size(); ++i)
            expected += mpq_class(static_cast<long>(i) * ci.hodge.h[i]);
        CHECK(polygon_value(poly, poly.total_length()) == expected);
    }
}
