#pragma once

// Test-only oracles, deliberately independent of the library's counting and
// hull code paths: a recursive brute-force point counter with naive monomial
// evaluation, and a quadratic lower-convex-hull evaluator.

#include <optional>
#include <vector>

#include "ffzeta/polysys.hpp"
#include "ffzeta/rational.hpp"

namespace ffz::testing {

inline FieldElement naive_eval(const FieldDesc& F, const Polynomial& poly,
                               const std::vector<FieldElement>& point) {
    FieldElement acc = F.zero();
    for (const auto& m : poly.monomials) {
        FieldElement term = m.coeff;
        for (int v = 0; v < poly.nvars; ++v)
            for (int e = 0; e < m.exps[v]; ++e) term = F.mul(term, point[v]);
        acc = F.add(acc, term);
    }
    return acc;
}

// all common zeros in (F_{q^s})^n by plain recursion over enumerate()
inline u64 naive_count(const PolySystem& system, int s) {
    FieldDesc T = s == 1 ? system.field : make_field(system.field.p, system.field.a * s);
    std::vector<Polynomial> polys = system.polys;
    if (!(s == 1)) {
        FieldEmbedding phi = embed(system.field, T);
        for (auto& f : polys) {
            std::vector<Monomial> monos;
            for (const auto& m : f.monomials) monos.push_back({phi.apply(m.coeff), m.exps});
            f = make_polynomial(T, f.nvars, std::move(monos));
        }
    }
    std::vector<FieldElement> all = enumerate(T);
    std::vector<FieldElement> point(system.nvars, T.zero());
    u64 count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == system.nvars) {
            for (const auto& f : polys)
                if (!T.is_zero(naive_eval(T, f, point))) return;
            ++count;
            return;
        }
        for (const auto& e : all) {
            point[v] = e;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return count;
}

// lower hull value at integer x: min over all point pairs (or single points
// at x) of the chord through them, restricted to finite valuations
inline std::optional<mpq_class> naive_hull_value(
    const std::vector<std::pair<int, std::optional<mpq_class>>>& pts, int x) {
    std::optional<mpq_class> best;
    for (const auto& [i, vi] : pts) {
        if (!vi) continue;
        if (i == x && (!best || *vi < *best)) best = *vi;
        for (const auto& [j, vj] : pts) {
            if (!vj || j <= i) continue;
            if (x < i || x > j) continue;
            mpq_class val = *vi + (*vj - *vi) * (x - i) / (j - i);
            if (!best || val < *best) best = val;
        }
    }
    return best;
}

} // namespace ffz::testing
