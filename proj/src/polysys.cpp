#include "ffzeta/polysys.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace ffz {

int Polynomial::degree() const {
    int d = -1;
    for (const auto& m : monomials)
        d = std::max(d, std::accumulate(m.exps.begin(), m.exps.end(), 0));
    return d;
}

Polynomial make_polynomial(const FieldDesc& field, int nvars, std::vector<Monomial> monomials) {
    require(nvars >= 0, errc::invalid_input, "negative variable count");
    for (auto& m : monomials) {
        field.check_element(m.coeff);
        require(m.exps.size() == static_cast<size_t>(nvars), errc::invalid_input,
                "exponent vector length differs from nvars");
        for (int e : m.exps)
            require(e >= 0, errc::invalid_input, "negative exponent");
    }
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& x, const Monomial& y) { return x.exps < y.exps; });
    std::vector<Monomial> merged;
    for (auto& m : monomials) {
        if (!merged.empty() && merged.back().exps == m.exps)
            merged.back().coeff = field.add(merged.back().coeff, m.coeff);
        else
            merged.push_back(std::move(m));
    }
    std::erase_if(merged, [&](const Monomial& m) { return field.is_zero(m.coeff); });
    return Polynomial{field, nvars, std::move(merged)};
}

PolySystem make_system(const FieldDesc& field, int nvars, std::vector<Polynomial> polys,
                       bool homogeneous, std::vector<int> blocks) {
    for (const auto& f : polys) {
        require(f.field.same_field(field), errc::field_mismatch,
                "system polynomials live in different fields");
        require(f.nvars == nvars, errc::invalid_input, "inconsistent variable counts");
    }
    if (!blocks.empty()) {
        int total = 0;
        for (int b : blocks) {
            require(b >= 1, errc::invalid_input, "empty homogeneity block");
            total += b;
        }
        require(total == nvars, errc::invalid_input, "block sizes must sum to nvars");
    }
    if (homogeneous) {
        // per block, every monomial of a polynomial has the same block degree
        std::vector<int> bl = blocks.empty() ? std::vector<int>{nvars} : blocks;
        for (const auto& f : polys) {
            if (f.is_zero()) continue;
            std::vector<int> ref;
            for (const auto& m : f.monomials) {
                std::vector<int> bd;
                int at = 0;
                for (int b : bl) {
                    bd.push_back(std::accumulate(m.exps.begin() + at, m.exps.begin() + at + b, 0));
                    at += b;
                }
                if (ref.empty())
                    ref = bd;
                else
                    require(ref == bd, errc::not_homogeneous,
                            "polynomial is not homogeneous per block");
            }
        }
    }
    return PolySystem{field, nvars, std::move(polys), homogeneous, std::move(blocks)};
}

DegreeData degree_data(const PolySystem& system) {
    DegreeData d;
    d.n = system.nvars;
    for (const auto& f : system.polys)
        if (!f.is_zero()) d.degrees.push_back(f.degree());
    require(!d.degrees.empty(), errc::empty_system, "no nonzero polynomial in system");
    long sum = std::accumulate(d.degrees.begin(), d.degrees.end(), 0L);
    long maxd = *std::max_element(d.degrees.begin(), d.degrees.end());
    if (maxd >= 1 && d.n > sum) {
        long num = d.n - sum;
        d.b = static_cast<int>((num + maxd - 1) / maxd);
    } else {
        d.b = 0;
    }
    return d;
}

FieldElement evaluate(const Polynomial& poly, const std::vector<FieldElement>& point) {
    const FieldDesc& F = poly.field;
    require(point.size() == static_cast<size_t>(poly.nvars), errc::field_mismatch,
            "point length differs from nvars");
    for (const auto& c : point) F.check_element(c);

    // power tables per coordinate up to the needed degree
    std::vector<std::vector<FieldElement>> pows(poly.nvars);
    for (int v = 0; v < poly.nvars; ++v) {
        int maxe = 0;
        for (const auto& m : poly.monomials) maxe = std::max(maxe, m.exps[v]);
        pows[v].resize(maxe + 1);
        pows[v][0] = F.one();
        for (int e = 1; e <= maxe; ++e) pows[v][e] = F.mul(pows[v][e - 1], point[v]);
    }
    FieldElement acc = F.zero();
    for (const auto& m : poly.monomials) {
        FieldElement term = m.coeff;
        for (int v = 0; v < poly.nvars; ++v)
            if (m.exps[v] > 0) term = F.mul(term, pows[v][m.exps[v]]);
        acc = F.add(acc, term);
    }
    return acc;
}

namespace {

// System flattened over the counting field: coefficients embedded, contiguous
// limb storage, per-variable maximal exponents.
struct FlatSystem {
    FieldDesc F;
    int n = 0;
    struct Mono {
        size_t coeff_off;
        std::vector<int> exps;
    };
    struct Poly {
        std::vector<Mono> monos;
    };
    std::vector<Poly> polys;
    std::vector<i64> coeff_pool;
    std::vector<int> max_exp; // per variable
    // variable ranges of the homogeneity blocks (projective filter)
    std::vector<int> block_start, block_end;
    int nblocks = 0;
};

FlatSystem flatten(const PolySystem& system, const FieldDesc& target, bool with_blocks) {
    FlatSystem fs;
    fs.F = target;
    fs.n = system.nvars;
    fs.max_exp.assign(system.nvars, 0);
    std::optional<FieldEmbedding> phi;
    if (!system.field.same_field(target)) phi = embed(system.field, target);
    for (const auto& poly : system.polys) {
        FlatSystem::Poly fp;
        for (const auto& m : poly.monomials) {
            FieldElement c = phi ? phi->apply(m.coeff) : m.coeff;
            FlatSystem::Mono fm;
            fm.coeff_off = fs.coeff_pool.size();
            fs.coeff_pool.insert(fs.coeff_pool.end(), c.begin(), c.end());
            fm.exps = m.exps;
            for (int v = 0; v < system.nvars; ++v)
                fs.max_exp[v] = std::max(fs.max_exp[v], m.exps[v]);
            fp.monos.push_back(std::move(fm));
        }
        fs.polys.push_back(std::move(fp));
    }
    if (with_blocks) {
        std::vector<int> bl = system.blocks.empty() ? std::vector<int>{system.nvars}
                                                    : system.blocks;
        fs.nblocks = static_cast<int>(bl.size());
        int at = 0;
        for (int b : bl) {
            fs.block_start.push_back(at);
            at += b;
            fs.block_end.push_back(at);
        }
    }
    return fs;
}

// Worker state: odometer indices, power tables and scratch, all flat i64.
struct Worker {
    const FlatSystem& fs;
    int a;
    std::vector<u64> idx;        // per coordinate, 0..Q-1
    std::vector<i64> coord;      // n * a limbs, decoded coordinates
    std::vector<i64> pow_tab;    // per var: (max_exp+1) elements of a limbs
    std::vector<size_t> pow_off; // offset of var v's table
    std::vector<i64> scratch;    // 2a-1
    std::vector<i64> term, acc;  // a limbs each

    explicit Worker(const FlatSystem& f) : fs(f), a(f.F.a) {
        idx.assign(fs.n, 0);
        coord.assign(static_cast<size_t>(fs.n) * a, 0);
        pow_off.resize(fs.n);
        size_t total = 0;
        for (int v = 0; v < fs.n; ++v) {
            pow_off[v] = total;
            total += static_cast<size_t>(fs.max_exp[v] + 1) * a;
        }
        pow_tab.assign(total, 0);
        scratch.assign(2 * a - 1, 0);
        term.assign(a, 0);
        acc.assign(a, 0);
        for (int v = 0; v < fs.n; ++v) refresh(v);
    }

    void set_coordinate(int v, u64 index) {
        idx[v] = index;
        refresh(v);
    }

    void refresh(int v) {
        i64* x = &coord[static_cast<size_t>(v) * a];
        detail::raw_decode(fs.F, idx[v], x);
        i64* tab = &pow_tab[pow_off[v]];
        tab[0] = 1;
        for (int i = 1; i < a; ++i) tab[i] = 0;
        for (int e = 1; e <= fs.max_exp[v]; ++e)
            detail::raw_mul(fs.F, tab + static_cast<size_t>(e - 1) * a, x,
                            tab + static_cast<size_t>(e) * a, scratch.data());
    }

    const i64* power(int v, int e) const {
        return &pow_tab[pow_off[v] + static_cast<size_t>(e) * a];
    }

    // true iff every polynomial vanishes at the current point
    bool point_is_zero() {
        for (const auto& poly : fs.polys) {
            std::fill(acc.begin(), acc.end(), 0);
            for (const auto& m : poly.monos) {
                std::copy_n(&fs.coeff_pool[m.coeff_off], a, term.begin());
                for (int v = 0; v < fs.n; ++v)
                    if (m.exps[v] > 0)
                        detail::raw_mul(fs.F, term.data(), power(v, m.exps[v]), term.data(),
                                        scratch.data());
                detail::raw_add(fs.F, acc.data(), term.data(), acc.data());
            }
            if (!detail::raw_is_zero(fs.F, acc.data())) return false; // early exit
        }
        return true;
    }

    bool blocks_nonzero() const {
        // a block passes if some coordinate in it has nonzero index
        for (int b = 0; b < fs.nblocks; ++b) {
            bool nonzero = false;
            for (int v = fs.block_start[b]; v < fs.block_end[b]; ++v)
                if (idx[v] != 0) {
                    nonzero = true;
                    break;
                }
            if (!nonzero) return false;
        }
        return true;
    }

    // Advance coordinates [0, upto) odometer-style; false on wrap-around.
    bool advance(int upto, u64 Q) {
        for (int v = 0; v < upto; ++v) {
            if (++idx[v] < Q) {
                refresh(v);
                return true;
            }
            idx[v] = 0;
            refresh(v);
        }
        return false;
    }
};

u64 checked_point_count(u64 Q, int n, u64 budget) {
    u64 total = 1;
    for (int i = 0; i < n; ++i) {
        require(Q == 0 || total <= budget / Q, errc::budget_exceeded,
                "q^{s n} exceeds the evaluation budget");
        total *= Q;
    }
    require(total <= budget, errc::budget_exceeded, "q^{s n} exceeds the evaluation budget");
    return total;
}

FieldDesc counting_field(const PolySystem& system, int s) {
    require(s >= 1, errc::invalid_input, "extension degree s must be >= 1");
    if (s == 1) return system.field;
    return make_field(system.field.p, system.field.a * s);
}

u64 count_impl(const PolySystem& system, int s, const CountOptions& opts, bool filter_blocks,
               bool parallel) {
    FieldDesc T = counting_field(system, s);
    const u64 Q = static_cast<u64>(T.q);
    checked_point_count(Q, system.nvars, opts.budget);
    FlatSystem fs = flatten(system, T, filter_blocks);

    if (fs.n == 0) {
        Worker w(fs);
        return w.point_is_zero() ? 1 : 0;
    }

    const int outer = fs.n - 1;
    u64 total = 0;
    if (parallel) {
        int nt = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt) reduction(+ : total)
        {
            Worker w(fs); // private power tables per worker
#pragma omp for schedule(static)
            for (i64 top = 0; top < static_cast<i64>(Q); ++top) {
                w.set_coordinate(outer, static_cast<u64>(top));
                do {
                    if (w.point_is_zero() && (!filter_blocks || w.blocks_nonzero())) ++total;
                } while (w.advance(outer, Q)); // wraps the lower coordinates back to 0
            }
        }
    } else {
        Worker w(fs);
        for (u64 top = 0; top < Q; ++top) {
            w.set_coordinate(outer, top);
            do {
                if (w.point_is_zero() && (!filter_blocks || w.blocks_nonzero())) ++total;
            } while (w.advance(outer, Q));
        }
    }
    return total;
}

} // namespace

u64 count_affine(const PolySystem& system, int s, const CountOptions& opts) {
    return count_impl(system, s, opts, false, true);
}

u64 count_affine_serial(const PolySystem& system, int s, const CountOptions& opts) {
    return count_impl(system, s, opts, false, false);
}

u64 count_projective(const PolySystem& system, int s, const CountOptions& opts) {
    require(system.homogeneous, errc::not_homogeneous,
            "projective counting needs a homogeneous system");
    require(system.nvars >= 1, errc::invalid_input, "projective counting needs variables");
    for (const auto& f : system.polys)
        require(f.is_zero() || f.degree() >= 1, errc::not_homogeneous,
                "nonzero constant polynomial in a projective system");
    FieldDesc T = counting_field(system, s);
    u64 zeros = count_impl(system, s, opts, true, true);
    int nblocks = system.blocks.empty() ? 1 : static_cast<int>(system.blocks.size());
    u64 scalings = 1;
    for (int i = 0; i < nblocks; ++i) scalings *= static_cast<u64>(T.q) - 1;
    require(zeros % scalings == 0, errc::integrality_violation,
            "zero count not divisible by (q^s-1)^blocks");
    return zeros / scalings;
}

} // namespace ffz
