#include "hopfdual/kernels.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfdual::kernels {

namespace {

// Work below this size is not worth a parallel region.
constexpr size_t kParallelCutoff = 4096;

using SparseRow = std::vector<std::pair<uint32_t, Cyc>>;

SparseRow row_of(const Morphism& m, size_t r) {
    SparseRow row;
    m.for_row(r, [&](size_t c, const Cyc& v) { row.emplace_back((uint32_t)c, v); });
    return row;
}

// r1 * s1 + r2 * s2 over sorted sparse rows.
SparseRow row_axpy(const SparseRow& r1, const Cyc& s1, const SparseRow& r2, const Cyc& s2) {
    SparseRow out;
    out.reserve(r1.size() + r2.size());
    size_t i = 0, j = 0;
    while (i < r1.size() || j < r2.size()) {
        if (j == r2.size() || (i < r1.size() && r1[i].first < r2[j].first)) {
            Cyc v = r1[i].second * s1;
            if (!v.is_zero()) out.emplace_back(r1[i].first, std::move(v));
            ++i;
        } else if (i == r1.size() || r2[j].first < r1[i].first) {
            Cyc v = r2[j].second * s2;
            if (!v.is_zero()) out.emplace_back(r2[j].first, std::move(v));
            ++j;
        } else {
            Cyc v = r1[i].second * s1 + r2[j].second * s2;
            if (!v.is_zero()) out.emplace_back(r1[i].first, std::move(v));
            ++i; ++j;
        }
    }
    return out;
}

// Divide the row by the gcd of all coefficient numerators and multiply by
// the lcm of all denominators: entries become integral and primitive,
// which is what keeps the elimination's coefficient growth under control.
void remove_content(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = 0, l = 1;
    for (const auto& [c, v] : row) {
        for (const Rat& q : v.coeffs()) {
            if (q == 0) continue;
            mpz_class num = q.get_num();
            mpz_class den = q.get_den();
            g = gcd(g, num);
            l = lcm(l, den);
        }
    }
    if (g == 0) return;
    if (g < 0) g = -g;
    Rat scale(l, g);
    scale.canonicalize();
    if (scale == 1) return;
    Cyc s{Rat(scale)};
    for (auto& [c, v] : row) v = v * s;
}

Cyc row_get(const SparseRow& row, uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, uint32_t c) { return p.first < c; });
    if (it != row.end() && it->first == col) return it->second;
    return Cyc();
}

} // namespace

Morphism mat_mul(const Morphism& a, const Morphism& b) {
    if (a.cols() != b.rows()) throw ShapeError("mat_mul: inner dimension mismatch");
    Morphism out(a.codomain(), b.domain());
    size_t n = a.rows();
    std::vector<SparseRow> brow(b.rows());
    for (size_t k = 0; k < b.rows(); ++k) brow[k] = row_of(b, k);
    std::vector<SparseRow> result(n);

    auto run_row = [&](size_t i) {
        // accumulate into a map keyed by column
        std::vector<std::pair<uint32_t, Cyc>> acc;
        a.for_row(i, [&](size_t k, const Cyc& av) {
            for (const auto& [j, bv] : brow[k]) {
                Cyc term = av * bv;
                auto it = std::lower_bound(acc.begin(), acc.end(), j,
                                           [](const auto& p, uint32_t c) { return p.first < c; });
                if (it != acc.end() && it->first == j) it->second += term;
                else acc.insert(it, {j, std::move(term)});
            }
        });
        SparseRow row;
        row.reserve(acc.size());
        for (auto& [c, v] : acc)
            if (!v.is_zero()) row.emplace_back(c, std::move(v));
        result[i] = std::move(row);
    };

    size_t work = n * std::max<size_t>(b.cols(), 1);
#ifdef _OPENMP
    if (work >= kParallelCutoff) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)n; ++i) run_row((size_t)i);
    } else
#endif
    {
        (void)work;
        for (size_t i = 0; i < n; ++i) run_row(i);
    }

    for (size_t i = 0; i < n; ++i)
        for (auto& [c, v] : result[i]) out.set(i, c, std::move(v));
    out.finalize();
    return out;
}

Morphism kron(const Morphism& a, const Morphism& b) {
    SpaceList cod = a.codomain(), dom = a.domain();
    cod.insert(cod.end(), b.codomain().begin(), b.codomain().end());
    dom.insert(dom.end(), b.domain().begin(), b.domain().end());
    Morphism out(cod, dom);

    std::vector<SparseRow> arow(a.rows()), brow(b.rows());
    for (size_t i = 0; i < a.rows(); ++i) arow[i] = row_of(a, i);
    for (size_t i = 0; i < b.rows(); ++i) brow[i] = row_of(b, i);
    size_t n = a.rows() * b.rows();
    std::vector<SparseRow> result(n);

    auto run_row = [&](size_t r) {
        size_t i1 = r / b.rows(), i2 = r % b.rows();
        SparseRow row;
        row.reserve(arow[i1].size() * brow[i2].size());
        for (const auto& [c1, v1] : arow[i1])
            for (const auto& [c2, v2] : brow[i2])
                row.emplace_back((uint32_t)((size_t)c1 * b.cols() + c2), v1 * v2);
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        result[r] = std::move(row);
    };

#ifdef _OPENMP
    if (n * std::max<size_t>(b.cols(), 1) >= kParallelCutoff) {
#pragma omp parallel for schedule(dynamic)
        for (long long r = 0; r < (long long)n; ++r) run_row((size_t)r);
    } else
#endif
    {
        for (size_t r = 0; r < n; ++r) run_row(r);
    }

    for (size_t r = 0; r < n; ++r)
        for (auto& [c, v] : result[r]) out.set(r, c, std::move(v));
    out.finalize();
    return out;
}

namespace {

struct EchelonForm {
    std::vector<SparseRow> rows;        // reduced rows, pivot normalized to 1
    std::vector<size_t> pivot_cols;     // ascending
    size_t cols = 0;
};

// Forward elimination with cross-multiplication (fraction-free after the
// per-row content removal), then back-substitution to the reduced form.
EchelonForm echelonize(const Morphism& m) {
    EchelonForm ef;
    ef.cols = m.cols();
    std::vector<SparseRow> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        rows[i] = row_of(m, i);
        remove_content(rows[i]);
    }

    size_t next = 0;  // rows above are settled
    for (size_t col = 0; col < ef.cols && next < rows.size(); ++col) {
        // pick the sparsest row with a leading entry in this column
        size_t pick = rows.size();
        for (size_t i = next; i < rows.size(); ++i) {
            if (!rows[i].empty() && rows[i].front().first == col) {
                if (pick == rows.size() || rows[i].size() < rows[pick].size()) pick = i;
            }
        }
        if (pick == rows.size()) continue;
        std::swap(rows[next], rows[pick]);
        const SparseRow pivot_row = rows[next];
        const Cyc pivot = pivot_row.front().second;

        auto eliminate = [&](size_t i) {
            if (rows[i].empty() || rows[i].front().first != col) return;
            Cyc factor = rows[i].front().second;
            rows[i] = row_axpy(rows[i], pivot, pivot_row, -factor);
            remove_content(rows[i]);
        };
        size_t tail = rows.size() - (next + 1);
#ifdef _OPENMP
        if (tail * (pivot_row.size() + 8) >= kParallelCutoff) {
#pragma omp parallel for schedule(dynamic)
            for (long long i = (long long)next + 1; i < (long long)rows.size(); ++i)
                eliminate((size_t)i);
        } else
#endif
        {
            (void)tail;
            for (size_t i = next + 1; i < rows.size(); ++i) eliminate(i);
        }
        ef.pivot_cols.push_back(col);
        ++next;
    }

    rows.resize(next);
    // normalize pivots and clear above
    for (size_t p = next; p-- > 0;) {
        Cyc inv = rows[p].front().second.inv();
        for (auto& [c, v] : rows[p]) v = v * inv;
        size_t col = rows[p].front().first;
        auto clear_above = [&](size_t i) {
            Cyc v = row_get(rows[i], (uint32_t)col);
            if (v.is_zero()) return;
            rows[i] = row_axpy(rows[i], Cyc::one(), rows[p], -v);
        };
#ifdef _OPENMP
        if (p * (rows[p].size() + 8) >= kParallelCutoff) {
#pragma omp parallel for schedule(dynamic)
            for (long long i = 0; i < (long long)p; ++i) clear_above((size_t)i);
        } else
#endif
        {
            for (size_t i = 0; i < p; ++i) clear_above(i);
        }
    }
    ef.rows = std::move(rows);
    return ef;
}

} // namespace

RrefResult rref_kernel(const Morphism& m) {
    EchelonForm ef = echelonize(m);
    RrefResult res;
    res.rank = ef.pivot_cols.size();
    res.pivot_cols = ef.pivot_cols;

    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : ef.pivot_cols) is_pivot[c] = true;

    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Cyc> v(m.cols());
        v[c] = Cyc::one();
        for (size_t p = 0; p < ef.rows.size(); ++p) {
            Cyc coef = row_get(ef.rows[p], (uint32_t)c);
            if (!coef.is_zero()) v[ef.pivot_cols[p]] = -coef;
        }
        res.kernel.push_back(std::move(v));
    }
    return res;
}

std::optional<Morphism> solve(const Morphism& a, const Morphism& rhs) {
    if (a.rows() != rhs.rows()) throw ShapeError("solve: row mismatch");
    // augmented matrix [a | rhs]
    Morphism aug({Space{"r", (uint32_t)a.rows()}},
                 {Space{"c", (uint32_t)(a.cols() + rhs.cols())}});
    a.for_each([&](size_t i, size_t j, const Cyc& v) { aug.set(i, j, v); });
    rhs.for_each([&](size_t i, size_t j, const Cyc& v) { aug.set(i, a.cols() + j, v); });

    EchelonForm ef = echelonize(aug);
    Morphism x({Space{"x", (uint32_t)a.cols()}}, {Space{"n", (uint32_t)rhs.cols()}});
    for (size_t p = 0; p < ef.pivot_cols.size(); ++p) {
        if (ef.pivot_cols[p] >= a.cols()) return std::nullopt;  // inconsistent
        for (const auto& [c, v] : ef.rows[p]) {
            if (c >= a.cols()) x.set(ef.pivot_cols[p], c - a.cols(), v);
        }
    }
    x.finalize();
    return x;
}

std::optional<Morphism> inverse(const Morphism& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Morphism id = Morphism::identity({Space{"i", (uint32_t)m.rows()}});
    auto x = solve(m, id);
    if (!x) return std::nullopt;
    // solve() succeeds with free columns when m is singular; rank check
    auto r = rref_kernel(m);
    if (r.rank != m.cols()) return std::nullopt;
    Morphism out = x->retagged(m.domain(), m.codomain());
    return out;
}

std::optional<std::vector<Cyc>> solve_in_span(const std::vector<std::vector<Cyc>>& basis,
                                              const std::vector<Cyc>& target) {
    if (basis.empty()) {
        for (const Cyc& v : target)
            if (!v.is_zero()) return std::nullopt;
        return std::vector<Cyc>{};
    }
    size_t n = basis[0].size();
    Morphism a({Space{"r", (uint32_t)n}}, {Space{"c", (uint32_t)basis.size()}});
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < n; ++i)
            if (!basis[j][i].is_zero()) a.set(i, j, basis[j][i]);
    Morphism b({Space{"r", (uint32_t)n}}, {Space{"one", 1}});
    for (size_t i = 0; i < n; ++i)
        if (!target[i].is_zero()) b.set(i, 0, target[i]);
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    std::vector<Cyc> coords(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) coords[j] = x->entry(j, 0);
    return coords;
}

} // namespace hopfdual::kernels
