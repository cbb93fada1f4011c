#include "hopfdual/kernels.hpp"

namespace hopfdual::reference {

// Textbook triple loop over explicit entries. Slow and obviously correct.
Morphism mat_mul_serial(const Morphism& a, const Morphism& b) {
    if (a.cols() != b.rows()) throw ShapeError("mat_mul_serial: inner dimension mismatch");
    Morphism out(a.codomain(), b.domain());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < b.cols(); ++j) {
            Cyc acc;
            for (size_t k = 0; k < a.cols(); ++k) {
                Cyc av = a.entry(i, k);
                if (av.is_zero()) continue;
                Cyc bv = b.entry(k, j);
                if (bv.is_zero()) continue;
                acc += av * bv;
            }
            if (!acc.is_zero()) out.set(i, j, acc);
        }
    }
    out.finalize();
    return out;
}

// Straightforward Gauss-Jordan over the field, dense rows, no
// fraction-free tricks. Kept as the oracle for rref_kernel.
kernels::RrefResult rref_kernel_serial(const Morphism& m) {
    size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Cyc>> rows(nr, std::vector<Cyc>(nc));
    m.for_each([&](size_t i, size_t j, const Cyc& v) { rows[i][j] = v; });

    kernels::RrefResult res;
    size_t next = 0;
    for (size_t col = 0; col < nc && next < nr; ++col) {
        size_t pivot = nr;
        for (size_t i = next; i < nr; ++i)
            if (!rows[i][col].is_zero()) { pivot = i; break; }
        if (pivot == nr) continue;
        std::swap(rows[next], rows[pivot]);
        Cyc inv = rows[next][col].inv();
        for (size_t j = col; j < nc; ++j) rows[next][j] = rows[next][j] * inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == next || rows[i][col].is_zero()) continue;
            Cyc f = rows[i][col];
            for (size_t j = col; j < nc; ++j) rows[i][j] -= f * rows[next][j];
        }
        res.pivot_cols.push_back(col);
        ++next;
    }
    res.rank = res.pivot_cols.size();

    std::vector<bool> is_pivot(nc, false);
    for (size_t c : res.pivot_cols) is_pivot[c] = true;
    for (size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Cyc> v(nc);
        v[c] = Cyc::one();
        for (size_t p = 0; p < res.pivot_cols.size(); ++p)
            if (!rows[p][c].is_zero()) v[res.pivot_cols[p]] = -rows[p][c];
        res.kernel.push_back(std::move(v));
    }
    return res;
}

} // namespace hopfdual::reference
