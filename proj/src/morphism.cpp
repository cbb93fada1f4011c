#include "hopfdual/morphism.hpp"

#include "hopfdual/kernels.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hopfdual {

namespace {
// Keep full matrices dense only while they stay small.
constexpr size_t kDenseLimit = 1u << 20;
} // namespace

size_t total_dim(const SpaceList& factors) {
    size_t d = 1;
    for (const Space& s : factors) d *= s.dim;
    return d;
}

bool same_dims(const SpaceList& a, const SpaceList& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].dim != b[i].dim) return false;
    return true;
}

std::string space_list_to_string(const SpaceList& s) {
    if (s.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += "*";
        out += s[i].name;
    }
    return out;
}

void Morphism::ensure_shape() {
    rows_ = total_dim(cod_);
    cols_ = total_dim(dom_);
    if (!dense_) sp_.assign(rows_, {});
    else dn_.assign(rows_ * cols_, Cyc());
}

Morphism::Morphism(SpaceList codomain, SpaceList domain)
    : cod_(std::move(codomain)), dom_(std::move(domain)) {
    ensure_shape();
}

Morphism Morphism::identity(const SpaceList& sp) {
    Morphism m(sp, sp);
    for (size_t i = 0; i < m.rows_; ++i) m.sp_[i].emplace_back((uint32_t)i, Cyc::one());
    return m;
}

Morphism Morphism::scalar(const Cyc& value) {
    Morphism m({}, {});
    if (!value.is_zero()) m.sp_[0].emplace_back(0, value);
    return m;
}

Morphism Morphism::flip(const Space& x, const Space& y) {
    Morphism m({y, x}, {x, y});
    for (uint32_t i = 0; i < x.dim; ++i)
        for (uint32_t j = 0; j < y.dim; ++j)
            m.sp_[(size_t)j * x.dim + i].emplace_back(i * y.dim + j, Cyc::one());
    return m;
}

double Morphism::fill_ratio() const {
    size_t total = rows_ * cols_;
    return total == 0 ? 0.0 : (double)nonzero_count() / (double)total;
}

void Morphism::set(size_t r, size_t c, Cyc v) {
    if (r >= rows_ || c >= cols_) throw ShapeError("entry index out of range");
    if (dense_) {
        dn_[r * cols_ + c] = std::move(v);
        return;
    }
    auto& row = sp_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, size_t col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero()) row.erase(it);
        else it->second = std::move(v);
    } else if (!v.is_zero()) {
        row.insert(it, {(uint32_t)c, std::move(v)});
    }
}

void Morphism::add(size_t r, size_t c, const Cyc& v) {
    if (v.is_zero()) return;
    if (dense_) {
        dn_[r * cols_ + c] += v;
        return;
    }
    auto& row = sp_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, size_t col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {(uint32_t)c, v});
    }
}

Cyc Morphism::entry(size_t r, size_t c) const {
    if (r >= rows_ || c >= cols_) throw ShapeError("entry index out of range");
    if (dense_) return dn_[r * cols_ + c];
    const auto& row = sp_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, size_t col) { return p.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Cyc();
}

void Morphism::for_each(const std::function<void(size_t, size_t, const Cyc&)>& fn) const {
    for (size_t r = 0; r < rows_; ++r) for_row(r, [&](size_t c, const Cyc& v) { fn(r, c, v); });
}

void Morphism::for_row(size_t r, const std::function<void(size_t, const Cyc&)>& fn) const {
    if (dense_) {
        for (size_t c = 0; c < cols_; ++c)
            if (!dn_[r * cols_ + c].is_zero()) fn(c, dn_[r * cols_ + c]);
    } else {
        for (const auto& [c, v] : sp_[r]) fn(c, v);
    }
}

Morphism Morphism::retagged(SpaceList codomain, SpaceList domain) const {
    if (total_dim(codomain) != rows_ || total_dim(domain) != cols_)
        throw ShapeError("retag with mismatched total dimension");
    Morphism m = *this;
    m.cod_ = std::move(codomain);
    m.dom_ = std::move(domain);
    return m;
}

Morphism Morphism::operator+(const Morphism& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("adding morphisms of different shape");
    Morphism r = *this;
    o.for_each([&](size_t i, size_t j, const Cyc& v) { r.add(i, j, v); });
    r.finalize();
    return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("subtracting morphisms of different shape");
    Morphism r = *this;
    o.for_each([&](size_t i, size_t j, const Cyc& v) { r.add(i, j, -v); });
    r.finalize();
    return r;
}

Morphism Morphism::scaled(const Cyc& s) const {
    Morphism r(cod_, dom_);
    if (s.is_zero()) return r;
    for_each([&](size_t i, size_t j, const Cyc& v) { r.add(i, j, v * s); });
    r.finalize();
    return r;
}

Morphism Morphism::compose(const Morphism& first) const {
    if (cols_ != first.rows_)
        throw ShapeError("composing " + space_list_to_string(dom_) + " <- " +
                         space_list_to_string(first.cod_) + ": dimension mismatch");
    Morphism r = kernels::mat_mul(*this, first);
    r.cod_ = cod_;
    r.dom_ = first.dom_;
    return r;
}

Morphism Morphism::tensor(const Morphism& o) const {
    Morphism r = kernels::kron(*this, o);
    SpaceList cod = cod_, dom = dom_;
    cod.insert(cod.end(), o.cod_.begin(), o.cod_.end());
    dom.insert(dom.end(), o.dom_.begin(), o.dom_.end());
    r.cod_ = std::move(cod);
    r.dom_ = std::move(dom);
    return r;
}

bool Morphism::is_zero() const {
    bool zero = true;
    for_each([&](size_t, size_t, const Cyc&) { zero = false; });
    return zero;
}

bool Morphism::is_identity() const {
    if (rows_ != cols_) return false;
    size_t diag = 0;
    bool ok = true;
    for_each([&](size_t i, size_t j, const Cyc& v) {
        if (i != j || v != Cyc::one()) ok = false;
        else ++diag;
    });
    return ok && diag == rows_;
}

bool Morphism::operator==(const Morphism& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return !first_difference(o).has_value();
}

std::optional<Morphism::Mismatch> Morphism::first_difference(const Morphism& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("comparing morphisms of different shape");
    for (size_t r = 0; r < rows_; ++r) {
        // merge the two rows
        std::vector<std::pair<size_t, std::pair<Cyc, Cyc>>> cols;
        for_row(r, [&](size_t c, const Cyc& v) { cols.push_back({c, {v, Cyc()}}); });
        o.for_row(r, [&](size_t c, const Cyc& v) {
            auto it = std::find_if(cols.begin(), cols.end(),
                                   [&](const auto& p) { return p.first == c; });
            if (it == cols.end()) cols.push_back({c, {Cyc(), v}});
            else it->second.second = v;
        });
        std::sort(cols.begin(), cols.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [c, pair] : cols)
            if (pair.first != pair.second)
                return Mismatch{r, c, pair.first, pair.second};
    }
    return std::nullopt;
}

Morphism Morphism::column(size_t c) const {
    Morphism r(cod_, {});
    for (size_t i = 0; i < rows_; ++i) {
        Cyc v = entry(i, c);
        if (!v.is_zero()) r.add(i, 0, v);
    }
    return r;
}

std::vector<Cyc> Morphism::column_vector(size_t c) const {
    std::vector<Cyc> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = entry(i, c);
    return v;
}

size_t Morphism::nonzero_count() const {
    size_t n = 0;
    for_each([&](size_t, size_t, const Cyc&) { ++n; });
    return n;
}

void Morphism::finalize() {
    size_t total = rows_ * cols_;
    size_t nnz = nonzero_count();
    bool want_dense = total <= kDenseLimit && total > 0 && 2 * nnz > total;
    if (want_dense == dense_) return;
    if (want_dense) {
        std::vector<Cyc> dn(total);
        for_each([&](size_t i, size_t j, const Cyc& v) { dn[i * cols_ + j] = v; });
        dn_ = std::move(dn);
        sp_.clear();
        dense_ = true;
    } else {
        std::vector<std::vector<std::pair<uint32_t, Cyc>>> sp(rows_);
        for_each([&](size_t i, size_t j, const Cyc& v) { sp[i].emplace_back((uint32_t)j, v); });
        sp_ = std::move(sp);
        dn_.clear();
        dense_ = false;
    }
}

std::string Morphism::to_string() const {
    std::ostringstream os;
    os << space_list_to_string(cod_) << " <- " << space_list_to_string(dom_) << " [";
    bool first = true;
    for_each([&](size_t i, size_t j, const Cyc& v) {
        if (!first) os << ", ";
        first = false;
        os << "(" << i << "," << j << ")=" << v.to_string();
    });
    os << "]";
    return os.str();
}

MorphismBuilder::MorphismBuilder(SpaceList codomain, SpaceList domain)
    : m_(std::move(codomain), std::move(domain)) {}

void MorphismBuilder::add(size_t r, size_t c, const Cyc& v) { m_.add(r, c, v); }

Morphism MorphismBuilder::take() {
    m_.finalize();
    return std::move(m_);
}

} // namespace hopfdual
