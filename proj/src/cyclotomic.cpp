#include "hopfdual/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfdual {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials; the divisions arising between
// x^N - 1 and cyclotomic factors are always exact.
ZPoly zpoly_div_exact(const ZPoly& num, const ZPoly& den) {
    if (num.size() < den.size()) return {};
    ZPoly rem = num;
    ZPoly quot(num.size() - den.size() + 1);
    for (size_t shift = quot.size(); shift-- > 0;) {
        mpz_class q = rem[shift + den.size() - 1] / den.back();
        quot[shift] = q;
        if (q != 0)
            for (size_t j = 0; j < den.size(); ++j)
                rem[shift + j] -= q * den[j];
    }
    return quot;
}

std::map<unsigned, ZPoly> g_phi_cache;
std::mutex g_phi_mutex;

ZPoly compute_phi(unsigned n) {
    // x^n - 1
    ZPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = zpoly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

} // namespace

const ZPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(n);
        if (it != g_phi_cache.end()) return it->second;
    }
    ZPoly phi = compute_phi(n);
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(n, std::move(phi)).first->second;
}

namespace {

// Rows k = 0 .. 2*phi-2 of x^k mod Phi_N, precomputed once per order.
// Only the rows k >= phi are non-trivial.
struct ReductionTable {
    unsigned phi;
    std::vector<std::vector<Rat>> pow;  // pow[k] has size phi
};

std::map<unsigned, ReductionTable> g_red_cache;
std::mutex g_red_mutex;

const ReductionTable& reduction_table(unsigned n) {
    {
        std::lock_guard<std::mutex> lock(g_red_mutex);
        auto it = g_red_cache.find(n);
        if (it != g_red_cache.end()) return it->second;
    }
    const ZPoly& phi_poly = cyclotomic_polynomial(n);
    unsigned phi = euler_phi(n);
    ReductionTable t;
    t.phi = phi;
    t.pow.resize(2 * phi - 1 > 0 ? 2 * phi - 1 : 1);
    for (unsigned k = 0; k < phi; ++k) {
        t.pow[k].assign(phi, Rat(0));
        t.pow[k][k] = 1;
    }
    // x^(phi+j) = x * x^(phi+j-1) reduced: shift then subtract the
    // overflow times (x^phi mod Phi) = -(lower coefficients of Phi).
    for (unsigned k = phi; k + 1 <= 2 * phi - 1; ++k) {
        std::vector<Rat> prev = t.pow[k - 1];
        std::vector<Rat> cur(phi, Rat(0));
        for (unsigned j = 0; j + 1 < phi; ++j) cur[j + 1] = prev[j];
        Rat overflow = prev[phi - 1];
        if (overflow != 0) {
            for (unsigned j = 0; j < phi; ++j) {
                Rat c(phi_poly[j]);
                cur[j] -= overflow * c;  // Phi monic
            }
        }
        t.pow[k] = std::move(cur);
    }
    std::lock_guard<std::mutex> lock(g_red_mutex);
    return g_red_cache.emplace(n, std::move(t)).first->second;
}

} // namespace

void Cyc::reduce_raw(std::vector<Rat> raw) {
    unsigned phi = euler_phi(order_);
    c_.assign(phi, Rat(0));
    if (raw.empty()) return;
    // Fold powers >= order down via zeta^order = 1 first, so arbitrary
    // length input is accepted, then reduce degrees phi..order-1 mod Phi.
    std::vector<Rat> folded(order_, Rat(0));
    for (size_t k = 0; k < raw.size(); ++k)
        if (raw[k] != 0) folded[k % order_] += raw[k];
    const ReductionTable& t = reduction_table(order_);
    for (unsigned k = 0; k < order_; ++k) {
        if (folded[k] == 0) continue;
        if (k < phi) {
            c_[k] += folded[k];
        } else {
            // x^k mod Phi for phi <= k < order: extend the table on the
            // fly by repeated multiplication with x.
            std::vector<Rat> row = t.pow[phi == 1 ? 0 : std::min<unsigned>(k, 2 * phi - 2)];
            for (unsigned step = (phi == 1 ? 0 : std::min<unsigned>(k, 2 * phi - 2)); step < k; ++step) {
                std::vector<Rat> next(phi, Rat(0));
                for (unsigned j = 0; j + 1 < phi; ++j) next[j + 1] = row[j];
                Rat overflow = row[phi - 1];
                if (overflow != 0) {
                    const ZPoly& p = cyclotomic_polynomial(order_);
                    for (unsigned j = 0; j < phi; ++j) next[j] -= overflow * Rat(p[j]);
                }
                row = std::move(next);
            }
            for (unsigned j = 0; j < phi; ++j) c_[j] += folded[k] * row[j];
        }
    }
}

Cyc::Cyc(unsigned order, std::vector<Rat> raw) : order_(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    reduce_raw(std::move(raw));
}

Cyc Cyc::root_of_unity(unsigned order, long k) {
    long m = k % (long)order;
    if (m < 0) m += order;
    std::vector<Rat> raw((size_t)m + 1, Rat(0));
    raw[(size_t)m] = 1;
    return Cyc(order, std::move(raw));
}

bool Cyc::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Cyc Cyc::embedded(unsigned target) const {
    if (target == order_) return *this;
    if (target % order_ != 0)
        throw std::invalid_argument("embedding target must be a multiple of the order");
    unsigned stride = target / order_;
    std::vector<Rat> raw((size_t)(c_.size() - 1) * stride + 1, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) raw[k * stride] = c_[k];
    return Cyc(target, std::move(raw));
}

namespace {
unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
} // namespace

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (order_ != o.order_) {
        unsigned l = lcm_u(order_, o.order_);
        *this = embedded(l);
        return *this += o.embedded(l);
    }
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (order_ != o.order_) {
        unsigned l = lcm_u(order_, o.order_);
        *this = embedded(l);
        return *this -= o.embedded(l);
    }
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (order_ != o.order_) {
        unsigned l = lcm_u(order_, o.order_);
        *this = embedded(l);
        return *this *= o.embedded(l);
    }
    unsigned phi = (unsigned)c_.size();
    if (phi == 1) {  // plain rationals
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rat> prod(2 * phi - 1, Rat(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    const ReductionTable& t = reduction_table(order_);
    std::vector<Rat> res(phi, Rat(0));
    for (unsigned k = 0; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        const std::vector<Rat>& row = t.pow[k];
        for (unsigned j = 0; j < phi; ++j)
            if (row[j] != 0) res[j] += prod[k] * row[j];
    }
    c_ = std::move(res);
    return *this;
}

namespace {

using QPoly = std::vector<Rat>;  // dense, index = degree

void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_divmod(QPoly num, const QPoly& den, QPoly& quot_out) {
    quot_out.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat q = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot_out[shift] = q;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= q * den[j];
        qpoly_trim(num);
        if (num.size() < den.size()) break;
    }
    return num;  // remainder
}

} // namespace

Cyc Cyc::inv() const {
    if (is_zero()) throw ZeroInverse();
    unsigned phi = (unsigned)c_.size();
    if (phi == 1) {
        Cyc r = *this;
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    // Extended Euclid on (a, Phi_N) over Q[x]: find u with u*a = 1 mod Phi.
    QPoly a(c_.begin(), c_.end());
    qpoly_trim(a);
    const ZPoly& phiz = cyclotomic_polynomial(order_);
    QPoly b(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) b[i] = Rat(phiz[i]);

    QPoly r0 = b, r1 = a;
    QPoly u0{Rat(0)}, u1{Rat(1)};
    while (true) {
        qpoly_trim(r1);
        if (r1.empty()) throw ZeroInverse();  // cannot happen: Phi irreducible
        if (r1.size() == 1) break;
        QPoly q;
        QPoly r2 = qpoly_divmod(r0, r1, q);
        // u2 = u0 - q*u1
        QPoly u2 = u0;
        u2.resize(std::max(u2.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        qpoly_trim(u2);
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
    }
    // r1 is a nonzero constant c: u1*a = c mod Phi, so inverse = u1/c.
    Rat cst = r1[0];
    std::vector<Rat> res(u1.size());
    for (size_t i = 0; i < u1.size(); ++i) res[i] = u1[i] / cst;
    return Cyc(order_, std::move(res));
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc base = *this;
    Cyc acc = Cyc::one();
    unsigned long u = (unsigned long)e;
    while (u) {
        if (u & 1) acc *= base;
        base *= base;
        u >>= 1;
    }
    return acc;
}

bool Cyc::operator==(const Cyc& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    unsigned l = lcm_u(order_, o.order_);
    return embedded(l).c_ == o.embedded(l).c_;
}

std::string Cyc::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c_[k]);
        if (k > 0) os << "*z" << order_ << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.to_string(); }

} // namespace hopfdual
