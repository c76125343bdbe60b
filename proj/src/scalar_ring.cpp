#include "cs/scalar_ring.hpp"

#include <cmath>
#include <iterator>
#include <numbers>
#include <sstream>
#include <utility>

namespace cs {

std::complex<double> RingParams::q() const {
    double a = 2.0 * std::numbers::pi / d;
    return {std::cos(a), std::sin(a)};
}

std::complex<double> RingParams::zeta() const {
    double a = std::numbers::pi * zetaNum / d;
    return {std::cos(a), std::sin(a)};
}

double RingParams::delta() const { return std::sqrt(static_cast<double>(d)); }

namespace {

// Exact division of integer polynomials (assumes it divides evenly, monic divisor).
std::vector<long long> poly_divide(std::vector<long long> num,
                                   const std::vector<long long>& den) {
    int nd = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> quot(nd - dd + 1, 0);
    for (int i = nd; i >= dd; --i) {
        long long c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return quot;
}

std::vector<long long> cyclotomic(int m) {
    // Phi_m = (x^m - 1) / prod_{k | m, k < m} Phi_k.
    std::vector<long long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int k = 1; k < m; ++k)
        if (m % k == 0) p = poly_divide(std::move(p), cyclotomic(k));
    return p;
}

}  // namespace

RingParams make_ring(int d) {
    if (d < 2) throw std::invalid_argument("make_ring: d must be >= 2");
    RingParams r;
    r.d = d;
    // d odd: zeta = q^((d+1)/2) = exp(pi*i*(d+1)/d); d even: zeta = exp(pi*i/d).
    r.zetaNum = (d % 2 == 1) ? d + 1 : 1;
    if (d % 2 == 1) {
        // zeta^d = exp(pi*i*(d+1)) = 1 since d+1 is even, so zeta has order d
        // and equals exp(2*pi*i*((d+1)/2)/d).
        r.zetaOrder = d;
        r.zetaK = ((d + 1) / 2) % d;
    } else {
        r.zetaOrder = 2 * d;
        r.zetaK = 1;
    }
    r.cyclo = cyclotomic(r.zetaOrder);
    return r;
}

ExactScalar ExactScalar::one(RingParams ring) {
    ExactScalar s(ring);
    s.even_[0] = 1;
    return s;
}

ExactScalar ExactScalar::from_rational(RingParams ring, const Rational& r) {
    ExactScalar s(ring);
    if (r != 0) s.even_[0] = r;
    return s;
}

int ExactScalar::reduce_exp(long long e) const {
    long long m = ring_.zetaOrder;
    long long r = e % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

void ExactScalar::reduce_map(CoeffMap& m) const {
    // Highest exponents first: x^phi = -sum_{i<phi} cyclo[i] x^i.
    int phi = ring_.phi();
    while (!m.empty()) {
        auto it = std::prev(m.end());
        int e = it->first;
        if (e < phi) break;
        Rational c = it->second;
        m.erase(it);
        for (int i = 0; i < phi; ++i)
            if (ring_.cyclo[i] != 0)
                add_into(m, e - phi + i, c * Rational(-ring_.cyclo[i]));
    }
}

ExactScalar ExactScalar::zeta_pow(RingParams ring, long long e) {
    ExactScalar s(ring);
    s.even_[s.reduce_exp(e)] = 1;
    s.reduce_map(s.even_);
    return s;
}

ExactScalar ExactScalar::q_pow(RingParams ring, long long e) {
    // q = zeta^2 exactly: zeta = exp(pi*i*zetaNum/d) with zetaNum odd, so
    // zeta^2 = exp(2*pi*i*zetaNum/d) = q^zetaNum; for zetaNum = d+1 (d odd)
    // q^(d+1) = q, and for zetaNum = 1 trivially. Hence zeta^(2e) = q^e.
    return zeta_pow(ring, 2 * e);
}

ExactScalar ExactScalar::delta_pow(RingParams ring, int e) {
    ExactScalar s(ring);
    Rational c = 1;
    int half = e;
    // delta^e = d^(e div 2) * delta^(e mod 2), with floor semantics for e < 0.
    int whole = (half >= 0) ? half / 2 : -((-half + 1) / 2);
    int rem = half - 2 * whole;  // 0 or 1
    Rational dd = ring.d;
    if (whole >= 0)
        for (int i = 0; i < whole; ++i) c *= dd;
    else
        for (int i = 0; i < -whole; ++i) c /= dd;
    if (rem == 0)
        s.even_[0] = c;
    else
        s.odd_[0] = c;
    return s;
}

void ExactScalar::check_same_ring(const ExactScalar& o) const {
    if (!(ring_ == o.ring_))
        throw std::invalid_argument("ExactScalar: mismatched ring parameters");
}

void ExactScalar::add_into(CoeffMap& dst, int e, const Rational& c) {
    if (c == 0) return;
    auto it = dst.find(e);
    if (it == dst.end()) {
        dst.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

void ExactScalar::add_term(long long zetaExp, const Rational& coeff, int deltaPow) {
    ExactScalar t = delta_pow(ring_, deltaPow);
    t *= zeta_pow(ring_, zetaExp);
    t *= from_rational(ring_, coeff);
    *this += t;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    check_same_ring(o);
    ExactScalar r = *this;
    for (auto& [e, c] : o.even_) add_into(r.even_, e, c);
    for (auto& [e, c] : o.odd_) add_into(r.odd_, e, c);
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    check_same_ring(o);
    ExactScalar r = *this;
    for (auto& [e, c] : o.even_) add_into(r.even_, e, -c);
    for (auto& [e, c] : o.odd_) add_into(r.odd_, e, -c);
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    check_same_ring(o);
    ExactScalar r(ring_);
    Rational dd = ring_.d;
    auto mul_into = [&](const CoeffMap& a, const CoeffMap& b, CoeffMap& dst,
                        const Rational& extra) {
        for (auto& [ea, ca] : a)
            for (auto& [eb, cb] : b) add_into(dst, ea + eb, ca * cb * extra);
    };
    mul_into(even_, o.even_, r.even_, 1);
    mul_into(odd_, o.odd_, r.even_, dd);  // delta * delta = d
    mul_into(even_, o.odd_, r.odd_, 1);
    mul_into(odd_, o.even_, r.odd_, 1);
    r.reduce_map(r.even_);
    r.reduce_map(r.odd_);
    return r;
}

ExactScalar ExactScalar::conj() const {
    ExactScalar r(ring_);
    for (auto& [e, c] : even_) add_into(r.even_, reduce_exp(-static_cast<long long>(e)), c);
    for (auto& [e, c] : odd_) add_into(r.odd_, reduce_exp(-static_cast<long long>(e)), c);
    r.reduce_map(r.even_);
    r.reduce_map(r.odd_);
    return r;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    return ring_ == o.ring_ && even_ == o.even_ && odd_ == o.odd_;
}

std::complex<double> ExactScalar::to_complex() const {
    std::complex<double> z = 0;
    auto eval = [&](const CoeffMap& m, double scale) {
        for (auto& [e, c] : m) {
            double a = 2.0 * std::numbers::pi * ring_.zetaK * e / ring_.zetaOrder;
            z += scale * static_cast<double>(c) *
                 std::complex<double>(std::cos(a), std::sin(a));
        }
    };
    eval(even_, 1.0);
    eval(odd_, ring_.delta());
    return z;
}

std::string ExactScalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto dump = [&](const CoeffMap& m, bool withDelta) {
        for (auto& [e, c] : m) {
            if (!first) os << " + ";
            first = false;
            os << c;
            if (withDelta) os << "*delta";
            if (e != 0) os << "*zeta^" << e;
        }
    };
    dump(even_, false);
    dump(odd_, true);
    return os.str();
}

}  // namespace cs
