#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cs {

using Rational = boost::multiprecision::cpp_rational;

/// Parameters of the phase ring for a fixed qudit order d:
/// q = exp(2*pi*i/d), zeta a square root of q with zeta^(d^2) = 1,
/// delta = sqrt(d).
struct RingParams {
    int d = 0;
    /// zeta = exp(pi*i*zetaNum/d); d odd -> zetaNum = d+1, d even -> zetaNum = 1.
    int zetaNum = 0;
    /// Multiplicative order m of zeta: d for odd d, 2d for even d.
    int zetaOrder = 0;
    /// zeta = exp(2*pi*i*zetaK/m) with gcd(zetaK, m) = 1.
    int zetaK = 0;
    /// Coefficients of the m-th cyclotomic polynomial, degree phi(m), monic.
    std::vector<long long> cyclo;

    int phi() const { return static_cast<int>(cyclo.size()) - 1; }
    std::complex<double> q() const;
    std::complex<double> zeta() const;
    double delta() const;

    bool operator==(const RingParams&) const = default;
};

/// Builds the ring for qudit order d (throws std::invalid_argument for d < 2).
RingParams make_ring(int d);

/// Exact element of the ring generated by zeta and delta = sqrt(d):
///   value = sum_e even[e]*zeta^e  +  delta * sum_e odd[e]*zeta^e
/// with exponents reduced modulo the cyclotomic polynomial of zeta's order
/// (so 0 <= e < phi(m) and zero coefficients are absent). Powers delta^2 = d
/// and delta^{-1} = delta/d are folded into the rational coefficients.
/// Equal values in each Q(zeta)-coordinate have identical representations;
/// equality of the pair is used as a sound syntactic test.
class ExactScalar {
public:
    using CoeffMap = std::map<int, Rational>;

    ExactScalar() = default;
    explicit ExactScalar(RingParams ring) : ring_(ring) {}

    static ExactScalar zero(RingParams ring) { return ExactScalar(ring); }
    static ExactScalar one(RingParams ring);
    static ExactScalar from_rational(RingParams ring, const Rational& r);
    /// zeta^e (exponent taken mod the order of zeta, then reduced).
    static ExactScalar zeta_pow(RingParams ring, long long e);
    /// q^e = zeta^(2e).
    static ExactScalar q_pow(RingParams ring, long long e);
    /// delta^e for any integer e (negative allowed).
    static ExactScalar delta_pow(RingParams ring, int e);

    const RingParams& ring() const { return ring_; }
    bool is_zero() const { return even_.empty() && odd_.empty(); }
    const CoeffMap& even_part() const { return even_; }
    const CoeffMap& odd_part() const { return odd_; }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar conj() const;

    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;
    std::string to_string() const;

    /// Inserts coeff * zeta^e * delta^deltaPow (used by parsers/builders).
    void add_term(long long zetaExp, const Rational& coeff, int deltaPow = 0);

private:
    RingParams ring_;
    CoeffMap even_;  // coefficients of zeta^e
    CoeffMap odd_;   // coefficients of delta * zeta^e

    void check_same_ring(const ExactScalar& o) const;
    static void add_into(CoeffMap& dst, int e, const Rational& c);
    int reduce_exp(long long e) const;
    /// Rewrites exponents >= phi(m) via the cyclotomic relation.
    void reduce_map(CoeffMap& m) const;
};

}  // namespace cs
