#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ultrastab {

/// Thrown when a documented precondition is violated. The message names the
/// precondition so callers (and the CLI) can surface it verbatim.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Global cap on the bit length of scalar numerators/denominators. Exact
/// arithmetic never loses precision, so the only failure mode is unbounded
/// growth; the cap turns that into a hard error instead of a hang.
struct ScalarLimits {
    static std::size_t max_bits;
};

class Prime {
public:
    explicit Prime(unsigned long p);

    unsigned long value() const noexcept { return p_; }

    bool operator==(const Prime& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const Prime& o) const noexcept { return p_ != o.p_; }

private:
    unsigned long p_;
};

/// Exponent of the absolute value: |x| = p^(-value). The +infinity case
/// encodes |x| = 0. Values are exact rationals; Gauss norms at rational
/// apartment points produce non-integer exponents, so integers would not do.
class Valuation {
public:
    Valuation() : finite_(true), v_(0) {}
    Valuation(long v) : finite_(true), v_(v) {}
    explicit Valuation(mpq_class v) : finite_(true), v_(std::move(v)) {}

    static Valuation infinity() {
        Valuation r;
        r.finite_ = false;
        return r;
    }

    bool is_infinite() const noexcept { return !finite_; }
    const mpq_class& value() const;

    Valuation operator+(const Valuation& o) const;
    Valuation operator+(const mpq_class& q) const;
    Valuation operator-() const;

    bool operator==(const Valuation& o) const;
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const;
    bool operator<=(const Valuation& o) const;
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    static Valuation min(const Valuation& a, const Valuation& b) { return a <= b ? a : b; }
    static Valuation max(const Valuation& a, const Valuation& b) { return a <= b ? b : a; }

    std::string str() const;

private:
    bool finite_;
    mpq_class v_;
};

/// An element of the field Q carrying its prime, in canonical coprime form.
/// All absolute-value comparisons downstream happen on valuations, never on
/// floating-point approximations.
class PadicScalar {
public:
    PadicScalar(mpq_class value, Prime p);
    PadicScalar(long num, long den, Prime p);

    static PadicScalar zero(Prime p) { return PadicScalar(0, 1, p); }
    static PadicScalar one(Prime p) { return PadicScalar(1, 1, p); }
    /// p^k as an exact rational, k of either sign.
    static PadicScalar uniformizer_pow(long k, Prime p);

    const mpq_class& rational() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    Prime prime() const noexcept { return p_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_unit() const;

    Valuation valuation() const;

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const;
    PadicScalar operator-() const;
    PadicScalar inverse() const;
    PadicScalar pow(long k) const;

    bool operator==(const PadicScalar& o) const;
    bool operator!=(const PadicScalar& o) const { return !(*this == o); }

    /// "num" or "num/den"; the JSON wire format for scalars.
    std::string str() const;
    static PadicScalar parse(const std::string& s, Prime p);

private:
    void check_same_prime(const PadicScalar& o, const char* op) const;
    void check_bits() const;

    mpq_class q_;
    Prime p_;
};

Valuation valuation(const PadicScalar& x);
/// Identical to valuation(); named for call sites that read as |x| queries.
Valuation abs_log(const PadicScalar& x);

/// v_p of an exact rational (must be nonzero).
long rational_valuation(const mpq_class& q, const Prime& p);

/// A positive real of the exact form coeff * p^exponent with coeff a positive
/// rational and exponent a rational. Closed under product and quotient, and
/// exactly comparable by clearing the exponent denominators. This is how
/// assembled constants like (1 + |pi|) * p^(a/2) are carried without floats.
class PValue {
public:
    PValue(mpq_class coeff, mpq_class exponent, Prime p);

    static PValue one(Prime p) { return PValue(1, 0, p); }
    /// p^(-v) for a finite valuation v.
    static PValue from_valuation(const Valuation& v, Prime p);

    const mpq_class& coeff() const noexcept { return coeff_; }
    const mpq_class& exponent() const noexcept { return exp_; }
    Prime prime() const noexcept { return p_; }

    PValue operator*(const PValue& o) const;
    PValue operator/(const PValue& o) const;
    PValue reciprocal() const;

    /// -1, 0, +1 as this compares to o. Exact.
    int compare(const PValue& o) const;
    bool operator<(const PValue& o) const { return compare(o) < 0; }
    bool operator<=(const PValue& o) const { return compare(o) <= 0; }
    bool operator>(const PValue& o) const { return compare(o) > 0; }
    bool operator>=(const PValue& o) const { return compare(o) >= 0; }
    bool operator==(const PValue& o) const { return compare(o) == 0; }

    static PValue max(const PValue& a, const PValue& b) { return a >= b ? a : b; }

    double approx() const;
    std::string str() const;

private:
    mpq_class coeff_;
    mpq_class exp_;
    Prime p_;
};

}  // namespace ultrastab
