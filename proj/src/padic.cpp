#include "ultrastab/padic.hpp"

#include <cmath>
#include <sstream>

namespace ultrastab {

std::size_t ScalarLimits::max_bits = 1u << 16;

namespace {

bool is_prime_ul(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (unsigned long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Prime::Prime(unsigned long p) : p_(p) {
    if (!is_prime_ul(p)) {
        throw DomainError("Prime: p must be prime, got " + std::to_string(p));
    }
}

const mpq_class& Valuation::value() const {
    if (!finite_) throw DomainError("Valuation: value() on +infinity");
    return v_;
}

Valuation Valuation::operator+(const Valuation& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return Valuation(mpq_class(v_ + o.v_));
}

Valuation Valuation::operator+(const mpq_class& q) const {
    if (!finite_) return infinity();
    return Valuation(mpq_class(v_ + q));
}

Valuation Valuation::operator-() const {
    if (!finite_) throw DomainError("Valuation: negation of +infinity");
    return Valuation(mpq_class(-v_));
}

bool Valuation::operator==(const Valuation& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || v_ == o.v_;
}

bool Valuation::operator<(const Valuation& o) const {
    if (!finite_) return false;
    if (!o.finite_) return true;
    return v_ < o.v_;
}

bool Valuation::operator<=(const Valuation& o) const {
    if (!o.finite_) return true;
    if (!finite_) return false;
    return v_ <= o.v_;
}

std::string Valuation::str() const {
    if (!finite_) return "inf";
    return v_.get_str();
}

long rational_valuation(const mpq_class& q, const Prime& p) {
    if (sgn(q) == 0) throw DomainError("rational_valuation: zero input");
    mpz_class pz(p.value());
    mpz_class tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

PadicScalar::PadicScalar(mpq_class value, Prime p) : q_(std::move(value)), p_(p) {
    q_.canonicalize();
    check_bits();
}

PadicScalar::PadicScalar(long num, long den, Prime p) : q_(num, den), p_(p) {
    if (den == 0) throw DomainError("PadicScalar: zero denominator");
    q_.canonicalize();
}

PadicScalar PadicScalar::uniformizer_pow(long k, Prime p) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p.value(), static_cast<unsigned long>(k >= 0 ? k : -k));
    mpq_class q = (k >= 0) ? mpq_class(pw) : mpq_class(1, 1) / mpq_class(pw);
    return PadicScalar(q, p);
}

bool PadicScalar::is_unit() const {
    return !is_zero() && q_.get_num() % static_cast<long>(p_.value()) != 0 &&
           q_.get_den() % static_cast<long>(p_.value()) != 0;
}

Valuation PadicScalar::valuation() const {
    if (is_zero()) return Valuation::infinity();
    return Valuation(rational_valuation(q_, p_));
}

void PadicScalar::check_same_prime(const PadicScalar& o, const char* op) const {
    if (p_ != o.p_) {
        throw DomainError(std::string("PadicScalar: prime mismatch in ") + op);
    }
}

void PadicScalar::check_bits() const {
    const std::size_t bits = mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
    if (bits > ScalarLimits::max_bits) {
        throw DomainError("PadicScalar: bit-length cap exceeded (" + std::to_string(bits) + " > " +
                          std::to_string(ScalarLimits::max_bits) + ")");
    }
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    check_same_prime(o, "add");
    return PadicScalar(mpq_class(q_ + o.q_), p_);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
    check_same_prime(o, "sub");
    return PadicScalar(mpq_class(q_ - o.q_), p_);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    check_same_prime(o, "mul");
    return PadicScalar(mpq_class(q_ * o.q_), p_);
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const {
    check_same_prime(o, "div");
    return *this * o.inverse();
}

PadicScalar PadicScalar::operator-() const { return PadicScalar(mpq_class(-q_), p_); }

PadicScalar PadicScalar::inverse() const {
    if (is_zero()) throw DomainError("PadicScalar: inverse of zero");
    return PadicScalar(mpq_class(1 / q_), p_);
}

PadicScalar PadicScalar::pow(long k) const {
    if (k == 0) return one(p_);
    if (is_zero()) {
        if (k < 0) throw DomainError("PadicScalar: inverse of zero");
        return *this;
    }
    mpq_class base = k >= 0 ? q_ : mpq_class(1 / q_);
    unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    return PadicScalar(mpq_class(num) / mpq_class(den), p_);
}

bool PadicScalar::operator==(const PadicScalar& o) const { return p_ == o.p_ && q_ == o.q_; }

std::string PadicScalar::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

PadicScalar PadicScalar::parse(const std::string& s, Prime p) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw DomainError("PadicScalar: cannot parse \"" + s + "\"");
    }
    if (q.get_den() == 0) throw DomainError("PadicScalar: zero denominator in \"" + s + "\"");
    q.canonicalize();
    return PadicScalar(q, p);
}

Valuation valuation(const PadicScalar& x) { return x.valuation(); }
Valuation abs_log(const PadicScalar& x) { return x.valuation(); }

PValue::PValue(mpq_class coeff, mpq_class exponent, Prime p)
    : coeff_(std::move(coeff)), exp_(std::move(exponent)), p_(p) {
    coeff_.canonicalize();
    exp_.canonicalize();
    if (sgn(coeff_) <= 0) throw DomainError("PValue: coefficient must be positive");
}

PValue PValue::from_valuation(const Valuation& v, Prime p) {
    if (v.is_infinite()) throw DomainError("PValue: +infinity valuation has value 0");
    return PValue(1, mpq_class(-v.value()), p);
}

PValue PValue::operator*(const PValue& o) const {
    if (p_ != o.p_) throw DomainError("PValue: prime mismatch in mul");
    return PValue(mpq_class(coeff_ * o.coeff_), mpq_class(exp_ + o.exp_), p_);
}

PValue PValue::operator/(const PValue& o) const {
    if (p_ != o.p_) throw DomainError("PValue: prime mismatch in div");
    return PValue(mpq_class(coeff_ / o.coeff_), mpq_class(exp_ - o.exp_), p_);
}

PValue PValue::reciprocal() const { return PValue(mpq_class(1 / coeff_), mpq_class(-exp_), p_); }

int PValue::compare(const PValue& o) const {
    if (p_ != o.p_) throw DomainError("PValue: prime mismatch in compare");
    // a * p^x vs b * p^y with rational x, y: raise both sides to the lcm of the
    // exponent denominators, then compare exact rationals.
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), exp_.get_den_mpz_t(), o.exp_.get_den_mpz_t());
    unsigned long D = static_cast<unsigned long>(d.get_ui());
    mpz_class xe((exp_ * d).get_num());
    mpz_class ye((o.exp_ * d).get_num());

    mpq_class lhs, rhs;
    mpz_pow_ui(lhs.get_num_mpz_t(), coeff_.get_num_mpz_t(), D);
    mpz_pow_ui(lhs.get_den_mpz_t(), coeff_.get_den_mpz_t(), D);
    mpz_pow_ui(rhs.get_num_mpz_t(), o.coeff_.get_num_mpz_t(), D);
    mpz_pow_ui(rhs.get_den_mpz_t(), o.coeff_.get_den_mpz_t(), D);

    // Shift the p-powers onto one side each so all exponents are nonnegative.
    mpz_class diff(xe - ye);
    mpz_class pz(p_.value());
    mpz_class pw;
    if (sgn(diff) >= 0) {
        mpz_pow_ui(pw.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(mpz_class(diff).get_ui()));
        lhs *= mpq_class(pw);
    } else {
        mpz_pow_ui(pw.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(mpz_class(-diff).get_ui()));
        rhs *= mpq_class(pw);
    }
    lhs.canonicalize();
    rhs.canonicalize();
    return cmp(lhs, rhs);
}

double PValue::approx() const {
    return coeff_.get_d() * std::pow(static_cast<double>(p_.value()), exp_.get_d());
}

std::string PValue::str() const {
    std::ostringstream os;
    if (coeff_ != 1) os << coeff_.get_str() << " * ";
    os << p_.value() << "^" << exp_.get_str();
    return os.str();
}

}  // namespace ultrastab
