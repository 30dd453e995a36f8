#include "ultrastab/tropical.hpp"

#include <sstream>

namespace ultrastab {

ApartmentPoint ApartmentPoint::operator+(const ApartmentPoint& o) const {
    if (rank() != o.rank()) throw DomainError("ApartmentPoint: rank mismatch");
    std::vector<mpq_class> r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = x[i] + o.x[i];
    return ApartmentPoint(std::move(r));
}

ApartmentPoint ApartmentPoint::operator-(const ApartmentPoint& o) const {
    if (rank() != o.rank()) throw DomainError("ApartmentPoint: rank mismatch");
    std::vector<mpq_class> r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = x[i] - o.x[i];
    return ApartmentPoint(std::move(r));
}

ApartmentPoint ApartmentPoint::scaled(const mpq_class& s) const {
    std::vector<mpq_class> r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = x[i] * s;
    return ApartmentPoint(std::move(r));
}

mpq_class pairing(const Character& chi, const ApartmentPoint& lambda) {
    if (chi.size() != lambda.rank()) throw DomainError("pairing: length mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * lambda.x[i];
    return s;
}

TorusElement::TorusElement(std::vector<PadicScalar> entries) : diag(std::move(entries)) {
    if (diag.empty()) throw DomainError("TorusElement: empty diagonal");
    PadicScalar prod = PadicScalar::one(diag.front().prime());
    for (const auto& d : diag) {
        if (d.is_zero()) throw DomainError("TorusElement: zero diagonal entry");
        prod = prod * d;
    }
    if (!(prod == PadicScalar::one(diag.front().prime()))) {
        throw DomainError("TorusElement: product of entries must be 1");
    }
}

TorusElement TorusElement::identity(std::size_t n, Prime p) {
    return TorusElement(std::vector<PadicScalar>(n, PadicScalar::one(p)));
}

TorusElement TorusElement::sl2_power(long k, Prime p) {
    return TorusElement({PadicScalar::uniformizer_pow(k, p), PadicScalar::uniformizer_pow(-k, p)});
}

PadicScalar TorusElement::character_value(const Character& chi) const {
    if (chi.size() + 1 != diag.size()) throw DomainError("TorusElement: character rank mismatch");
    PadicScalar v = PadicScalar::one(prime());
    for (std::size_t i = 0; i < chi.size(); ++i) v = v * diag[i].pow(chi[i]);
    return v;
}

ApartmentPoint TorusElement::cocharacter_point() const {
    std::vector<mpq_class> r;
    r.reserve(diag.size() - 1);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        r.emplace_back(rational_valuation(diag[i].rational(), prime()));
    }
    return ApartmentPoint(std::move(r));
}

Mat TorusElement::matrix() const { return Mat::diag(diag); }

TorusElement TorusElement::inverse() const {
    std::vector<PadicScalar> r;
    r.reserve(diag.size());
    for (const auto& d : diag) r.push_back(d.inverse());
    return TorusElement(std::move(r));
}

ApartmentPoint translate_action(const ApartmentPoint& lambda, const TorusElement& mu) {
    return lambda - mu.cocharacter_point();
}

LaurentPolynomial LaurentPolynomial::constant(const PadicScalar& c, std::size_t rank) {
    LaurentPolynomial f(rank, c.prime());
    f.add_term(Character(rank, 0), c);
    return f;
}

LaurentPolynomial LaurentPolynomial::monomial(const PadicScalar& c, Character chi) {
    LaurentPolynomial f(chi.size(), c.prime());
    f.add_term(chi, c);
    return f;
}

void LaurentPolynomial::add_term(const Character& chi, const PadicScalar& c) {
    if (chi.size() != rank_) throw DomainError("LaurentPolynomial: character rank mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(chi);
    if (it == terms_.end()) {
        terms_.emplace(chi, c);
        return;
    }
    PadicScalar s = it->second + c;
    if (s.is_zero()) {
        terms_.erase(it);
    } else {
        it->second = s;
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw DomainError("LaurentPolynomial: rank mismatch in add");
    LaurentPolynomial r = *this;
    for (const auto& [chi, c] : o.terms_) r.add_term(chi, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw DomainError("LaurentPolynomial: rank mismatch in mul");
    LaurentPolynomial r(rank_, p_);
    for (const auto& [c1, a1] : terms_) {
        for (const auto& [c2, a2] : o.terms_) {
            Character chi(rank_);
            for (std::size_t i = 0; i < rank_; ++i) chi[i] = c1[i] + c2[i];
            r.add_term(chi, a1 * a2);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const PadicScalar& s) const {
    LaurentPolynomial r(rank_, p_);
    if (s.is_zero()) return r;
    for (const auto& [chi, c] : terms_) r.add_term(chi, c * s);
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
}

PadicScalar LaurentPolynomial::eval(const TorusElement& mu) const {
    PadicScalar s = PadicScalar::zero(p_);
    for (const auto& [chi, c] : terms_) s = s + c * mu.character_value(chi);
    return s;
}

Valuation LaurentPolynomial::gauss_eval(const ApartmentPoint& lambda) const {
    if (lambda.rank() != rank_) throw DomainError("gauss_eval: rank mismatch");
    Valuation best = Valuation::infinity();
    for (const auto& [chi, c] : terms_) {
        best = Valuation::min(best, c.valuation() + pairing(chi, lambda));
    }
    return best;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [chi, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*x^[";
        for (std::size_t i = 0; i < chi.size(); ++i) {
            os << chi[i];
            if (i + 1 < chi.size()) os << ",";
        }
        os << "]";
    }
    return os.str();
}

LaurentPolynomial torus_translate(const LaurentPolynomial& f, const TorusElement& mu) {
    LaurentPolynomial r(f.rank(), f.prime());
    for (const auto& [chi, c] : f.terms()) {
        r.add_term(chi, c * mu.character_value(chi).inverse());
    }
    return r;
}

Valuation PiecewiseAffine::value(const ApartmentPoint& lambda) const {
    Valuation best = Valuation::infinity();
    for (const auto& piece : pieces) {
        best = Valuation::min(best, Valuation(mpq_class(piece.offset + pairing(piece.slope, lambda))));
    }
    return best;
}

PiecewiseAffine tropicalize(const LaurentPolynomial& f) {
    if (f.is_zero()) throw DomainError("tropicalize: zero polynomial");
    PiecewiseAffine r;
    for (const auto& [chi, c] : f.terms()) {
        r.pieces.push_back({c.valuation().value(), chi});
    }
    return r;
}

bool check_midpoint_convexity(const LaurentPolynomial& f, const ApartmentPoint& l0,
                              const ApartmentPoint& l1) {
    if (f.is_zero()) throw DomainError("check_midpoint_convexity: zero polynomial");
    ApartmentPoint mid = (l0 + l1).scaled(mpq_class(1, 2));
    Valuation vm = f.gauss_eval(mid);
    Valuation v0 = f.gauss_eval(l0);
    Valuation v1 = f.gauss_eval(l1);
    // All three are finite for nonzero f.
    mpq_class avg = (v0.value() + v1.value()) / 2;
    return vm.value() >= avg;
}

MatrixPolynomial MatrixPolynomial::constant(const PadicScalar& c, std::size_t n) {
    MatrixPolynomial f(n, c.prime());
    f.add_term(std::vector<long>(n * n, 0), c);
    return f;
}

MatrixPolynomial MatrixPolynomial::entry(std::size_t i, std::size_t j, std::size_t n, Prime p) {
    if (i >= n || j >= n) throw DomainError("MatrixPolynomial: entry index out of range");
    MatrixPolynomial f(n, p);
    std::vector<long> e(n * n, 0);
    e[i * n + j] = 1;
    f.add_term(e, PadicScalar::one(p));
    return f;
}

void MatrixPolynomial::add_term(const std::vector<long>& exps, const PadicScalar& c) {
    if (exps.size() != n_ * n_) throw DomainError("MatrixPolynomial: exponent length mismatch");
    for (long k : exps) {
        if (k < 0) throw DomainError("MatrixPolynomial: exponents must be nonnegative");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    PadicScalar s = it->second + c;
    if (s.is_zero()) {
        terms_.erase(it);
    } else {
        it->second = s;
    }
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& o) const {
    if (n_ != o.n_) throw DomainError("MatrixPolynomial: size mismatch in add");
    MatrixPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MatrixPolynomial MatrixPolynomial::operator*(const MatrixPolynomial& o) const {
    if (n_ != o.n_) throw DomainError("MatrixPolynomial: size mismatch in mul");
    MatrixPolynomial r(n_, p_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<long> e(n_ * n_);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MatrixPolynomial MatrixPolynomial::scaled(const PadicScalar& s) const {
    MatrixPolynomial r(n_, p_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

bool MatrixPolynomial::operator==(const MatrixPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

PadicScalar MatrixPolynomial::eval(const Mat& g) const {
    if (g.rows != n_ || g.cols != n_) throw DomainError("MatrixPolynomial: eval size mismatch");
    PadicScalar s = PadicScalar::zero(p_);
    for (const auto& [e, c] : terms_) {
        PadicScalar t = c;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                long k = e[i * n_ + j];
                if (k != 0) t = t * g.at(i, j).pow(k);
            }
        }
        s = s + t;
    }
    return s;
}

LaurentPolynomial MatrixPolynomial::restrict_to_torus() const {
    std::size_t rank = n_ - 1;
    LaurentPolynomial r(rank, p_);
    for (const auto& [e, c] : terms_) {
        bool off_diag = false;
        for (std::size_t i = 0; i < n_ && !off_diag; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (i != j && e[i * n_ + j] != 0) {
                    off_diag = true;
                    break;
                }
            }
        }
        if (off_diag) continue;
        long dn = e[(n_ - 1) * n_ + (n_ - 1)];
        Character chi(rank);
        for (std::size_t i = 0; i < rank; ++i) chi[i] = e[i * n_ + i] - dn;
        r.add_term(chi, c);
    }
    return r;
}

MatrixPolynomial MatrixPolynomial::left_translate(const Mat& g) const {
    if (g.rows != n_ || g.cols != n_) throw DomainError("left_translate: size mismatch");
    // Linear substitution x_kj -> sum_l g_kl x_lj, expanded term by term.
    std::vector<MatrixPolynomial> subst;
    subst.reserve(n_ * n_);
    for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t j = 0; j < n_; ++j) {
            MatrixPolynomial s(n_, p_);
            for (std::size_t l = 0; l < n_; ++l) {
                if (g.at(k, l).is_zero()) continue;
                s = s + entry(l, j, n_, p_).scaled(g.at(k, l));
            }
            subst.push_back(std::move(s));
        }
    }
    MatrixPolynomial r(n_, p_);
    for (const auto& [e, c] : terms_) {
        MatrixPolynomial t = constant(c, n_);
        for (std::size_t v = 0; v < e.size(); ++v) {
            for (long k = 0; k < e[v]; ++k) t = t * subst[v];
        }
        r = r + t;
    }
    return r;
}

std::string MatrixPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                long k = e[i * n_ + j];
                if (k != 0) {
                    os << "*x" << i + 1 << j + 1;
                    if (k != 1) os << "^" << k;
                }
            }
        }
    }
    return os.str();
}

}  // namespace ultrastab
