#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultrastab/norms.hpp"
#include "ultrastab/padic.hpp"

namespace ultrastab {

/// Exponent vector of a diagonal-torus character in the first r = n-1
/// coordinates; the last torus entry is determined by the product-1 relation.
using Character = std::vector<long>;

struct ApartmentPoint {
    std::vector<mpq_class> x;

    ApartmentPoint() = default;
    explicit ApartmentPoint(std::vector<mpq_class> coords) : x(std::move(coords)) {}
    static ApartmentPoint zero(std::size_t rank) {
        return ApartmentPoint(std::vector<mpq_class>(rank, mpq_class(0)));
    }

    std::size_t rank() const { return x.size(); }
    ApartmentPoint operator+(const ApartmentPoint& o) const;
    ApartmentPoint operator-(const ApartmentPoint& o) const;
    ApartmentPoint scaled(const mpq_class& s) const;
    bool operator==(const ApartmentPoint& o) const { return x == o.x; }
};

mpq_class pairing(const Character& chi, const ApartmentPoint& lambda);

/// Diagonal element of SL_n over Q with entries of unit product. Entries are
/// exact rationals, so characters evaluate exactly.
struct TorusElement {
    std::vector<PadicScalar> diag;

    explicit TorusElement(std::vector<PadicScalar> entries);
    static TorusElement identity(std::size_t n, Prime p);
    /// diag(p^k, p^-k) in SL_2.
    static TorusElement sl2_power(long k, Prime p);

    std::size_t n() const { return diag.size(); }
    Prime prime() const { return diag.front().prime(); }

    PadicScalar character_value(const Character& chi) const;
    /// The apartment point with coordinates v_p(diag_1) .. v_p(diag_r).
    ApartmentPoint cocharacter_point() const;
    Mat matrix() const;
    TorusElement inverse() const;
};

/// lambda - lambda(mu): the apartment pullback of left translation by mu.
ApartmentPoint translate_action(const ApartmentPoint& lambda, const TorusElement& mu);

class LaurentPolynomial {
public:
    LaurentPolynomial(std::size_t rank, Prime p) : rank_(rank), p_(p) {}

    static LaurentPolynomial constant(const PadicScalar& c, std::size_t rank);
    static LaurentPolynomial monomial(const PadicScalar& c, Character chi);

    std::size_t rank() const { return rank_; }
    Prime prime() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Character, PadicScalar>& terms() const { return terms_; }

    /// Adds c * chi, merging with an existing term and dropping zeros.
    void add_term(const Character& chi, const PadicScalar& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial scaled(const PadicScalar& s) const;
    bool operator==(const LaurentPolynomial& o) const;

    /// Value at a rational torus point: sum of a_chi * chi(mu).
    PadicScalar eval(const TorusElement& mu) const;

    /// min over terms of val(a_chi) + <chi, lambda>; +infinity iff zero.
    Valuation gauss_eval(const ApartmentPoint& lambda) const;

    std::string str() const;

private:
    std::size_t rank_;
    Prime p_;
    std::map<Character, PadicScalar> terms_;
};

/// The translation action on functions: coefficients a_chi map to
/// a_chi * chi(mu)^{-1}. Paired with translate_action so that
/// gauss_eval(translate(f, mu), lambda) == gauss_eval(f, translate_action(lambda, mu)).
LaurentPolynomial torus_translate(const LaurentPolynomial& f, const TorusElement& mu);

/// Tropical form of a Laurent polynomial: one affine piece per term, value at
/// lambda = min over pieces of offset + <slope, lambda> (valuation scale).
struct PiecewiseAffine {
    struct Piece {
        mpq_class offset;
        Character slope;
    };
    std::vector<Piece> pieces;

    Valuation value(const ApartmentPoint& lambda) const;
};

PiecewiseAffine tropicalize(const LaurentPolynomial& f);

/// True iff the valuation at the midpoint dominates the average of the
/// endpoint valuations (the exact rational form of log-convexity of values).
bool check_midpoint_convexity(const LaurentPolynomial& f, const ApartmentPoint& l0,
                              const ApartmentPoint& l1);

/// Polynomial in the n^2 matrix entries of the ambient group, kept as a bare
/// representative (the determinant relation is never quotiented; torus
/// restriction factors through representatives).
class MatrixPolynomial {
public:
    MatrixPolynomial(std::size_t n, Prime p) : n_(n), p_(p) {}

    static MatrixPolynomial constant(const PadicScalar& c, std::size_t n);
    /// The coordinate function x_ij (0-based indices).
    static MatrixPolynomial entry(std::size_t i, std::size_t j, std::size_t n, Prime p);

    std::size_t n() const { return n_; }
    Prime prime() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<long>, PadicScalar>& terms() const { return terms_; }

    void add_term(const std::vector<long>& exps, const PadicScalar& c);

    MatrixPolynomial operator+(const MatrixPolynomial& o) const;
    MatrixPolynomial operator*(const MatrixPolynomial& o) const;
    MatrixPolynomial scaled(const PadicScalar& s) const;
    bool operator==(const MatrixPolynomial& o) const;

    PadicScalar eval(const Mat& g) const;

    /// Substitute the diagonal torus: off-diagonal entries to 0, x_ii to t_i,
    /// then eliminate t_n via the product-1 relation. Rank n-1 result.
    LaurentPolynomial restrict_to_torus() const;

    /// x -> F(g x). Seminorm evaluations at translated apartment points read
    /// gauss_eval(restrict_to_torus(left_translate(F, g)), lambda).
    MatrixPolynomial left_translate(const Mat& g) const;

    std::string str() const;

private:
    std::size_t n_;
    Prime p_;
    std::map<std::vector<long>, PadicScalar> terms_;
};

}  // namespace ultrastab
