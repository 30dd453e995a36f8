#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ultrastab/norms.hpp"
#include "ultrastab/padic.hpp"
#include "ultrastab/tropical.hpp"

namespace ultrastab {

enum class RepTag { Standard, Adjoint, SymPower };

std::string rep_tag_name(RepTag tag);
RepTag rep_tag_from_name(const std::string& name);

/// A finite-dimensional representation of the special linear group, acting on
/// a space with a basis of diagonal-torus weight vectors.
struct RepSpec {
    std::size_t n = 2;  // ambient group is n x n
    RepTag tag = RepTag::Standard;
    long sym_degree = 0;  // for SymPower (n = 2 only)
    Prime p;

    RepSpec(std::size_t n, RepTag tag, Prime p, long sym_degree = 0);

    std::size_t dim() const;
    /// Torus weight of the k-th basis vector, as a rank n-1 character.
    Character weight(std::size_t k) const;
    std::vector<Character> weights() const;
};

/// The m x m matrix of the representation at a rational group element.
Mat rep_matrix(const RepSpec& rho, const Mat& g);

/// Entries of the representation matrix as polynomials in the n^2 ambient
/// matrix entries. Inverses are realized by the adjugate, which agrees with
/// the inverse on the determinant-1 locus.
std::vector<std::vector<MatrixPolynomial>> rep_matrix_poly(const RepSpec& rho);

/// rho(g) e rho(g)^{-1}.
Mat adjoint_action(const RepSpec& rho, const Mat& g, const Mat& e);

/// Basis endomorphisms E_ab grouped by their torus weight wt(a) - wt(b);
/// the weight-0 block is the centralizer of the torus.
struct WeightDecomposition {
    RepSpec rho;
    std::map<Character, std::vector<std::pair<std::size_t, std::size_t>>> blocks;

    std::size_t total_dimension() const;
};

WeightDecomposition weight_decompose(const RepSpec& rho);

/// The weight-0 component of e: entries (a,b) with wt(a) != wt(b) are zeroed.
/// Idempotent and torus-equivariant.
Mat project_z(const RepSpec& rho, const Mat& e);

/// Finite-dimensional span of the matrix coefficients of the conjugation
/// action restricted to the torus, in the character basis. The constant
/// character is always present.
struct CoeffModule {
    RepSpec rho;
    std::vector<Character> basis;  // distinct weight differences, sorted
    bool over_full_group = false;

    std::size_t dim() const { return basis.size(); }
    std::size_t constant_index() const;
    std::optional<std::size_t> index_of(const Character& chi) const;
};

CoeffModule coeff_module(const RepSpec& rho);

enum class CoeffMode { Conjugation, Translation };

/// The torus-variable matrix coefficient for fixed y:
///   Conjugation: omega -> phi(rho(omega^{-1} y omega) v)
///   Translation: omega -> phi(rho(y omega) v)
LaurentPolynomial coefficient_function(const RepSpec& rho, const Mat& y, const Vec& v,
                                       const Vec& phi, CoeffMode mode);

/// The constant-character coefficient of f; errors if f lies outside the span.
PadicScalar project_k(const CoeffModule& c, const LaurentPolynomial& f);

/// Exact check that extracting the constant coefficient of the conjugation
/// coefficient function agrees with pairing phi against the weight-0
/// component of rho(y) applied to v.
bool reynolds_identity_check(const RepSpec& rho, const Mat& y, const Vec& v, const Vec& phi);

/// Bounded nonempty family of rational torus points.
struct OmegaSet {
    std::vector<TorusElement> elems;

    explicit OmegaSet(std::vector<TorusElement> omegas);
    /// diag(p^j, p^-j) for j = 0 .. count-1.
    static OmegaSet sl2_powers(std::size_t count, Prime p);

    std::size_t size() const { return elems.size(); }
};

struct StarCheckResult {
    bool spans = false;
    /// Indices into omega forming a row basis of the evaluation matrix, when
    /// spans is true; a witness that the sub-family already separates.
    std::vector<std::size_t> basis_subset;
    /// The square evaluation matrix on the subset, rows in subset order,
    /// columns in coefficient-basis order.
    std::optional<Mat> eval_matrix;
};

/// Rank test of the evaluation matrix (rows omega, columns coefficient basis).
StarCheckResult check_star(const OmegaSet& omega, const CoeffModule& c);

/// For a split diagonal torus: the fixed subspace of the endomorphisms is the
/// weight-0 block and the complement carries no zero weight. Returns true
/// after asserting both; rank-0 tori are accepted vacuously.
bool check_star_star(const RepSpec& rho);

}  // namespace ultrastab
