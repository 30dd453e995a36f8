#include "ultrastab/rep.hpp"

#include <algorithm>
#include <set>

namespace ultrastab {

namespace {

PadicScalar neg(const PadicScalar& x) { return -x; }
MatrixPolynomial neg(const MatrixPolynomial& x) {
    return x.scaled(PadicScalar(-1, 1, x.prime()));
}

template <class E>
using Grid = std::vector<std::vector<E>>;

template <class E>
Grid<E> grid_of(std::size_t r, std::size_t c, const E& zero) {
    return Grid<E>(r, std::vector<E>(c, zero));
}

template <class E>
Grid<E> grid_mul(const Grid<E>& a, const Grid<E>& b, const E& zero) {
    Grid<E> r = grid_of(a.size(), b[0].size(), zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

template <class E>
E grid_det_on(const Grid<E>& a, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols, const E& zero) {
    if (rows.size() == 1) return a[rows[0]][cols[0]];
    E acc = zero;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        E term = a[rows[0]][cols[k]] * grid_det_on(a, sub_rows, sub_cols, zero);
        acc = (k % 2 == 0) ? acc + term : acc + neg(term);
    }
    return acc;
}

/// adj(a) with a_ji-cofactors; equals the inverse on the determinant-1 locus.
template <class E>
Grid<E> grid_adjugate(const Grid<E>& a, const E& zero) {
    std::size_t n = a.size();
    Grid<E> r = grid_of(n, n, zero);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            E m = (n == 1) ? zero : grid_det_on(a, rows, cols, zero);
            r[i][j] = ((i + j) % 2 == 0) ? m : neg(m);
        }
    }
    return r;
}

/// Basis of the traceless n x n matrices: strictly upper E_ij, the diagonal
/// differences H_t = E_tt - E_(t+1)(t+1), strictly lower E_ij.
struct Sl2BasisElem {
    bool diagonal;
    std::size_t i, j;  // E_ij when !diagonal
    std::size_t t;     // H_t when diagonal
};

std::vector<Sl2BasisElem> traceless_basis(std::size_t n) {
    std::vector<Sl2BasisElem> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) basis.push_back({false, i, j, 0});
    for (std::size_t t = 0; t + 1 < n; ++t) basis.push_back({true, 0, 0, t});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) basis.push_back({false, i, j, 0});
    return basis;
}

/// Coordinates of a traceless grid in the basis above. Diagonal coordinates
/// are the partial sums of the diagonal entries.
template <class E>
std::vector<E> traceless_coordinates(const Grid<E>& m, const std::vector<Sl2BasisElem>& basis,
                                     const E& zero) {
    std::size_t n = m.size();
    std::vector<E> coords;
    coords.reserve(basis.size());
    std::vector<E> partial(n, zero);
    E acc = zero;
    for (std::size_t i = 0; i < n; ++i) {
        acc = acc + m[i][i];
        partial[i] = acc;
    }
    for (const auto& b : basis) {
        coords.push_back(b.diagonal ? partial[b.t] : m[b.i][b.j]);
    }
    return coords;
}

/// Coefficient vectors of binary forms; convolution is their product.
template <class E>
std::vector<E> form_mul(const std::vector<E>& f, const std::vector<E>& g, const E& zero) {
    std::vector<E> r(f.size() + g.size() - 1, zero);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = r[i + j] + f[i] * g[j];
    return r;
}

template <class E>
std::vector<E> form_pow(const std::vector<E>& f, long k, const E& zero, const E& one) {
    std::vector<E> r{one};
    for (long i = 0; i < k; ++i) r = form_mul(r, f, zero);
    return r;
}

/// Representation matrix over any commutative coefficient type; g is the
/// ambient n x n grid, ginv its inverse (adjugate for polynomials).
template <class E>
Grid<E> rep_grid(const RepSpec& rho, const Grid<E>& g, const Grid<E>& ginv, const E& zero,
                 const E& one) {
    std::size_t m = rho.dim();
    if (rho.tag == RepTag::Standard) return g;
    if (rho.tag == RepTag::Adjoint) {
        auto basis = traceless_basis(rho.n);
        Grid<E> out = grid_of(m, m, zero);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Grid<E> b = grid_of(rho.n, rho.n, zero);
            if (basis[k].diagonal) {
                b[basis[k].t][basis[k].t] = one;
                b[basis[k].t + 1][basis[k].t + 1] = neg(one);
            } else {
                b[basis[k].i][basis[k].j] = one;
            }
            Grid<E> conj = grid_mul(grid_mul(g, b, zero), ginv, zero);
            std::vector<E> coords = traceless_coordinates(conj, basis, zero);
            for (std::size_t r = 0; r < m; ++r) out[r][k] = coords[r];
        }
        return out;
    }
    // Symmetric power of the standard plane: basis x^(d-i) y^i.
    long d = rho.sym_degree;
    std::vector<E> gx{g[0][0], g[1][0]};  // image of x
    std::vector<E> gy{g[0][1], g[1][1]};  // image of y
    Grid<E> out = grid_of(m, m, zero);
    for (long i = 0; i <= d; ++i) {
        std::vector<E> img = form_mul(form_pow(gx, d - i, zero, one), form_pow(gy, i, zero, one), zero);
        for (long r = 0; r <= d; ++r) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = img[static_cast<std::size_t>(r)];
    }
    return out;
}

Vec grid_apply(const Grid<PadicScalar>& g, const Vec& v) {
    Vec r = Vec::zero(g.size(), v.prime());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j) r[i] = r[i] + g[i][j] * v[j];
    return r;
}

PadicScalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
    PadicScalar s = PadicScalar::zero(a.prime());
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

Character sub_char(const Character& x, const Character& y) {
    Character r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

}  // namespace

std::string rep_tag_name(RepTag tag) {
    switch (tag) {
        case RepTag::Standard: return "standard";
        case RepTag::Adjoint: return "adjoint";
        case RepTag::SymPower: return "sym";
    }
    return "standard";
}

RepTag rep_tag_from_name(const std::string& name) {
    if (name == "standard") return RepTag::Standard;
    if (name == "adjoint") return RepTag::Adjoint;
    if (name == "sym") return RepTag::SymPower;
    throw DomainError("RepSpec: unknown representation tag \"" + name + "\"");
}

RepSpec::RepSpec(std::size_t n_, RepTag tag_, Prime p_, long sym_degree_)
    : n(n_), tag(tag_), sym_degree(sym_degree_), p(p_) {
    if (n < 2) throw DomainError("RepSpec: group size must be at least 2");
    if (tag == RepTag::SymPower) {
        if (n != 2) throw DomainError("RepSpec: symmetric powers are for n = 2");
        if (sym_degree < 1) throw DomainError("RepSpec: symmetric power degree must be positive");
    }
    if (dim() == 0) throw DomainError("RepSpec: representation degree must be nonzero");
}

std::size_t RepSpec::dim() const {
    switch (tag) {
        case RepTag::Standard: return n;
        case RepTag::Adjoint: return n * n - 1;
        case RepTag::SymPower: return static_cast<std::size_t>(sym_degree + 1);
    }
    return n;
}

Character RepSpec::weight(std::size_t k) const {
    std::size_t rank = n - 1;
    Character w(rank, 0);
    if (tag == RepTag::Standard) {
        if (k < rank) {
            w[k] = 1;
        } else {
            for (std::size_t i = 0; i < rank; ++i) w[i] = -1;
        }
        return w;
    }
    if (tag == RepTag::Adjoint) {
        auto basis = traceless_basis(n);
        const auto& b = basis.at(k);
        if (b.diagonal) return w;
        // weight of E_ij is eps_i - eps_j
        auto eps = [&](std::size_t i) {
            Character c(rank, 0);
            if (i < rank) {
                c[i] = 1;
            } else {
                for (std::size_t t = 0; t < rank; ++t) c[t] = -1;
            }
            return c;
        };
        return sub_char(eps(b.i), eps(b.j));
    }
    // sym: x^(d-k) y^k has weight d - 2k in the rank-1 coordinate
    w[0] = sym_degree - 2 * static_cast<long>(k);
    return w;
}

std::vector<Character> RepSpec::weights() const {
    std::vector<Character> ws;
    ws.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) ws.push_back(weight(k));
    return ws;
}

Mat rep_matrix(const RepSpec& rho, const Mat& g) {
    if (g.rows != rho.n || g.cols != rho.n) throw DomainError("rep_matrix: element size mismatch");
    Prime p = rho.p;
    Grid<PadicScalar> gg = grid_of(rho.n, rho.n, PadicScalar::zero(p));
    for (std::size_t i = 0; i < rho.n; ++i)
        for (std::size_t j = 0; j < rho.n; ++j) gg[i][j] = g.at(i, j);
    Mat gi = g.inverse();
    Grid<PadicScalar> gginv = grid_of(rho.n, rho.n, PadicScalar::zero(p));
    for (std::size_t i = 0; i < rho.n; ++i)
        for (std::size_t j = 0; j < rho.n; ++j) gginv[i][j] = gi.at(i, j);
    Grid<PadicScalar> out =
        rep_grid(rho, gg, gginv, PadicScalar::zero(p), PadicScalar::one(p));
    Mat r(rho.dim(), rho.dim(), p);
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t j = 0; j < rho.dim(); ++j) r.at(i, j) = out[i][j];
    return r;
}

std::vector<std::vector<MatrixPolynomial>> rep_matrix_poly(const RepSpec& rho) {
    Prime p = rho.p;
    MatrixPolynomial zero(rho.n, p);
    MatrixPolynomial one = MatrixPolynomial::constant(PadicScalar::one(p), rho.n);
    Grid<MatrixPolynomial> g = grid_of(rho.n, rho.n, zero);
    for (std::size_t i = 0; i < rho.n; ++i)
        for (std::size_t j = 0; j < rho.n; ++j) g[i][j] = MatrixPolynomial::entry(i, j, rho.n, p);
    Grid<MatrixPolynomial> ginv = grid_adjugate(g, zero);
    return rep_grid(rho, g, ginv, zero, one);
}

Mat adjoint_action(const RepSpec& rho, const Mat& g, const Mat& e) {
    Mat r = rep_matrix(rho, g);
    if (e.rows != rho.dim() || e.cols != rho.dim()) {
        throw DomainError("adjoint_action: endomorphism size mismatch");
    }
    return r * e * r.inverse();
}

std::size_t WeightDecomposition::total_dimension() const {
    std::size_t s = 0;
    for (const auto& [chi, block] : blocks) s += block.size();
    return s;
}

WeightDecomposition weight_decompose(const RepSpec& rho) {
    WeightDecomposition w{rho, {}};
    auto ws = rho.weights();
    for (std::size_t a = 0; a < rho.dim(); ++a) {
        for (std::size_t b = 0; b < rho.dim(); ++b) {
            w.blocks[sub_char(ws[a], ws[b])].push_back({a, b});
        }
    }
    return w;
}

Mat project_z(const RepSpec& rho, const Mat& e) {
    if (e.rows != rho.dim() || e.cols != rho.dim()) throw DomainError("project_z: size mismatch");
    auto ws = rho.weights();
    Mat r(rho.dim(), rho.dim(), rho.p);
    for (std::size_t a = 0; a < rho.dim(); ++a)
        for (std::size_t b = 0; b < rho.dim(); ++b)
            if (ws[a] == ws[b]) r.at(a, b) = e.at(a, b);
    return r;
}

std::size_t CoeffModule::constant_index() const {
    Character zero(rho.n - 1, 0);
    auto idx = index_of(zero);
    if (!idx) throw DomainError("CoeffModule: constant character missing");
    return *idx;
}

std::optional<std::size_t> CoeffModule::index_of(const Character& chi) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), chi);
    if (it == basis.end() || *it != chi) return std::nullopt;
    return static_cast<std::size_t>(it - basis.begin());
}

CoeffModule coeff_module(const RepSpec& rho) {
    std::set<Character> chars;
    auto ws = rho.weights();
    for (const auto& wa : ws)
        for (const auto& wb : ws) chars.insert(sub_char(wa, wb));
    CoeffModule c{rho, std::vector<Character>(chars.begin(), chars.end()), false};
    return c;
}

LaurentPolynomial coefficient_function(const RepSpec& rho, const Mat& y, const Vec& v,
                                       const Vec& phi, CoeffMode mode) {
    if (v.size() != rho.dim() || phi.size() != rho.dim()) {
        throw DomainError("coefficient_function: dimension mismatch");
    }
    Mat r = rep_matrix(rho, y);
    auto ws = rho.weights();
    LaurentPolynomial f(rho.n - 1, rho.p);
    for (std::size_t a = 0; a < rho.dim(); ++a) {
        if (phi[a].is_zero()) continue;
        for (std::size_t b = 0; b < rho.dim(); ++b) {
            if (v[b].is_zero() || r.at(a, b).is_zero()) continue;
            Character chi = (mode == CoeffMode::Conjugation) ? sub_char(ws[b], ws[a]) : ws[b];
            f.add_term(chi, phi[a] * r.at(a, b) * v[b]);
        }
    }
    return f;
}

PadicScalar project_k(const CoeffModule& c, const LaurentPolynomial& f) {
    for (const auto& [chi, coeff] : f.terms()) {
        if (!c.index_of(chi)) {
            throw DomainError("project_k: function lies outside the coefficient module span");
        }
    }
    Character zero(c.rho.n - 1, 0);
    auto it = f.terms().find(zero);
    if (it == f.terms().end()) return PadicScalar::zero(c.rho.p);
    return it->second;
}

bool reynolds_identity_check(const RepSpec& rho, const Mat& y, const Vec& v, const Vec& phi) {
    CoeffModule c = coeff_module(rho);
    PadicScalar lhs = project_k(c, coefficient_function(rho, y, v, phi, CoeffMode::Conjugation));
    Mat pz = project_z(rho, rep_matrix(rho, y));
    PadicScalar rhs = dot(phi, pz * v);
    return lhs == rhs;
}

OmegaSet::OmegaSet(std::vector<TorusElement> omegas) : elems(std::move(omegas)) {
    if (elems.empty()) throw DomainError("OmegaSet: must be nonempty");
    for (const auto& w : elems) {
        if (w.n() != elems.front().n()) throw DomainError("OmegaSet: mixed torus sizes");
    }
}

OmegaSet OmegaSet::sl2_powers(std::size_t count, Prime p) {
    if (count == 0) throw DomainError("OmegaSet: must be nonempty");
    std::vector<TorusElement> v;
    v.reserve(count);
    for (std::size_t j = 0; j < count; ++j) v.push_back(TorusElement::sl2_power(static_cast<long>(j), p));
    return OmegaSet(std::move(v));
}

StarCheckResult check_star(const OmegaSet& omega, const CoeffModule& c) {
    const std::size_t rows = omega.size();
    const std::size_t cols = c.dim();
    Prime p = c.rho.p;

    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] = omega.elems[i].character_value(c.basis[j]).rational();
        }
    }
    std::vector<std::size_t> perm(rows);
    for (std::size_t i = 0; i < rows; ++i) perm[i] = i;

    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        std::swap(perm[piv], perm[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (sgn(m[i][col]) == 0) continue;
            mpq_class f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivots.push_back(perm[rank]);
        ++rank;
    }

    StarCheckResult r;
    r.spans = (rank == cols);
    if (r.spans) {
        std::sort(pivots.begin(), pivots.end());
        r.basis_subset = pivots;
        Mat eval(cols, cols, p);
        for (std::size_t i = 0; i < cols; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                eval.at(i, j) = omega.elems[pivots[i]].character_value(c.basis[j]);
            }
        }
        r.eval_matrix = eval;
    }
    return r;
}

bool check_star_star(const RepSpec& rho) {
    WeightDecomposition w = weight_decompose(rho);
    if (w.total_dimension() != rho.dim() * rho.dim()) return false;
    Character zero(rho.n - 1, 0);
    if (w.blocks.find(zero) == w.blocks.end()) return false;
    for (const auto& [chi, block] : w.blocks) {
        bool is_zero = std::all_of(chi.begin(), chi.end(), [](long x) { return x == 0; });
        if (!is_zero && block.empty()) return false;
    }
    // The coefficient module side: the fixed part is the constant character.
    CoeffModule c = coeff_module(rho);
    return c.index_of(zero).has_value();
}

}  // namespace ultrastab
