#include "ultrastab/norms.hpp"

#include <sstream>

namespace ultrastab {

Vec::Vec(std::vector<PadicScalar> entries) : e(std::move(entries)) {
    if (e.empty()) throw DomainError("Vec: empty entry list");
    for (const auto& x : e) {
        if (x.prime() != e.front().prime()) throw DomainError("Vec: entries share the same prime");
    }
}

Prime Vec::prime() const {
    if (e.empty()) throw DomainError("Vec: empty");
    return e.front().prime();
}

bool Vec::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

Vec Vec::operator+(const Vec& o) const {
    if (size() != o.size()) throw DomainError("Vec: dimension mismatch in add");
    std::vector<PadicScalar> r;
    r.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) r.push_back(e[i] + o.e[i]);
    return Vec(std::move(r));
}

Vec Vec::scaled(const PadicScalar& s) const {
    std::vector<PadicScalar> r;
    r.reserve(size());
    for (const auto& x : e) r.push_back(x * s);
    return Vec(std::move(r));
}

Vec Vec::zero(std::size_t n, Prime p) {
    return Vec(std::vector<PadicScalar>(n, PadicScalar::zero(p)));
}

Vec Vec::basis(std::size_t n, std::size_t i, Prime p) {
    if (i >= n) throw DomainError("Vec: basis index out of range");
    Vec v = zero(n, p);
    v[i] = PadicScalar::one(p);
    return v;
}

Mat::Mat(std::size_t r, std::size_t c, Prime p) : rows(r), cols(c), a(r * c, PadicScalar::zero(p)) {
    if (r == 0 || c == 0) throw DomainError("Mat: zero dimension");
}

Prime Mat::prime() const {
    if (a.empty()) throw DomainError("Mat: empty");
    return a.front().prime();
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw DomainError("Mat: dimension mismatch in mul");
    Mat r(rows, o.cols, prime());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols; ++j) {
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    }
    return r;
}

Vec Mat::operator*(const Vec& v) const {
    if (cols != v.size()) throw DomainError("Mat: dimension mismatch in vec mul");
    Vec r = Vec::zero(rows, prime());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw DomainError("Mat: dimension mismatch in add");
    Mat r(rows, cols, prime());
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Mat Mat::scaled(const PadicScalar& s) const {
    Mat r(rows, cols, prime());
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
    return r;
}

bool Mat::operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

PadicScalar Mat::det() const {
    if (rows != cols) throw DomainError("Mat: det of non-square matrix");
    // Fraction-free enough for our sizes: plain Gaussian elimination on copies.
    Mat m = *this;
    Prime p = prime();
    PadicScalar d = PadicScalar::one(p);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = c;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) return PadicScalar::zero(p);
        if (piv != c) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        PadicScalar inv = m.at(c, c).inverse();
        for (std::size_t i = c + 1; i < rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            PadicScalar f = m.at(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(c, j);
            }
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows != cols) throw DomainError("Mat: inverse of non-square matrix");
    Prime p = prime();
    Mat m = *this;
    Mat inv = identity(rows, p);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = c;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) throw DomainError("Mat: inverse of singular matrix");
        if (piv != c) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        }
        PadicScalar s = m.at(c, c).inverse();
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(c, j) = m.at(c, j) * s;
            inv.at(c, j) = inv.at(c, j) * s;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == c || m.at(i, c).is_zero()) continue;
            PadicScalar f = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(c, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
            }
        }
    }
    return inv;
}

Mat Mat::transpose() const {
    Mat r(cols, rows, prime());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::identity(std::size_t n, Prime p) {
    Mat r(n, n, p);
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = PadicScalar::one(p);
    return r;
}

Mat Mat::diag(const std::vector<PadicScalar>& d) {
    if (d.empty()) throw DomainError("Mat: empty diagonal");
    Mat r(d.size(), d.size(), d.front().prime());
    for (std::size_t i = 0; i < d.size(); ++i) r.at(i, i) = d[i];
    return r;
}

Mat Mat::mat2(long a, long b, long c, long d, Prime p) {
    Mat r(2, 2, p);
    r.at(0, 0) = PadicScalar(a, 1, p);
    r.at(0, 1) = PadicScalar(b, 1, p);
    r.at(1, 0) = PadicScalar(c, 1, p);
    r.at(1, 1) = PadicScalar(d, 1, p);
    return r;
}

Mat Mat::mat2(PadicScalar a, PadicScalar b, PadicScalar c, PadicScalar d) {
    Mat r(2, 2, a.prime());
    r.at(0, 0) = std::move(a);
    r.at(0, 1) = std::move(b);
    r.at(1, 0) = std::move(c);
    r.at(1, 1) = std::move(d);
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols; ++j) {
            os << at(i, j).str();
            if (j + 1 < cols) os << ", ";
        }
        os << "]";
        if (i + 1 < rows) os << ", ";
    }
    os << "]";
    return os.str();
}

DiagonalNorm::DiagonalNorm(std::size_t d, std::vector<mpq_class> w, Prime pr)
    : dim(d), weights(std::move(w)), p(pr) {
    if (weights.size() != dim) throw DomainError("DiagonalNorm: weight count must equal dimension");
}

DiagonalNorm DiagonalNorm::sup(std::size_t dim, Prime p) {
    return DiagonalNorm(dim, std::vector<mpq_class>(dim, mpq_class(0)), p);
}

bool DiagonalNorm::integer_weights() const {
    for (const auto& w : weights)
        if (w.get_den() != 1) return false;
    return true;
}

Valuation norm_eval(const DiagonalNorm& n, const Vec& v) {
    if (v.size() != n.dim) throw DomainError("norm_eval: dimension mismatch");
    Valuation best = Valuation::infinity();
    for (std::size_t i = 0; i < n.dim; ++i) {
        if (v[i].is_zero()) continue;
        best = Valuation::min(best, v[i].valuation() + n.weights[i]);
    }
    return best;
}

Valuation operator_norm(const DiagonalNorm& src, const DiagonalNorm& dst, const Mat& a) {
    if (a.cols != src.dim || a.rows != dst.dim) throw DomainError("operator_norm: dimension mismatch");
    Valuation best = Valuation::infinity();
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            best = Valuation::min(best, a.at(i, j).valuation() + mpq_class(dst.weights[i] - src.weights[j]));
        }
    }
    return best;
}

Valuation dual_ball_sup(const DiagonalNorm& n, const Vec& v) {
    if (v.size() != n.dim) throw DomainError("dual_ball_sup: dimension mismatch");
    Valuation best = Valuation::infinity();
    for (std::size_t i = 0; i < n.dim; ++i) {
        if (v[i].is_zero()) continue;
        mpq_class w = n.weights[i];
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), w.get_num_mpz_t(), w.get_den_mpz_t());
        best = Valuation::min(best, v[i].valuation() + mpq_class(c));
    }
    return best;
}

}  // namespace ultrastab
