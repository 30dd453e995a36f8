#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ultrastab/padic.hpp"

namespace ultrastab {

struct Vec {
    std::vector<PadicScalar> e;

    Vec() = default;
    explicit Vec(std::vector<PadicScalar> entries);

    std::size_t size() const { return e.size(); }
    const PadicScalar& operator[](std::size_t i) const { return e[i]; }
    PadicScalar& operator[](std::size_t i) { return e[i]; }

    Prime prime() const;
    bool is_zero() const;

    Vec operator+(const Vec& o) const;
    Vec scaled(const PadicScalar& s) const;
    bool operator==(const Vec& o) const { return e == o.e; }

    static Vec zero(std::size_t n, Prime p);
    static Vec basis(std::size_t n, std::size_t i, Prime p);
};

/// Dense rectangular matrix over exact scalars. Doubles as 2x2 group elements
/// and m x m endomorphisms; smallness keeps Gauss-Jordan inversion cheap.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<PadicScalar> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, Prime p);

    const PadicScalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    PadicScalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    Prime prime() const;

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat scaled(const PadicScalar& s) const;
    bool operator==(const Mat& o) const;

    PadicScalar det() const;
    Mat inverse() const;
    Mat transpose() const;
    bool is_zero() const;

    static Mat identity(std::size_t n, Prime p);
    static Mat diag(const std::vector<PadicScalar>& d);
    /// [[a,b],[c,d]] from long entries.
    static Mat mat2(long a, long b, long c, long d, Prime p);
    static Mat mat2(PadicScalar a, PadicScalar b, PadicScalar c, PadicScalar d);

    std::string str() const;
};

/// Weighted sup norm: the i-th basis vector has norm p^(-w_i). Every norm used
/// downstream is of this shape; suprema over it and its dual ball then have
/// closed forms in valuations.
struct DiagonalNorm {
    std::size_t dim = 0;
    std::vector<mpq_class> weights;
    Prime p;

    DiagonalNorm(std::size_t dim, std::vector<mpq_class> weights, Prime p);
    static DiagonalNorm sup(std::size_t dim, Prime p);

    bool integer_weights() const;
};

/// min over i of val(v_i) + w_i; +infinity iff v = 0.
Valuation norm_eval(const DiagonalNorm& n, const Vec& v);

/// Exact operator norm valuation: min over entries (i,j) of
/// val(a_ij) + w_dst_i - w_src_j; +infinity for the zero map.
Valuation operator_norm(const DiagonalNorm& src, const DiagonalNorm& dst, const Mat& a);

/// sup over the dual unit ball B of |phi(v)|, as a valuation. Functionals have
/// scalar coordinates, so the best weight-w_i coordinate functional in B is
/// p^ceil(w_i) e_i*; the sup is min over i of val(v_i) + ceil(w_i). Equals
/// norm_eval exactly when the weights are integers.
Valuation dual_ball_sup(const DiagonalNorm& n, const Vec& v);

}  // namespace ultrastab
