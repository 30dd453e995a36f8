#include "ultrastab/tree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ultrastab {

namespace {

/// Residue of a rational with v_p >= 0 modulo m = p^k, as an integer in [0, m).
mpz_class mod_reduce(const mpq_class& x, const mpz_class& m) {
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t()) == 0) {
        throw DomainError("mod_reduce: denominator not invertible modulo p^k");
    }
    mpz_class r;
    mpz_mul(r.get_mpz_t(), x.get_num_mpz_t(), den_inv.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class p_power(const Prime& p, unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p.value(), k);
    return r;
}

long min_entry_valuation(const Mat& m) {
    bool seen = false;
    long best = 0;
    for (const auto& x : m.a) {
        if (x.is_zero()) continue;
        long v = rational_valuation(x.rational(), x.prime());
        if (!seen || v < best) {
            best = v;
            seen = true;
        }
    }
    if (!seen) throw DomainError("min_entry_valuation: zero matrix");
    return best;
}

/// Smallest primitive root modulo p^2; a topological generator of the units
/// for odd p.
unsigned long primitive_root_mod_p2(const Prime& p) {
    if (p.value() == 2) return 3;  // together with -1; the p = 2 case is experimental
    mpz_class mod = p_power(p, 2);
    unsigned long order = p.value() * (p.value() - 1);
    std::vector<unsigned long> prime_factors;
    unsigned long t = order;
    for (unsigned long d = 2; d * d <= t; ++d) {
        if (t % d == 0) {
            prime_factors.push_back(d);
            while (t % d == 0) t /= d;
        }
    }
    if (t > 1) prime_factors.push_back(t);
    for (unsigned long g = 2;; ++g) {
        if (g % p.value() == 0) continue;
        bool primitive = true;
        for (unsigned long q : prime_factors) {
            mpz_class r;
            mpz_class base(g);
            mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), order / q, mod.get_mpz_t());
            if (r == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
}

Mat unit_diag(const mpq_class& u, Prime p) {
    return Mat::diag({PadicScalar(u, p), PadicScalar(mpq_class(1) / u, p)});
}

}  // namespace

std::string LatticeClass::str() const {
    std::ostringstream os;
    os << "(a=" << a << ", b=" << b.get_str() << ", p=" << p.value() << ")";
    return os.str();
}

LatticeClass canonicalize(const Mat& basis) {
    if (basis.rows != 2 || basis.cols != 2) throw DomainError("canonicalize: basis must be 2x2");
    if (basis.det().is_zero()) throw DomainError("canonicalize: singular basis");
    Prime p = basis.prime();

    mpq_class m00 = basis.at(0, 0).rational(), m01 = basis.at(0, 1).rational();
    mpq_class m10 = basis.at(1, 0).rational(), m11 = basis.at(1, 1).rational();

    // Move the minimal-valuation bottom entry into column 1, then clear the
    // other with an integral column operation.
    bool swap_cols = false;
    if (sgn(m11) == 0) {
        swap_cols = true;
    } else if (sgn(m10) != 0) {
        swap_cols = rational_valuation(m10, p) < rational_valuation(m11, p);
    }
    if (swap_cols) {
        std::swap(m00, m01);
        std::swap(m10, m11);
    }
    if (sgn(m10) != 0) {
        mpq_class f = m10 / m11;
        m00 -= f * m01;
        m10 = 0;
    }
    // Triangular [[x, y],[0, z]]; normalize z to 1 by a p-power homothety and
    // a unit column scaling.
    long vz = rational_valuation(m11, p);
    mpq_class pvz = mpq_class(p_power(p, static_cast<unsigned long>(vz >= 0 ? vz : -vz)));
    if (vz < 0) pvz = 1 / pvz;
    mpq_class x = m00 / pvz;
    mpq_class y = m01 / m11;  // scale the lattice by p^-vz, then the column by the unit part
    long a = rational_valuation(x, p);

    // Reduce y modulo p^a times the local integers.
    mpq_class b = 0;
    if (sgn(y) != 0) {
        long v = rational_valuation(y, p);
        if (v < a) {
            long e = v < 0 ? -v : 0;
            mpz_class mod = p_power(p, static_cast<unsigned long>(a + e));
            mpq_class shifted = y * mpq_class(p_power(p, static_cast<unsigned long>(e)));
            mpz_class c = mod_reduce(shifted, mod);
            b = mpq_class(c) / mpq_class(p_power(p, static_cast<unsigned long>(e)));
            b.canonicalize();
        }
    }
    return LatticeClass{a, b, p};
}

LatticeClass lattice_class_from_parts(long a, const mpq_class& b, Prime p) {
    Mat m(2, 2, p);
    m.at(0, 0) = PadicScalar::uniformizer_pow(a, p);
    m.at(0, 1) = PadicScalar(b, p);
    m.at(1, 1) = PadicScalar::one(p);
    return canonicalize(m);
}

LatticeClass standard_vertex(Prime p) { return LatticeClass{0, 0, p}; }

Mat basis_matrix(const LatticeClass& l) {
    Mat m(2, 2, l.p);
    m.at(0, 0) = PadicScalar::uniformizer_pow(l.a, l.p);
    m.at(0, 1) = PadicScalar(l.b, l.p);
    m.at(1, 1) = PadicScalar::one(l.p);
    return m;
}

long tree_distance(const LatticeClass& l1, const LatticeClass& l2) {
    if (l1.p != l2.p) throw DomainError("tree_distance: prime mismatch");
    if (l1 == l2) return 0;
    Mat m = basis_matrix(l1).inverse() * basis_matrix(l2);
    long alpha = min_entry_valuation(m);
    long delta = rational_valuation(m.det().rational(), l1.p);
    long d = delta - 2 * alpha;
    return d >= 0 ? d : -d;
}

std::vector<LatticeClass> neighbors(const LatticeClass& l) {
    Mat b = basis_matrix(l);
    Prime p = l.p;
    std::vector<LatticeClass> out;
    out.reserve(p.value() + 1);
    for (unsigned long j = 0; j < p.value(); ++j) {
        Mat step(2, 2, p);
        step.at(0, 0) = PadicScalar(static_cast<long>(p.value()), 1, p);
        step.at(0, 1) = PadicScalar(static_cast<long>(j), 1, p);
        step.at(1, 1) = PadicScalar::one(p);
        out.push_back(canonicalize(b * step));
    }
    Mat down(2, 2, p);
    down.at(0, 0) = PadicScalar::one(p);
    down.at(1, 1) = PadicScalar(static_cast<long>(p.value()), 1, p);
    out.push_back(canonicalize(b * down));
    return out;
}

std::vector<LatticeClass> geodesic(const LatticeClass& l1, const LatticeClass& l2) {
    if (l1.p != l2.p) throw DomainError("geodesic: prime mismatch");
    std::vector<LatticeClass> path{l1};
    LatticeClass cur = l1;
    long d = tree_distance(cur, l2);
    while (d > 0) {
        bool advanced = false;
        for (const auto& n : neighbors(cur)) {
            if (tree_distance(n, l2) == d - 1) {
                path.push_back(n);
                cur = n;
                --d;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw DomainError("geodesic: no descending neighbor (broken metric)");
    }
    return path;
}

LatticeClass act(const Mat& g, const LatticeClass& l) {
    if (g.rows != 2 || g.cols != 2) throw DomainError("act: group element must be 2x2");
    return canonicalize(g * basis_matrix(l));
}

std::vector<Mat> group_generators(const CompactGroupSpec& spec, Prime p) {
    std::vector<Mat> gens;
    if (spec.kind == CompactGroupKind::TorusUnits) {
        mpq_class g0(primitive_root_mod_p2(p));
        gens.push_back(unit_diag(g0, p));
        gens.push_back(unit_diag(1 / g0, p));
        if (p.value() == 2) {
            gens.push_back(unit_diag(mpq_class(-1), p));
        }
    } else {
        gens.push_back(Mat::mat2(1, 1, 0, 1, p));
        gens.push_back(Mat::mat2(1, 0, 1, 1, p));
        gens.push_back(Mat::mat2(1, -1, 0, 1, p));
        gens.push_back(Mat::mat2(1, 0, -1, 1, p));
    }
    return gens;
}

std::vector<Mat> congruence_probe(const CompactGroupSpec& spec, Prime p, int level) {
    mpq_class u = 1 + mpq_class(p_power(p, static_cast<unsigned long>(level)));
    PadicScalar pn = PadicScalar::uniformizer_pow(level, p);
    std::vector<Mat> probes;
    probes.push_back(unit_diag(u, p));
    if (spec.kind == CompactGroupKind::IntegralSpecialLinear) {
        Mat upper = Mat::identity(2, p);
        upper.at(0, 1) = pn;
        Mat lower = Mat::identity(2, p);
        lower.at(1, 0) = pn;
        probes.push_back(upper);
        probes.push_back(lower);
    }
    return probes;
}

int ensure_level(const CompactGroupSpec& spec, const LatticeClass& l) {
    for (int n = spec.level; n <= spec.level_cap; ++n) {
        bool fixes = true;
        for (const auto& g : congruence_probe(spec, l.p, n)) {
            if (act(g, l) != l) {
                fixes = false;
                break;
            }
        }
        if (fixes) return n;
    }
    throw DomainError("orbit: congruence level cap exceeded (vertex too deep for level " +
                      std::to_string(spec.level_cap) + ")");
}

VertexSet orbit(const CompactGroupSpec& spec, const LatticeClass& l) {
    (void)ensure_level(spec, l);  // certifies the finite quotient determines the orbit
    std::vector<Mat> gens = group_generators(spec, l.p);
    VertexSet seen{l};
    std::deque<LatticeClass> frontier{l};
    while (!frontier.empty()) {
        LatticeClass cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            LatticeClass nxt = act(g, cur);
            if (seen.insert(nxt).second) {
                if (seen.size() > spec.orbit_cap) {
                    throw DomainError("orbit: size cap exceeded");
                }
                frontier.push_back(nxt);
            }
        }
    }
    return seen;
}

VertexSet convex_hull(const VertexSet& s) {
    if (s.empty()) throw DomainError("convex_hull: empty vertex set");
    VertexSet hull;
    const LatticeClass& base = *s.begin();
    for (const auto& v : s) {
        for (const auto& x : geodesic(base, v)) hull.insert(x);
    }
    return hull;
}

FixedPointResult fixed_point_in_hull(const CompactGroupSpec& spec, const VertexSet& hull) {
    if (hull.empty()) throw DomainError("fixed_point_in_hull: empty hull");
    Prime p = hull.begin()->p;
    std::vector<Mat> gens = group_generators(spec, p);

    for (const auto& g : gens) {
        for (const auto& v : hull) {
            if (hull.find(act(g, v)) == hull.end()) {
                throw DomainError("fixed_point_in_hull: hull is not stable under the group");
            }
        }
    }
    for (const auto& v : hull) {
        bool fixed = true;
        for (const auto& g : gens) {
            if (act(g, v) != v) {
                fixed = false;
                break;
            }
        }
        if (fixed) return FixedPointResult{{v}, false};
    }
    // No fixed vertex: look for an invariant edge (fixed midpoint).
    for (const auto& u : hull) {
        for (const auto& v : hull) {
            if (!(u < v) || tree_distance(u, v) != 1) continue;
            bool invariant = true;
            for (const auto& g : gens) {
                LatticeClass gu = act(g, u), gv = act(g, v);
                bool same = (gu == u && gv == v) || (gu == v && gv == u);
                if (!same) {
                    invariant = false;
                    break;
                }
            }
            if (invariant) return FixedPointResult{{u, v}, true};
        }
    }
    throw DomainError("fixed_point_in_hull: stable hull contains no fixed point");
}

VertexSet fixed_locus_window(const CompactGroupSpec& spec, Prime p, long radius) {
    if (radius < 0) throw DomainError("fixed_locus_window: radius must be nonnegative");
    std::vector<Mat> gens = group_generators(spec, p);
    VertexSet ball{standard_vertex(p)};
    std::deque<std::pair<LatticeClass, long>> frontier{{standard_vertex(p), 0}};
    while (!frontier.empty()) {
        auto [cur, d] = frontier.front();
        frontier.pop_front();
        if (d == radius) continue;
        for (const auto& n : neighbors(cur)) {
            if (ball.insert(n).second) frontier.push_back({n, d + 1});
        }
    }
    VertexSet fixed;
    for (const auto& v : ball) {
        bool ok = true;
        for (const auto& g : gens) {
            if (act(g, v) != v) {
                ok = false;
                break;
            }
        }
        if (ok) fixed.insert(v);
    }
    return fixed;
}

MembershipResult y_membership(const Mat& y, const VertexSet& c, const CompactGroupSpec& h_spec) {
    if (c.empty()) throw DomainError("y_membership: empty window");
    LatticeClass l = act(y.inverse(), standard_vertex(c.begin()->p));
    VertexSet hull = convex_hull(orbit(h_spec, l));
    for (const auto& v : hull) {
        if (c.find(v) != c.end()) return MembershipResult{true, v};
    }
    return MembershipResult{false, std::nullopt};
}

ApartmentPresentation presentation(const LatticeClass& l) {
    long d = ((l.a % 2) + 2) % 2;
    long s = (d - l.a) / 2;
    Prime p = l.p;
    Mat g(2, 2, p);
    g.at(0, 0) = PadicScalar::uniformizer_pow((l.a - d) / 2, p);
    g.at(0, 1) = PadicScalar(l.b, p) * PadicScalar::uniformizer_pow(s, p);
    g.at(1, 1) = PadicScalar::uniformizer_pow(s, p);
    return ApartmentPresentation{g, mpq_class(d, 2)};
}

std::optional<mpq_class> apartment_coordinate(const LatticeClass& l) {
    if (sgn(l.b) != 0) return std::nullopt;
    return mpq_class(l.a, 2);
}

std::string to_dot(const VertexSet& s) {
    std::ostringstream os;
    os << "graph hull {\n  node [shape=circle];\n";
    for (const auto& v : s) {
        os << "  \"" << v.str() << "\";\n";
    }
    for (auto it = s.begin(); it != s.end(); ++it) {
        for (auto jt = std::next(it); jt != s.end(); ++jt) {
            if (tree_distance(*it, *jt) == 1) {
                os << "  \"" << it->str() << "\" -- \"" << jt->str() << "\";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace ultrastab
