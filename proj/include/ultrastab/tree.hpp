#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ultrastab/norms.hpp"
#include "ultrastab/padic.hpp"
#include "ultrastab/tropical.hpp"

namespace ultrastab {

/// Homothety class of a rank-2 lattice, i.e. a vertex of the (p+1)-regular
/// tree. Canonical representative [[p^a, b],[0,1]]: a is any integer, b is a
/// rational with p-power denominator reduced mod p^a (classes off the
/// standard apartment with a < 0 force b's denominator past p^-a, so a is not
/// sign-constrained).
struct LatticeClass {
    long a = 0;
    mpq_class b = 0;
    Prime p;

    bool operator==(const LatticeClass& o) const { return a == o.a && b == o.b && p == o.p; }
    bool operator!=(const LatticeClass& o) const { return !(*this == o); }
    bool operator<(const LatticeClass& o) const {
        if (a != o.a) return a < o.a;
        return cmp(b, o.b) < 0;
    }

    std::string str() const;
};

using VertexSet = std::set<LatticeClass>;

/// Column reduction over the local integers followed by p-power scaling.
/// Idempotent; bases spanning homothetic lattices agree after reduction.
LatticeClass canonicalize(const Mat& basis);

/// Rebuild a class from serialized parts; re-canonicalizes, so any (a, b)
/// representing a lattice is accepted.
LatticeClass lattice_class_from_parts(long a, const mpq_class& b, Prime p);

/// The standard vertex o (class of the unit lattice).
LatticeClass standard_vertex(Prime p);

Mat basis_matrix(const LatticeClass& l);

/// Difference of the two elementary-divisor exponents of the change of basis.
long tree_distance(const LatticeClass& l1, const LatticeClass& l2);

/// The unique path between the endpoints, inclusive; length distance+1.
std::vector<LatticeClass> geodesic(const LatticeClass& l1, const LatticeClass& l2);

LatticeClass act(const Mat& g, const LatticeClass& l);

/// The p+1 vertices at distance 1.
std::vector<LatticeClass> neighbors(const LatticeClass& l);

enum class CompactGroupKind {
    TorusUnits,            // diagonal matrices with unit entries
    IntegralSpecialLinear  // full integral stabilizer of o
};

struct CompactGroupSpec {
    CompactGroupKind kind = CompactGroupKind::TorusUnits;
    int level = 2;               // congruence level for the fixing certificate
    int level_cap = 16;          // escalation bound
    std::size_t orbit_cap = 200000;

    static CompactGroupSpec torus_units() { return CompactGroupSpec{}; }
    static CompactGroupSpec integral_sl2() {
        return CompactGroupSpec{CompactGroupKind::IntegralSpecialLinear, 2, 16, 200000};
    }
};

/// Topological generators of the group (dense subgroup; stabilizers are
/// closed, so fixing these is fixing the group).
std::vector<Mat> group_generators(const CompactGroupSpec& spec, Prime p);

/// Topological generators of the level-N congruence kernel inside the group;
/// used to certify that the finite level-N quotient already determines orbits.
std::vector<Mat> congruence_probe(const CompactGroupSpec& spec, Prime p, int level);

/// Smallest level in [spec.level, spec.level_cap] whose congruence kernel
/// fixes l; throws when the cap is exceeded.
int ensure_level(const CompactGroupSpec& spec, const LatticeClass& l);

/// Full finite orbit of l, by closure under the generators.
VertexSet orbit(const CompactGroupSpec& spec, const LatticeClass& l);

/// Smallest subtree containing s: union of geodesics from one member to all
/// others (pairwise closure follows in a tree).
VertexSet convex_hull(const VertexSet& s);

struct FixedPointResult {
    std::vector<LatticeClass> vertices;  // one vertex, or an edge's two endpoints
    bool midpoint = false;
};

/// A vertex of the hull fixed by the group, in canonical order; if only an
/// edge midpoint is fixed, both endpoints with the midpoint marker.
FixedPointResult fixed_point_in_hull(const CompactGroupSpec& spec, const VertexSet& hull);

/// All vertices within the given distance of o fixed by the group.
VertexSet fixed_locus_window(const CompactGroupSpec& spec, Prime p, long radius);

struct MembershipResult {
    bool member = false;
    std::optional<LatticeClass> witness;
};

/// Whether the hull of the orbit of y^{-1} o meets the window c.
MembershipResult y_membership(const Mat& y, const VertexSet& c, const CompactGroupSpec& h_spec);

/// vertex = g . (apartment point lambda) with g determinant-1 and upper
/// triangular; lambda is 0 or 1/2 by vertex type. This is the presentation
/// used to evaluate seminorms at arbitrary vertices.
struct ApartmentPresentation {
    Mat g;
    mpq_class lambda;
};

ApartmentPresentation presentation(const LatticeClass& l);

/// a/2 for vertices on the standard apartment (b = 0); nullopt otherwise.
std::optional<mpq_class> apartment_coordinate(const LatticeClass& l);

/// DOT rendering of the induced subgraph (edges between distance-1 members).
std::string to_dot(const VertexSet& s);

}  // namespace ultrastab
