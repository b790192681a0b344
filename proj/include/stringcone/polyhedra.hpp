#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stringcone/inequalities.hpp"
#include "stringcone/linalg.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

struct PolyhedronError : std::domain_error {
    using std::domain_error::domain_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Intersection of half-spaces rows[i].x + consts[i] >= 0.
struct HPolyhedron {
    int dim = 0;
    Mat rows;
    Vec consts;

    int size() const { return static_cast<int>(rows.size()); }
    void add(const Vec& row, const Rat& cst) {
        rows.push_back(row);
        consts.push_back(cst);
    }
    Rat eval(int i, const Vec& x) const { return dot(rows[i], x) + consts[i]; }
    bool contains(const Vec& x) const;
    bool strictly_contains(const Vec& x) const;
};

HPolyhedron make_hpoly(const std::vector<LinearForm>& forms, const Weight& lam);

struct VRep {
    std::vector<Vec> vertices;  // lex-sorted
    std::vector<Vec> rays;      // primitive integer directions, lex-sorted
    bool bounded() const { return rays.empty(); }
};

// Exact double description: seed with a full-rank subsystem, then insert the
// remaining half-spaces in lexicographic order, combining adjacent generator
// pairs across each new hyperplane.  Throws BudgetError if the optional
// deadline passes, PolyhedronError if the system has a lineality direction.
VRep vertex_enumeration(const HPolyhedron& h,
                        std::optional<std::chrono::milliseconds> budget = std::nullopt);

// Keeps exactly the facet-supporting inequalities (checked by exact LP with a
// slack maximization).  Requires a full-dimensional, nonempty system.
struct Irredundant {
    HPolyhedron poly;
    std::vector<int> kept;  // indices into the input
};
Irredundant remove_redundant(const HPolyhedron& h);

// Nonempty interior test (strict feasibility via slack LP).
bool has_interior(const HPolyhedron& h);

// Enumerates integer points by recursive coordinate bounding: exact LP bounds
// for the next coordinate, one branch per integer value.  Bounded input only;
// the candidate counter is capped (default 10^7) to keep runs finite.
void lattice_points(const HPolyhedron& h, const std::function<void(const std::vector<Int>&)>& fn,
                    std::int64_t cap = 10'000'000);
Int lattice_point_count(const HPolyhedron& h, std::int64_t cap = 10'000'000);

bool is_integral(const VRep& v);

// Euclidean volume via the pulling triangulation of the face lattice; 0 for
// lower-dimensional input, error for unbounded input.
Rat volume(const HPolyhedron& h);
Rat volume(const HPolyhedron& h, const VRep& v);

// x -> M x + b applied to every generator.
VRep apply_affine(const Mat& m, const Vec& b, const VRep& v);

// (count of strict-interior lattice points, the point if unique).
std::pair<Int, std::optional<std::vector<Int>>> interior_lattice_point(const HPolyhedron& h);

// { y : y.(v - center) <= 1 for all generators }, rays contributing
// y.r <= 0.  center must be strictly inside.
HPolyhedron polar_dual(const VRep& v, const Vec& center);

// Fallback vertex sampler: maximizes random integer objectives, tightening
// lexicographically until the optimal face is a single vertex.  Returns the
// first vertex with a non-integer coordinate, or nullopt after `attempts`.
std::optional<Vec> probe_fractional_vertex(const HPolyhedron& h, unsigned seed, int attempts);

// One exact vertex maximizing the objective (lexicographic refinement).
Vec vertex_maximizing(const HPolyhedron& h, const Vec& objective);

}  // namespace stringcone
