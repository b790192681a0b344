#include "stringcone/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "stringcone/simplex.hpp"

namespace stringcone {

bool HPolyhedron::contains(const Vec& x) const {
    for (int i = 0; i < size(); ++i)
        if (eval(i, x) < 0) return false;
    return true;
}

bool HPolyhedron::strictly_contains(const Vec& x) const {
    for (int i = 0; i < size(); ++i)
        if (eval(i, x) <= 0) return false;
    return true;
}

HPolyhedron make_hpoly(const std::vector<LinearForm>& forms, const Weight& lam) {
    HPolyhedron h;
    if (forms.empty()) return h;
    h.dim = static_cast<int>(forms[0].coeffs.size());
    for (const auto& f : forms) {
        if (static_cast<int>(f.coeffs.size()) != h.dim)
            throw std::invalid_argument("mixed-dimension forms");
        h.add(f.coeffs, instantiate(f.cst, lam));
    }
    return h;
}

namespace {

struct Generator {
    Vec x;                   // homogeneous coordinates, x[0] the slab coordinate
    std::vector<char> zero;  // tightness flags, aligned with processed rows
};

// Independent subset of rows spanning the whole space, by Gaussian elimination
// in the given order.  Returns indices, or fewer than dim if rank-deficient.
std::vector<int> independent_rows(const Mat& rows, int dim) {
    Mat work;
    std::vector<int> picked;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        Mat trial = work;
        trial.push_back(rows[i]);
        if (rank_of(trial) > static_cast<int>(work.size())) {
            work = std::move(trial);
            picked.push_back(i);
            if (static_cast<int>(picked.size()) == dim) break;
        }
    }
    return picked;
}

void check_deadline(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw BudgetError("vertex enumeration exceeded its time budget");
}

}  // namespace

VRep vertex_enumeration(const HPolyhedron& h, std::optional<std::chrono::milliseconds> budget) {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (budget) deadline = std::chrono::steady_clock::now() + *budget;

    const int d = h.dim + 1;
    // Homogenize: (c, a) . (x0, x) >= 0 together with x0 >= 0.
    Mat rows;
    for (int i = 0; i < h.size(); ++i) {
        Vec r(d);
        r[0] = h.consts[i];
        for (int j = 0; j < h.dim; ++j) r[j + 1] = h.rows[i][j];
        rows.push_back(primitive(r));
    }
    Vec slab(d, Rat(0));
    slab[0] = 1;
    rows.push_back(slab);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::vector<int> seed = independent_rows(rows, d);
    if (static_cast<int>(seed.size()) < d)
        throw PolyhedronError("polyhedron has a lineality direction");

    Mat basis(d, Vec(d));
    for (int i = 0; i < d; ++i) basis[i] = rows[seed[i]];
    Mat binv = inverse(basis);

    std::vector<Generator> gens(d);
    for (int j = 0; j < d; ++j) {
        Vec g(d);
        for (int i = 0; i < d; ++i) g[i] = binv[i][j];
        gens[j].x = primitive(g);
        gens[j].zero.assign(d, 1);
        gens[j].zero[j] = 0;
    }

    Mat processed;
    for (int i : seed) processed.push_back(rows[i]);
    std::set<int> seeded(seed.begin(), seed.end());

    for (int t = 0; t < static_cast<int>(rows.size()); ++t) {
        if (seeded.count(t)) continue;
        check_deadline(deadline);
        const Vec& a = rows[t];

        std::vector<Rat> val(gens.size());
        std::vector<int> pos, neg, zer;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            val[g] = dot(a, gens[g].x);
            if (val[g] > 0)
                pos.push_back(static_cast<int>(g));
            else if (val[g] < 0)
                neg.push_back(static_cast<int>(g));
            else
                zer.push_back(static_cast<int>(g));
        }
        if (neg.empty()) {
            for (auto& g : gens) g.zero.push_back(dot(a, g.x) == 0 ? 1 : 0);
            processed.push_back(a);
            continue;
        }

        std::vector<Generator> next;
        for (int g : pos) next.push_back(gens[g]);
        for (int g : zer) next.push_back(gens[g]);

        const std::size_t nproc = processed.size();
        long pairs_seen = 0;
        for (int u : pos) {
            for (int v : neg) {
                if (++pairs_seen % 256 == 0) check_deadline(deadline);
                // Adjacency: no third generator is tight everywhere u and v
                // both are.  Valid because the cone is pointed.
                bool adjacent = true;
                for (std::size_t g = 0; g < gens.size() && adjacent; ++g) {
                    if (static_cast<int>(g) == u || static_cast<int>(g) == v) continue;
                    bool covers = true;
                    for (std::size_t r = 0; r < nproc && covers; ++r)
                        if (gens[u].zero[r] && gens[v].zero[r] && !gens[g].zero[r]) covers = false;
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                Vec w(d);
                for (int i = 0; i < d; ++i) w[i] = val[u] * gens[v].x[i] - val[v] * gens[u].x[i];
                Generator ng;
                ng.x = primitive(w);
                ng.zero.resize(nproc);
                for (std::size_t r = 0; r < nproc; ++r)
                    ng.zero[r] = dot(processed[r], ng.x) == 0 ? 1 : 0;
                next.push_back(std::move(ng));
            }
        }
        for (auto& g : next) g.zero.push_back(dot(a, g.x) == 0 ? 1 : 0);
        processed.push_back(a);
        gens = std::move(next);
    }

    VRep out;
    for (const auto& g : gens) {
        if (g.x[0] > 0) {
            Vec v(h.dim);
            for (int j = 0; j < h.dim; ++j) v[j] = g.x[j + 1] / g.x[0];
            out.vertices.push_back(std::move(v));
        } else {
            Vec r(h.dim);
            for (int j = 0; j < h.dim; ++j) r[j] = g.x[j + 1];
            out.rays.push_back(primitive(r));
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

Irredundant remove_redundant(const HPolyhedron& h) {
    std::vector<char> dropped(h.size(), 0);
    for (int i = 0; i < h.size(); ++i) {
        LpProblem p;
        p.dim = h.dim;
        for (int j = 0; j < h.size(); ++j) {
            if (j == i || dropped[j]) continue;
            p.add(h.rows[j], h.consts[j]);
        }
        Vec obj(h.dim);
        for (int j = 0; j < h.dim; ++j) obj[j] = -h.rows[i][j];
        LpResult r = lp_maximize(p, obj);
        if (r.status == LpStatus::Infeasible)
            throw PolyhedronError("redundancy removal on an empty system");
        // Redundant iff the inequality cannot be violated while the rest hold.
        if (r.status == LpStatus::Optimal && r.value - h.consts[i] <= 0) dropped[i] = 1;
    }
    Irredundant out;
    out.poly.dim = h.dim;
    for (int i = 0; i < h.size(); ++i) {
        if (dropped[i]) continue;
        out.poly.add(h.rows[i], h.consts[i]);
        out.kept.push_back(i);
    }
    return out;
}

bool has_interior(const HPolyhedron& h) {
    // maximize s subject to rows.x + consts >= s, s <= 1, over (x, s).
    LpProblem p;
    p.dim = h.dim + 1;
    for (int i = 0; i < h.size(); ++i) {
        Vec row(h.dim + 1);
        for (int j = 0; j < h.dim; ++j) row[j] = h.rows[i][j];
        row[h.dim] = -1;
        p.add(row, h.consts[i]);
    }
    Vec capr(h.dim + 1, Rat(0));
    capr[h.dim] = -1;
    p.add(capr, Rat(1));
    Vec obj(h.dim + 1, Rat(0));
    obj[h.dim] = 1;
    LpResult r = lp_maximize(p, obj);
    return r.status == LpStatus::Optimal && r.value > 0;
}

namespace {

struct LatticeWalk {
    const std::function<void(const std::vector<Int>&)>* fn = nullptr;  // null = count only
    Int count = 0;
    std::int64_t cap = 0;
    std::int64_t used = 0;
    std::vector<Int> fixed;

    void spend() {
        if (++used > cap) throw BudgetError("lattice enumeration exceeded its candidate cap");
    }

    void walk(const Mat& rows, const Vec& consts) {
        spend();
        const int rem = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        if (rem == 0) {
            for (const Rat& c : consts)
                if (c < 0) return;
            count += 1;
            if (fn) (*fn)(fixed);
            return;
        }
        LpProblem p;
        p.dim = rem;
        for (std::size_t i = 0; i < rows.size(); ++i) p.add(rows[i], consts[i]);
        Vec obj(rem, Rat(0));
        obj[0] = 1;
        LpResult hi = lp_maximize(p, obj);
        if (hi.status == LpStatus::Infeasible) return;
        obj[0] = -1;
        LpResult lo = lp_maximize(p, obj);
        if (hi.status == LpStatus::Unbounded || lo.status == LpStatus::Unbounded)
            throw PolyhedronError("lattice enumeration needs a bounded polytope");
        Int top = rat_floor(hi.value);
        Int bot = rat_ceil(-lo.value);
        if (bot > top) return;
        if (rem == 1 && !fn) {
            // Closed-form leaf: every integer in [bot, top] satisfies the
            // one remaining coordinate's constraints.
            count += top - bot + 1;
            return;
        }
        Mat sub(rows.size(), Vec(rem - 1));
        Vec scon(consts.size());
        for (Int v = bot; v <= top; ++v) {
            spend();
            Rat rv(v);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (int j = 1; j < rem; ++j) sub[i][j - 1] = rows[i][j];
                scon[i] = consts[i] + rows[i][0] * rv;
            }
            fixed.push_back(v);
            walk(sub, scon);
            fixed.pop_back();
        }
    }
};

}  // namespace

void lattice_points(const HPolyhedron& h, const std::function<void(const std::vector<Int>&)>& fn,
                    std::int64_t cap) {
    LatticeWalk w;
    w.fn = &fn;
    w.cap = cap;
    Mat rows = h.rows;
    if (h.dim > 0 && rows.empty()) throw PolyhedronError("lattice enumeration needs a bounded polytope");
    w.walk(rows, h.consts);
}

Int lattice_point_count(const HPolyhedron& h, std::int64_t cap) {
    LatticeWalk w;
    w.cap = cap;
    Mat rows = h.rows;
    if (h.dim > 0 && rows.empty()) throw PolyhedronError("lattice enumeration needs a bounded polytope");
    w.walk(rows, h.consts);
    return w.count;
}

bool is_integral(const VRep& v) {
    for (const auto& vtx : v.vertices)
        for (const auto& c : vtx)
            if (!is_integer(c)) return false;
    return true;
}

namespace {

// Pulling decomposition over the face lattice.  Faces are identified by their
// vertex-id sets; tightness against the input rows is intrinsic, so the
// combinatorics never depend on the coordinate drops made along the way.
class VolumeEngine {
  public:
    VolumeEngine(const Mat& rows, const Vec& consts, const std::vector<Vec>& verts)
        : rows_(rows), consts_(consts) {
        tight_.assign(rows.size(), {});
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t v = 0; v < verts.size(); ++v)
                if (dot(rows[r], verts[v]) + consts[r] == 0) tight_[r].push_back(static_cast<int>(v));
    }

    // ids: vertex ids of the face; pts: their current coordinates (full-dim
    // in dimension k); rows/consts: all input rows in current coordinates.
    Rat measure(const std::vector<int>& ids, const std::vector<Vec>& pts, const Mat& rows,
                const Vec& consts, const std::vector<int>& coords) {
        const int k = static_cast<int>(coords.size());
        if (k == 1) {
            Rat lo = pts[0][0], hi = pts[0][0];
            for (const auto& p : pts) {
                lo = std::min(lo, p[0]);
                hi = std::max(hi, p[0]);
            }
            return hi - lo;
        }
        auto key = std::make_pair(ids, coords);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const Vec& apex = pts[0];
        std::set<std::vector<int>> seen;
        Rat total = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::vector<int> sub;
            std::set_intersection(ids.begin(), ids.end(), tight_[r].begin(), tight_[r].end(),
                                  std::back_inserter(sub));
            if (sub.empty() || sub.size() == ids.size()) continue;
            Rat slack = dot(rows[r], apex) + consts[r];
            if (slack == 0) continue;  // facet through the apex: flat pyramid
            if (!seen.insert(sub).second) continue;
            std::vector<Vec> fpts;
            for (int id : sub) fpts.push_back(point_of(id, ids, pts));
            if (affine_rank(fpts) != k - 1) continue;  // lower-dimensional slice
            int j = 0;
            while (rows[r][j] == 0) ++j;
            total += slack / abs(rows[r][j]) * face_measure(sub, fpts, rows, consts, coords, r, j) /
                     Rat(k);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

  private:
    static Vec point_of(int id, const std::vector<int>& ids, const std::vector<Vec>& pts) {
        auto at = std::lower_bound(ids.begin(), ids.end(), id);
        return pts[at - ids.begin()];
    }

    // Eliminate coordinate j using facet row r, then recurse one dimension down.
    Rat face_measure(const std::vector<int>& sub, const std::vector<Vec>& fpts, const Mat& rows,
                     const Vec& consts, const std::vector<int>& coords, std::size_t r, int j) {
        const int k = static_cast<int>(coords.size());
        std::vector<Vec> dpts;
        for (const auto& p : fpts) {
            Vec q;
            for (int i = 0; i < k; ++i)
                if (i != j) q.push_back(p[i]);
            dpts.push_back(std::move(q));
        }
        Rat aj = rows[r][j];
        Mat drows(rows.size(), Vec(k - 1));
        Vec dconsts(consts.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rat f = rows[i][j] / aj;
            int t = 0;
            for (int c = 0; c < k; ++c)
                if (c != j) drows[i][t++] = rows[i][c] - f * rows[r][c];
            dconsts[i] = consts[i] - f * consts[r];
        }
        std::vector<int> dcoords;
        for (int i = 0; i < k; ++i)
            if (i != j) dcoords.push_back(coords[i]);
        return measure(sub, dpts, drows, dconsts, dcoords);
    }

    Mat rows_;
    Vec consts_;
    std::vector<std::vector<int>> tight_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> memo_;
};

}  // namespace

Rat volume(const HPolyhedron& h, const VRep& v) {
    if (!v.bounded()) throw PolyhedronError("volume of an unbounded polyhedron");
    if (v.vertices.empty()) return 0;
    if (affine_rank(v.vertices) < h.dim) return 0;
    VolumeEngine eng(h.rows, h.consts, v.vertices);
    std::vector<int> ids(v.vertices.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<int> coords(h.dim);
    for (int i = 0; i < h.dim; ++i) coords[i] = i;
    return eng.measure(ids, v.vertices, h.rows, h.consts, coords);
}

Rat volume(const HPolyhedron& h) { return volume(h, vertex_enumeration(h)); }

VRep apply_affine(const Mat& m, const Vec& b, const VRep& v) {
    VRep out;
    for (const auto& x : v.vertices) {
        Vec y = mat_vec(m, x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
        out.vertices.push_back(std::move(y));
    }
    for (const auto& r : v.rays) out.rays.push_back(primitive(mat_vec(m, r)));
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

std::pair<Int, std::optional<std::vector<Int>>> interior_lattice_point(const HPolyhedron& h) {
    Int count = 0;
    std::vector<Int> witness;
    lattice_points(h, [&](const std::vector<Int>& p) {
        Vec x(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) x[i] = Rat(p[i]);
        if (!h.strictly_contains(x)) return;
        if (count == 0) witness = p;
        count += 1;
    });
    if (count == 1) return {count, witness};
    return {count, std::nullopt};
}

HPolyhedron polar_dual(const VRep& v, const Vec& center) {
    HPolyhedron h;
    h.dim = static_cast<int>(center.size());
    for (const auto& vtx : v.vertices) {
        Vec row(h.dim);
        for (int j = 0; j < h.dim; ++j) row[j] = center[j] - vtx[j];
        h.add(row, Rat(1));
    }
    for (const auto& r : v.rays) {
        Vec row(h.dim);
        for (int j = 0; j < h.dim; ++j) row[j] = -r[j];
        h.add(row, Rat(0));
    }
    return h;
}

Vec vertex_maximizing(const HPolyhedron& h, const Vec& objective) {
    LpProblem p;
    p.dim = h.dim;
    for (int i = 0; i < h.size(); ++i) p.add(h.rows[i], h.consts[i]);
    LpResult r = lp_maximize(p, objective);
    if (r.status == LpStatus::Infeasible) throw PolyhedronError("empty polyhedron");
    if (r.status == LpStatus::Unbounded) throw PolyhedronError("unbounded objective");
    p.add_eq(objective, -r.value);
    // Lexicographic refinement pins down one vertex of the optimal face.
    Vec x(h.dim);
    for (int j = 0; j < h.dim; ++j) {
        Vec e(h.dim, Rat(0));
        e[j] = 1;
        LpResult s = lp_maximize(p, e);
        if (s.status != LpStatus::Optimal) throw PolyhedronError("optimal face is unbounded");
        x[j] = s.value;
        p.add_eq(e, -s.value);
    }
    return x;
}

std::optional<Vec> probe_fractional_vertex(const HPolyhedron& h, unsigned seed, int attempts) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int t = 0; t < attempts; ++t) {
        Vec obj(h.dim);
        for (int j = 0; j < h.dim; ++j) obj[j] = coeff(gen);
        Vec x = vertex_maximizing(h, obj);
        for (const auto& c : x)
            if (!is_integer(c)) return x;
    }
    return std::nullopt;
}

}  // namespace stringcone
