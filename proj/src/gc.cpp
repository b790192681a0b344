#include "stringcone/gc.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <thread>

#include "stringcone/gp_paths.hpp"

namespace stringcone {

std::vector<LinearForm> gc_polytope(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    const int n = rank;
    const int dim = n * (n + 1) / 2;
    std::vector<LinearForm> forms;
    forms.reserve(n * (n + 1));
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= k; ++j) {
            LinearForm up = zero_form(dim, n);  // x_{k+1,j} - x_{k,j} >= 0
            up.coeffs[flat_index(k, j) - 1] = -1;
            if (k < n) {
                up.coeffs[flat_index(k + 1, j) - 1] = 1;
            } else {
                for (int i = j; i <= n; ++i) up.cst.lambda[i - 1] = 1;
            }
            forms.push_back(std::move(up));
            LinearForm lo = zero_form(dim, n);  // x_{k,j} - x_{k+1,j+1} >= 0
            lo.coeffs[flat_index(k, j) - 1] = 1;
            if (k < n) {
                lo.coeffs[flat_index(k + 1, j + 1) - 1] = -1;
            } else {
                for (int i = j + 1; i <= n; ++i) lo.cst.lambda[i - 1] = -1;
            }
            forms.push_back(std::move(lo));
        }
    }
    return forms;
}

ReducedWord sigma_word(const std::vector<Side>& sigma) {
    ReducedWord w{0, {}};
    for (Side s : sigma) w = extend(w, s, 0);
    return w;
}

namespace {

// The k x k one-step matrix: bidiagonal for A, antidiagonal for D.
Mat one_step(Side s, int k) {
    Mat m(k, Vec(k, Rat(0)));
    if (s == Side::A) {
        for (int i = 1; i <= k; ++i) m[i - 1][i - 1] = 1;
        for (int i = 1; i <= k - 1; ++i) m[i - 1][i] = -1;
    } else {
        for (int i = 1; i <= k; ++i) m[i - 1][k - i] = -1;
        for (int i = 2; i <= k; ++i) m[i - 1][k - i + 1] = 1;
    }
    return m;
}

AffineConst lambda_sum(int n, int from) {
    AffineConst c;
    c.one = 0;
    c.lambda.assign(n, Rat(0));
    for (int j = from; j <= n; ++j) c.lambda[j - 1] = 1;
    return c;
}

}  // namespace

AffineMap build_map(const std::vector<Side>& sigma) {
    const int n = static_cast<int>(sigma.size());
    if (n < 1) throw std::invalid_argument("empty sequence");
    const int dim = n * (n + 1) / 2;

    // blocks[l-1] holds the current row block for column block l, shrinking
    // from n rows down to k rows as k descends.
    std::vector<Mat> blocks(n);
    for (int l = 1; l < n; ++l) blocks[l - 1] = Mat(n, Vec(l, Rat(0)));
    blocks[n - 1] = one_step(sigma[n - 1], n);
    std::vector<AffineConst> vk(n);
    for (int i = 1; i <= n; ++i)
        vk[i - 1] = lambda_sum(n, sigma[n - 1] == Side::A ? i + 1 : i);

    AffineMap out;
    out.m.assign(dim, Vec(dim, Rat(0)));
    out.v.assign(dim, AffineConst{});
    auto place = [&](int k) {
        const int roff = k * (k - 1) / 2;
        for (int l = 1; l <= n; ++l) {
            const int coff = l * (l - 1) / 2;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < l; ++j) out.m[roff + i][coff + j] = blocks[l - 1][i][j];
        }
        for (int i = 0; i < k; ++i) out.v[roff + i] = vk[i];
    };

    place(n);
    for (int k = n - 1; k >= 1; --k) {
        const bool first = sigma[k - 1] == Side::A;  // which row/entry to delete
        for (int l = 1; l <= n; ++l) {
            if (l == k) {
                blocks[l - 1] = one_step(sigma[k - 1], k);
            } else {
                Mat& b = blocks[l - 1];
                if (first)
                    b.erase(b.begin());
                else
                    b.pop_back();
            }
        }
        if (first)
            vk.erase(vk.begin());
        else
            vk.pop_back();
        place(k);
    }
    return out;
}

std::vector<int> two_move_permutation(const ReducedWord& from, const ReducedWord& to) {
    if (from.rank != to.rank) throw MoveError("words have different ranks");
    const int N = from.length();
    std::vector<int> identity(N + 1);
    for (int p = 0; p <= N; ++p) identity[p] = p;
    std::map<std::vector<int>, std::vector<int>> seen;
    seen.emplace(from.letters, identity);
    std::queue<std::vector<int>> bfs;
    bfs.push(from.letters);
    while (!bfs.empty()) {
        std::vector<int> cur = bfs.front();
        bfs.pop();
        std::vector<int> perm = seen.at(cur);
        if (cur == to.letters) return perm;
        for (int p = 1; p < N; ++p) {
            if (std::abs(cur[p - 1] - cur[p]) <= 1) continue;
            std::vector<int> nxt = cur;
            std::swap(nxt[p - 1], nxt[p]);
            if (seen.count(nxt)) continue;
            std::vector<int> np = perm;
            for (int q = 1; q <= N; ++q) {
                if (np[q] == p)
                    np[q] = p + 1;
                else if (np[q] == p + 1)
                    np[q] = p;
            }
            seen.emplace(nxt, std::move(np));
            bfs.push(std::move(nxt));
        }
    }
    throw MoveError("words are not related by commuting moves");
}

GcMap gc_map(const ReducedWord& w, const Weight& lam) {
    auto sig = gc_type(w);
    if (!sig) throw std::invalid_argument("word admits no index-zero extension sequence");
    GcMap g;
    g.sigma = *sig;
    g.built = sigma_word(g.sigma);
    g.perm = two_move_permutation(w, g.built);
    g.map = build_map(g.sigma);

    HPolyhedron sp = make_hpoly(string_polytope_forms(g.built), lam);
    VRep sv = vertex_enumeration(sp);
    Vec b(g.map.v.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = instantiate(g.map.v[i], lam);
    VRep image = apply_affine(g.map.m, b, sv);
    VRep gv = vertex_enumeration(make_hpoly(gc_polytope(w.rank), lam));
    g.verified = image.vertices == gv.vertices && image.rays == gv.rays;
    return g;
}

Vec gc_map_point(const GcMap& g, const Vec& t, const Weight& lam) {
    const int N = g.built.length();
    if (static_cast<int>(t.size()) != N) throw std::invalid_argument("point dimension mismatch");
    Vec tp(N);
    for (int p = 1; p <= N; ++p) tp[g.perm[p] - 1] = t[p - 1];
    Vec x = mat_vec(g.map.m, tp);
    for (int i = 0; i < N; ++i) x[i] += instantiate(g.map.v[i], lam);
    return x;
}

namespace {

ClassifyRow classify_one(const ReducedWord& w, std::size_t class_size, const Weight& lam) {
    const int rank = w.rank;
    const int N = rank * (rank + 1) / 2;
    ClassifyRow row;
    row.canonical = w;
    row.class_size = class_size;
    row.path_count = path_count(w);
    Irredundant ir = remove_redundant(make_hpoly(string_polytope_forms(w), lam));
    row.facets = ir.poly.size();
    row.simplicial = row.path_count == N;
    auto sig = gc_type(w);
    row.gc = sig.has_value();
    if (sig) row.sigma = sigma_str(*sig);

    if (row.gc != row.simplicial)
        throw std::logic_error("class " + w.str() + ": cone shape and extension chain disagree");
    if (row.gc != (row.facets == rank * (rank + 1)))
        throw std::logic_error("class " + w.str() + ": facet count disagrees");
    if (row.gc) {
        GcMap g = gc_map(w, lam);
        if (!g.verified)
            throw std::logic_error("class " + w.str() + ": pattern map failed vertex check");
    }
    return row;
}

}  // namespace

std::vector<ClassifyRow> classify(int rank, const Weight& lam, int workers) {
    if (!is_regular(lam)) throw std::invalid_argument("classification needs a regular weight");
    std::vector<ReducedWord> words = enumerate_reduced_words(rank);
    std::set<std::vector<int>> assigned;
    std::vector<std::pair<ReducedWord, std::size_t>> reps;
    for (const auto& w : words) {
        if (assigned.count(w.letters)) continue;
        CommutationClass cc = commutation_class(w);
        for (const auto& m : cc.members) assigned.insert(m.letters);
        reps.emplace_back(cc.canonical, cc.size());
    }

    std::vector<ClassifyRow> rows(reps.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= reps.size()) return;
            try {
                rows[i] = classify_one(reps[i].first, reps[i].second, lam);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::sort(rows.begin(), rows.end(),
              [](const ClassifyRow& a, const ClassifyRow& b) { return a.canonical < b.canonical; });
    return rows;
}

std::string sigma_str(const std::vector<Side>& sigma) {
    std::string s;
    for (Side x : sigma) s += side_char(x);
    return s;
}

std::vector<Side> parse_sigma(const std::string& text) {
    std::vector<Side> out;
    for (char c : text) {
        if (c == 'D' || c == 'd')
            out.push_back(Side::D);
        else if (c == 'A' || c == 'a')
            out.push_back(Side::A);
        else
            throw WordError("sequence letters must be D or A");
    }
    if (out.empty()) throw WordError("empty sequence");
    return out;
}

}  // namespace stringcone
