#include "stringcone/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace stringcone {

std::string ReducedWord::str() const {
    std::ostringstream os;
    for (std::size_t p = 0; p < letters.size(); ++p) {
        if (p) os << ',';
        os << letters[p];
    }
    return os.str();
}

std::vector<int> evaluate(const std::vector<int>& letters, int rank) {
    std::vector<int> perm(rank + 1);
    for (int i = 0; i <= rank; ++i) perm[i] = i + 1;
    for (int c : letters) std::swap(perm[c - 1], perm[c]);
    return perm;
}

ReducedWord make_word(std::vector<int> letters, int rank) {
    if (rank == 0)
        for (int c : letters) rank = std::max(rank, c);
    if (rank <= 0 && !letters.empty()) throw WordError("word has no letters in range");
    for (int c : letters)
        if (c < 1 || c > rank)
            throw WordError("letter " + std::to_string(c) + " out of range [1," +
                            std::to_string(rank) + "]");
    const int N = rank * (rank + 1) / 2;
    if (static_cast<int>(letters.size()) != N)
        throw WordError("expected " + std::to_string(N) + " letters for rank " +
                        std::to_string(rank) + ", got " + std::to_string(letters.size()));
    std::vector<int> perm = evaluate(letters, rank);
    for (int i = 0; i <= rank; ++i)
        if (perm[i] != rank + 1 - i)
            throw WordError("word does not multiply to the longest element");
    return ReducedWord{rank, std::move(letters)};
}

ReducedWord parse_word(const std::string& text, int rank) {
    std::vector<int> letters;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw WordError("bad letter token '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw WordError("bad letter token '" + tok + "'");
        letters.push_back(v);
    }
    if (letters.empty()) throw WordError("empty word");
    return make_word(std::move(letters), rank);
}

std::vector<ReducedWord> enumerate_reduced_words(int rank) {
    const int N = rank * (rank + 1) / 2;
    std::vector<ReducedWord> out;
    std::vector<int> word;
    std::vector<int> perm(rank + 1);
    for (int i = 0; i <= rank; ++i) perm[i] = i + 1;
    // Every maximal ascent-increasing sequence of length N ends at the
    // longest element, so plain DFS over ascents enumerates exactly the
    // reduced words, in lexicographic order.
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == N) {
            out.push_back(ReducedWord{rank, word});
            return;
        }
        for (int c = 1; c <= rank; ++c) {
            if (perm[c - 1] < perm[c]) {
                std::swap(perm[c - 1], perm[c]);
                word.push_back(c);
                self(self);
                word.pop_back();
                std::swap(perm[c - 1], perm[c]);
            }
        }
    };
    dfs(dfs);
    return out;
}

ReducedWord two_move(const ReducedWord& w, int p) {
    if (p < 1 || p + 1 > w.length()) throw MoveError("2-move position out of range");
    int a = w.letters[p - 1], b = w.letters[p];
    if (std::abs(a - b) <= 1) throw MoveError("letters at position " + std::to_string(p) +
                                              " do not commute");
    ReducedWord r = w;
    std::swap(r.letters[p - 1], r.letters[p]);
    return r;
}

ReducedWord three_move(const ReducedWord& w, int p) {
    if (p < 1 || p + 2 > w.length()) throw MoveError("3-move position out of range");
    int a = w.letters[p - 1], b = w.letters[p], c = w.letters[p + 1];
    if (a != c || std::abs(a - b) != 1)
        throw MoveError("no braid pattern at position " + std::to_string(p));
    ReducedWord r = w;
    r.letters[p - 1] = b;
    r.letters[p] = a;
    r.letters[p + 1] = b;
    return r;
}

CommutationClass commutation_class(const ReducedWord& w) {
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> todo;
    seen.insert(w.letters);
    todo.push(w.letters);
    while (!todo.empty()) {
        std::vector<int> cur = std::move(todo.front());
        todo.pop();
        for (int p = 0; p + 1 < static_cast<int>(cur.size()); ++p) {
            if (std::abs(cur[p] - cur[p + 1]) > 1) {
                std::swap(cur[p], cur[p + 1]);
                if (seen.insert(cur).second) todo.push(cur);
                std::swap(cur[p], cur[p + 1]);
            }
        }
    }
    CommutationClass cls;
    cls.members.reserve(seen.size());
    for (const auto& v : seen) cls.members.push_back(ReducedWord{w.rank, v});
    cls.canonical = cls.members.front();
    return cls;
}

ReducedWord canonical_rep(const ReducedWord& w) { return commutation_class(w).canonical; }

bool two_move_equivalent(const ReducedWord& a, const ReducedWord& b) {
    if (a.rank != b.rank || a.letters.size() != b.letters.size()) return false;
    return canonical_rep(a) == canonical_rep(b);
}

ReducedWord mirror(const ReducedWord& w) {
    ReducedWord r = w;
    for (int& c : r.letters) c = w.rank + 1 - c;
    return r;
}

namespace {

// Node ids (1-based) of the crossings on the last wire, indexed by column:
// on_wire[c-1] is the id of its column-c crossing.  Walking the word bottom
// up, the crossing of column c swaps occupants of slots (rank+1-c, rank+2-c).
std::vector<int> last_wire_crossings(const ReducedWord& w) {
    const int n = w.rank;
    std::vector<int> slot(n + 2);  // slot[p] = wire currently at horizontal slot p
    for (int p = 1; p <= n + 1; ++p) slot[p] = p;
    std::vector<int> on_wire(n, 0);
    for (int j = w.length(); j >= 1; --j) {
        int c = w.letters[j - 1];
        int p = n + 1 - c;
        int a = slot[p], b = slot[p + 1];
        if (a == n + 1 || b == n + 1) {
            if (on_wire[c - 1]) throw WordError("duplicate boundary crossing");
            on_wire[c - 1] = j;
        }
        std::swap(slot[p], slot[p + 1]);
    }
    for (int c = 1; c <= n; ++c)
        if (!on_wire[c - 1]) throw WordError("missing boundary crossing");
    return on_wire;
}

struct Entry {
    int letter;
    int orig;  // 1-based node id in the input word
};

// Sorts w by 2-moves into prefix.(n,...,1).suffix, the block being the
// crossings on the last wire.  Every reordering performed here swaps only
// letters differing by at least 2, which is asserted as it happens.
NormalForm normal_form_D(const ReducedWord& w) {
    const int n = w.rank;
    const int N = w.length();
    std::vector<int> on_wire = last_wire_crossings(w);

    std::vector<Entry> list(N);
    for (int j = 1; j <= N; ++j) list[j - 1] = {w.letters[j - 1], j};

    auto index_of = [&](int orig) {
        for (int q = 0; q < N; ++q)
            if (list[q].orig == orig) return q;
        throw std::logic_error("lost node while sorting");
    };

    auto check_commutes = [](const Entry& x, const Entry& y) {
        if (std::abs(x.letter - y.letter) <= 1)
            throw std::logic_error("illegal swap in normal form");
    };

    // Grow the block one crossing at a time: after step k the crossings of
    // columns k+1..1 sit contiguously, in that order.
    for (int k = 1; k < n; ++k) {
        int q = index_of(on_wire[k]);      // column k+1 crossing
        int r = index_of(on_wire[k - 1]);  // head of the current block
        if (q >= r) throw std::logic_error("boundary crossings out of order");
        // Letters strictly between never equal k or k+1; split them into
        // small (< k) and large (> k+1) keeping relative order.
        std::vector<Entry> small, large;
        for (int t = q + 1; t < r; ++t) {
            const Entry& e = list[t];
            if (e.letter == k || e.letter == k + 1)
                throw std::logic_error("blocking letter between boundary crossings");
            if (e.letter < k) {
                check_commutes(e, list[q]);  // will jump the column-(k+1) crossing
                for (const Entry& l : large) check_commutes(e, l);
                small.push_back(e);
            } else {
                for (int b = r; b < r + k; ++b) check_commutes(e, list[b]);  // jumps the block
                large.push_back(e);
            }
        }
        std::vector<Entry> window;
        window.reserve(r + k - q);
        window.insert(window.end(), small.begin(), small.end());
        window.push_back(list[q]);
        for (int b = r; b < r + k; ++b) window.push_back(list[b]);
        window.insert(window.end(), large.begin(), large.end());
        std::copy(window.begin(), window.end(), list.begin() + q);
    }

    NormalForm nf;
    int head = index_of(on_wire[n - 1]);
    nf.position.assign(N + 1, 0);
    for (int q = 0; q < N; ++q) nf.position[list[q].orig] = q + 1;
    for (int q = 0; q < head; ++q) nf.prefix.push_back(list[q].letter);
    for (int q = head + n; q < N; ++q) nf.suffix.push_back(list[q].letter);
    for (int q = head; q < head + n; ++q) nf.block_nodes.push_back(list[q].orig);
    return nf;
}

}  // namespace

NormalForm normal_form(const ReducedWord& w, Side side) {
    if (w.rank < 1) throw WordError("normal form needs rank >= 1");
    if (side == Side::D) return normal_form_D(w);
    NormalForm nf = normal_form_D(mirror(w));
    for (int& c : nf.prefix) c = w.rank + 1 - c;
    for (int& c : nf.suffix) c = w.rank + 1 - c;
    return nf;
}

int ind(const ReducedWord& w, Side side) {
    return static_cast<int>(normal_form(w, side).suffix.size());
}

Indices indices(const ReducedWord& w) {
    NormalForm d = normal_form(w, Side::D), a = normal_form(w, Side::A);
    return Indices{static_cast<int>(d.suffix.size()), static_cast<int>(d.prefix.size()),
                   static_cast<int>(a.suffix.size()), static_cast<int>(a.prefix.size())};
}

Contraction contract(const ReducedWord& w, Side side) {
    if (w.rank < 1) throw WordError("cannot contract rank 0");
    NormalForm nf = normal_form(w, side);
    const int n = w.rank;
    const int head = static_cast<int>(nf.prefix.size());
    std::vector<int> letters = nf.prefix;
    letters.insert(letters.end(), nf.suffix.begin(), nf.suffix.end());
    // Deleting the boundary wire shifts the columns on one side of it.
    if (side == Side::D) {
        for (std::size_t q = head; q < letters.size(); ++q) --letters[q];
    } else {
        for (int q = 0; q < head; ++q) --letters[q];
    }
    Contraction c;
    c.word = n == 1 ? ReducedWord{0, {}} : make_word(std::move(letters), n - 1);
    c.ind = static_cast<int>(nf.suffix.size());
    c.node_map.assign(w.length() + 1, 0);
    for (int j = 1; j <= w.length(); ++j) {
        int p = nf.position[j];
        if (p <= head)
            c.node_map[j] = p;
        else if (p > head + n)
            c.node_map[j] = p - n;
    }
    return c;
}

ReducedWord extend(const ReducedWord& w, Side side, int s) {
    const int N = w.length();
    if (s < 0 || s > N) throw WordError("extension index out of range [0," +
                                        std::to_string(N) + "]");
    const int m = w.rank + 1;
    std::vector<int> letters;
    letters.reserve(N + m);
    if (side == Side::D) {
        for (int q = 0; q < N - s; ++q) letters.push_back(w.letters[q]);
        for (int c = m; c >= 1; --c) letters.push_back(c);
        for (int q = N - s; q < N; ++q) letters.push_back(w.letters[q] + 1);
    } else {
        for (int q = 0; q < N - s; ++q) letters.push_back(w.letters[q] + 1);
        for (int c = 1; c <= m; ++c) letters.push_back(c);
        for (int q = N - s; q < N; ++q) letters.push_back(w.letters[q]);
    }
    return make_word(std::move(letters), m);
}

namespace {

bool gc_search(const ReducedWord& w, std::vector<Side>& sigma,
               std::set<std::vector<int>>& dead) {
    const int n = w.rank;
    if (n <= 1) {
        if (n == 1) sigma[0] = Side::D;
        return true;
    }
    ReducedWord canon = canonical_rep(w);
    if (dead.count(canon.letters)) return false;
    for (Side s : {Side::D, Side::A}) {
        Contraction c = contract(w, s);
        if (c.ind != 0) continue;
        sigma[n - 1] = s;
        if (gc_search(c.word, sigma, dead)) return true;
    }
    dead.insert(canon.letters);
    return false;
}

}  // namespace

std::optional<std::vector<Side>> gc_type(const ReducedWord& w) {
    if (w.rank < 1) throw WordError("gc_type needs rank >= 1");
    std::vector<Side> sigma(w.rank, Side::D);
    std::set<std::vector<int>> dead;
    if (gc_search(w, sigma, dead)) return sigma;
    return std::nullopt;
}

}  // namespace stringcone
