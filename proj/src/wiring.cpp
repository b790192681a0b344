#include "stringcone/wiring.hpp"

#include <stdexcept>

#include "stringcone/linalg.hpp"

namespace stringcone {

WiringDiagram build_diagram(const ReducedWord& w) {
    const int n = w.rank;
    const int N = w.length();
    WiringDiagram d;
    d.rank = n;
    d.columns = w.letters;
    d.pairs.resize(N);
    d.itinerary.assign(n + 1, {});
    d.cross.assign(n + 2, std::vector<int>(n + 2, 0));

    std::vector<int> slot(n + 2);
    for (int p = 1; p <= n + 1; ++p) slot[p] = p;
    for (int j = N; j >= 1; --j) {
        int c = d.columns[j - 1];
        int p = n + 1 - c;
        int a = slot[p], b = slot[p + 1];
        d.pairs[j - 1] = {a, b};
        if (d.cross[a][b]) throw WordError("wires cross twice");
        d.cross[a][b] = d.cross[b][a] = j;
        d.itinerary[a - 1].push_back(j);
        d.itinerary[b - 1].push_back(j);
        std::swap(slot[p], slot[p + 1]);
    }
    for (int p = 1; p <= n + 1; ++p)
        if (slot[p] != n + 2 - p) throw WordError("word does not reverse the wires");
    return d;
}

int WiringDiagram::itinerary_pos(int m, int j) const {
    const auto& it = itinerary[m - 1];
    for (int q = 0; q < static_cast<int>(it.size()); ++q)
        if (it[q] == j) return q;
    throw std::invalid_argument("node not on wire");
}

std::vector<int> nodes_below_wire(const WiringDiagram& d, int wire) {
    if (wire != 1 && wire != d.wires())
        throw std::invalid_argument("only boundary wires bound a region");
    std::vector<int> out;
    for (int j = 1; j <= d.size(); ++j) {
        auto [a, b] = d.pairs[j - 1];
        if (a == wire || b == wire) continue;
        if (d.crossing(a, wire) < j && d.crossing(b, wire) < j) out.push_back(j);
    }
    return out;
}

ChamberBasis chamber_basis(const ReducedWord& w) {
    const int N = w.length();
    // U_j = t_j - sum_{k>j} a_k t_k undoes the column coupling; differencing
    // consecutive nodes of one column makes the rows telescope.
    Mat upper(N, Vec(N, Rat(0)));
    for (int j = 1; j <= N; ++j) {
        upper[j - 1][j - 1] = 1;
        for (int k = j + 1; k <= N; ++k)
            upper[j - 1][k - 1] = -column_coupling(w.letters[j - 1], w.letters[k - 1]);
    }
    ChamberBasis basis;
    basis.forward.assign(N, Vec(N, Rat(0)));
    for (int j = 1; j <= N; ++j) {
        basis.forward[j - 1] = upper[j - 1];
        for (int k = j + 1; k <= N; ++k) {
            if (w.letters[k - 1] == w.letters[j - 1]) {
                for (int q = 0; q < N; ++q) basis.forward[j - 1][q] -= upper[k - 1][q];
                break;
            }
        }
    }
    basis.inverse = inverse(basis.forward);
    for (const Vec& row : basis.inverse)
        for (const Rat& x : row)
            if (!is_integer(x)) throw std::logic_error("chamber basis not unimodular");
    return basis;
}

}  // namespace stringcone
