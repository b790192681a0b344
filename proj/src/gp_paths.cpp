#include "stringcone/gp_paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stringcone {

std::string RigorousPath::node_expr() const {
    std::ostringstream os;
    os << 'L' << level;
    for (int j : switches) os << " -> t" << j;
    os << " -> L" << level + 1;
    return os.str();
}

std::string RigorousPath::wire_expr() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < wire_seq.size(); ++i) {
        if (i) os << " -> ";
        os << 'l' << wire_seq[i];
    }
    return os.str();
}

namespace {

std::vector<int> coeffs_of(const std::vector<int>& switches,
                           const std::vector<std::array<int, 2>>& wires, int N) {
    std::vector<int> c(N, 0);
    for (std::size_t i = 0; i < switches.size(); ++i)
        c[switches[i] - 1] = wires[i][0] < wires[i][1] ? 1 : -1;
    return c;
}

struct PathSearch {
    const WiringDiagram& d;
    int level;
    std::vector<char> visited;
    std::vector<int> trail, switches;
    std::vector<std::array<int, 2>> switch_wires;
    std::vector<RigorousPath>* out;

    bool up(int m) const { return m <= level; }

    void explore(int m, int q) {
        const auto& it = d.itinerary[m - 1];
        if (q < 0 || q >= static_cast<int>(it.size())) {
            if (q < 0 && m == level + 1) {
                RigorousPath p;
                p.level = level;
                p.switches = switches;
                p.switch_wires = switch_wires;
                p.visited = trail;
                p.coeffs = coeffs_of(switches, switch_wires, d.size());
                p.wire_seq.push_back(level);
                for (const auto& sw : switch_wires) p.wire_seq.push_back(sw[1]);
                out->push_back(std::move(p));
            }
            return;
        }
        int j = it[q];
        if (visited[j]) return;  // a path may pass each node only once
        visited[j] = 1;
        trail.push_back(j);
        int m2 = d.other_wire(j, m);
        switches.push_back(j);
        switch_wires.push_back({m, m2});
        int q2 = d.itinerary_pos(m2, j) + (up(m2) ? 1 : -1);
        explore(m2, q2);
        switches.pop_back();
        switch_wires.pop_back();
        // Riding straight over a same-oriented wire is legal only from the
        // lower-indexed wire when both run down, and from the higher-indexed
        // one when both run up.
        if (!(up(m) == up(m2) && (up(m) ? m < m2 : m > m2)))
            explore(m, q + (up(m) ? 1 : -1));
        trail.pop_back();
        visited[j] = 0;
    }
};

}  // namespace

std::vector<RigorousPath> enumerate_paths(const WiringDiagram& d, int level) {
    if (level < 1 || level > d.rank) throw std::invalid_argument("level out of range");
    std::vector<RigorousPath> out;
    PathSearch s{d, level, std::vector<char>(d.size() + 1, 0), {}, {}, {}, &out};
    s.explore(level, 0);
    std::sort(out.begin(), out.end(), [](const RigorousPath& a, const RigorousPath& b) {
        return a.switches < b.switches;
    });
    return out;
}

int path_count(const WiringDiagram& d) {
    int total = 0;
    for (int k = 1; k <= d.rank; ++k) total += static_cast<int>(enumerate_paths(d, k).size());
    return total;
}

int path_count(const ReducedWord& w) { return path_count(build_diagram(w)); }

bool is_rigorous(const RigorousPath& p, const WiringDiagram& d) {
    if (p.level < 1 || p.level > d.rank) return false;
    auto up = [&](int m) { return m <= p.level; };
    std::vector<char> seen(d.size() + 1, 0);
    int m = p.level, q = 0;
    if (!up(m)) return false;
    std::size_t next = 0;
    while (true) {
        const auto& it = d.itinerary[m - 1];
        if (q < 0 || q >= static_cast<int>(it.size()))
            return q < 0 && m == p.level + 1 && next == p.switches.size();
        int j = it[q];
        if (seen[j]) return false;
        seen[j] = 1;
        if (next < p.switches.size() && p.switches[next] == j) {
            int m2 = d.other_wire(j, m);
            if (p.switch_wires[next][0] != m || p.switch_wires[next][1] != m2) return false;
            q = d.itinerary_pos(m2, j) + (up(m2) ? 1 : -1);
            m = m2;
            ++next;
        } else {
            int m2 = d.other_wire(j, m);
            if (up(m) == up(m2) && (up(m) ? m < m2 : m > m2)) return false;
            q += up(m) ? 1 : -1;
        }
    }
}

namespace {

// One traveled stretch of wire, from node `enter` to node `exit` (0 marks the
// bottom endpoint; first-half stretches run upward, second-half downward).
struct Seg {
    int wire, enter, exit;
};

struct CanonicalBuilder {
    const WiringDiagram& d;
    int W;  // boundary wire (the last one)

    int pos(int m, int j) const { return d.itinerary_pos(m, j); }

    // Is node t strictly inside the traveled stretch?
    bool inside(const Seg& s, int t, bool upward) const {
        int pt = pos(s.wire, t);
        int pe = s.enter ? pos(s.wire, s.enter) : (upward ? -1 : d.size() + 1);
        int px = s.exit ? pos(s.wire, s.exit) : (upward ? d.size() + 1 : -1);
        return upward ? (pe < pt && pt < px) : (px < pt && pt < pe);
    }

    // Smallest wire above r_last crossing the chain before its own meeting
    // with the boundary wire.  Returns {wire, crossing node, segment index}.
    struct Hit {
        int wire = 0, node = 0, seg = -1;
    };
    Hit next_reroute(const std::vector<Seg>& chain, int r_last, bool upward) const {
        for (int r = r_last + 1; r < W; ++r) {
            Hit best;
            int prW = pos(r, d.crossing(r, W));
            for (std::size_t si = 0; si < chain.size(); ++si) {
                const Seg& s = chain[si];
                if (s.wire == r || s.wire == W) continue;
                int t = d.crossing(r, s.wire);
                if (!inside(s, t, upward)) continue;
                if (pos(r, t) >= prW) continue;  // not before meeting the boundary
                // First crossing along r's travel: upward = lowest, downward = highest.
                if (best.wire == 0 || (upward ? pos(r, t) < pos(r, best.node)
                                              : pos(r, t) > pos(r, best.node))) {
                    best = {r, t, static_cast<int>(si)};
                }
            }
            if (best.wire) return best;
        }
        return {};
    }
};

RigorousPath canonical_path_D(const WiringDiagram& d, int k) {
    const int W = d.wires();
    CanonicalBuilder cb{d, W};
    const int peak = d.crossing(k, W);

    // First half: ride up to the peak, greedily rerouting the start to ever
    // higher wires that cut across the chain.
    std::vector<Seg> first{{k, 0, peak}};
    int r_last = k;
    while (true) {
        auto hit = cb.next_reroute(first, r_last, /*upward=*/true);
        if (!hit.wire) break;
        std::vector<Seg> next{{hit.wire, 0, hit.node},
                              {first[hit.seg].wire, hit.node, first[hit.seg].exit}};
        next.insert(next.end(), first.begin() + hit.seg + 1, first.end());
        first = std::move(next);
        r_last = hit.wire;
    }

    // Second half: down the boundary wire, exiting on wire r_last + 1, with
    // the mirrored rerouting.
    std::vector<Seg> second;
    if (r_last == W - 1) {
        second = {{W, peak, 0}};
    } else {
        int s1 = r_last + 1;
        int c = d.crossing(W, s1);
        if (cb.pos(W, c) >= cb.pos(W, peak))
            throw std::logic_error("exit crossing above the peak");
        second = {{W, peak, c}, {s1, c, 0}};
        while (true) {
            auto hit = cb.next_reroute(second, s1, /*upward=*/false);
            if (!hit.wire) break;
            int cw = d.crossing(W, hit.wire);
            if (cb.pos(W, cw) >= cb.pos(W, peak))
                throw std::logic_error("reroute crossing above the peak");
            std::vector<Seg> next{{W, peak, cw},
                                  {hit.wire, cw, hit.node},
                                  {second[hit.seg].wire, hit.node, second[hit.seg].exit}};
            next.insert(next.end(), second.begin() + hit.seg + 1, second.end());
            second = std::move(next);
            s1 = hit.wire;
        }
    }

    RigorousPath p;
    p.level = r_last;
    std::vector<Seg> chain = first;
    chain.insert(chain.end(), second.begin(), second.end());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        p.wire_seq.push_back(chain[i].wire);
        if (chain[i].exit) {
            p.switches.push_back(chain[i].exit);
            int to = i + 1 < chain.size() ? chain[i + 1].wire
                                          : d.other_wire(chain[i].exit, chain[i].wire);
            p.switch_wires.push_back({chain[i].wire, to});
        }
    }
    // Collect every node passed, in traversal order.
    bool upward = true;
    for (const Seg& s : chain) {
        if (s.wire == W) upward = false;
        const auto& it = d.itinerary[s.wire - 1];
        int from = s.enter ? cb.pos(s.wire, s.enter) : (upward ? -1 : (int)it.size());
        int to = s.exit ? cb.pos(s.wire, s.exit) : (upward ? (int)it.size() : -1);
        if (upward)
            for (int q = from + 1; q <= to && q < (int)it.size(); ++q) p.visited.push_back(it[q]);
        else
            for (int q = from - 1; q >= to && q >= 0; --q) p.visited.push_back(it[q]);
    }
    p.coeffs = coeffs_of(p.switches, p.switch_wires, d.size());
    if (!is_rigorous(p, d)) throw std::logic_error("canonical path fails rigor check");
    return p;
}

}  // namespace

RigorousPath canonical_path(const WiringDiagram& d, Side side, int k) {
    if (k < 1 || k > d.rank) throw std::invalid_argument("crossing index out of range");
    if (side == Side::D) return canonical_path_D(d, k);
    // Mirror the diagram left-right, build the D path through the crossing of
    // the (mirrored) boundary with wire rank+1-k, then reverse the walk.
    ReducedWord w = make_word(d.columns, d.rank);
    WiringDiagram md = build_diagram(mirror(w));
    RigorousPath q = canonical_path_D(md, d.rank + 1 - k);
    auto flip = [&](int m) { return d.rank + 2 - m; };
    RigorousPath p;
    p.level = d.rank + 1 - q.level;
    p.switches.assign(q.switches.rbegin(), q.switches.rend());
    for (auto it = q.switch_wires.rbegin(); it != q.switch_wires.rend(); ++it)
        p.switch_wires.push_back({flip((*it)[1]), flip((*it)[0])});
    for (auto it = q.wire_seq.rbegin(); it != q.wire_seq.rend(); ++it)
        p.wire_seq.push_back(flip(*it));
    p.visited.assign(q.visited.rbegin(), q.visited.rend());
    p.coeffs = coeffs_of(p.switches, p.switch_wires, d.size());
    if (!is_rigorous(p, d)) throw std::logic_error("canonical path fails rigor check");
    return p;
}

bool is_new(const RigorousPath& p, const WiringDiagram& d, Side side) {
    int boundary = side == Side::D ? d.wires() : 1;
    for (int j : p.switches)
        if (d.on_wire(j, boundary)) return true;
    return false;
}

}  // namespace stringcone
