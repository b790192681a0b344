#include "stringcone/inequalities.hpp"

#include <sstream>

namespace stringcone {

LinearForm zero_form(int dim, int rank) {
    return LinearForm{Vec(dim, Rat(0)), AffineConst{Rat(0), Vec(rank, Rat(0))}};
}

namespace {

void append_term(std::ostringstream& os, bool& lead, const Rat& c, const std::string& sym) {
    if (c == 0) return;
    if (c > 0 && !lead) os << " + ";
    if (c < 0) os << (lead ? "-" : " - ");
    Rat a = abs(c);
    if (a != 1 || sym.empty()) os << rat_str(a) << (sym.empty() ? "" : "*");
    os << sym;
    lead = false;
}

}  // namespace

std::string LinearForm::str(const std::string& var) const {
    std::ostringstream os;
    bool lead = true;
    for (std::size_t p = 0; p < coeffs.size(); ++p)
        append_term(os, lead, coeffs[p], var + std::to_string(p + 1));
    for (std::size_t i = 0; i < cst.lambda.size(); ++i)
        append_term(os, lead, cst.lambda[i], "L" + std::to_string(i + 1));
    if (cst.one != 0 || lead) {
        if (cst.one >= 0 && !lead) os << " + ";
        if (cst.one < 0) os << (lead ? "-" : " - ");
        os << rat_str(abs(cst.one));
    }
    return os.str();
}

Weight parse_weight(const std::string& text) {
    Weight w;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw WordError("bad weight token '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw WordError("bad weight token '" + tok + "'");
        if (v < 0) throw WordError("weight entries must be nonnegative");
        w.entries.push_back(v);
    }
    if (w.entries.empty()) throw WordError("empty weight");
    return w;
}

bool is_regular(const Weight& w) {
    for (int v : w.entries)
        if (v <= 0) return false;
    return true;
}

Rat instantiate(const AffineConst& c, const Weight& lam) {
    if (static_cast<int>(c.lambda.size()) != lam.rank())
        throw WordError("weight rank mismatch");
    Rat r = c.one;
    for (int i = 0; i < lam.rank(); ++i) r += c.lambda[i] * lam.entries[i];
    return r;
}

std::vector<LinearForm> string_cone(const ReducedWord& w) {
    WiringDiagram d = build_diagram(w);
    std::vector<LinearForm> forms;
    for (int k = 1; k <= w.rank; ++k) {
        for (const RigorousPath& p : enumerate_paths(d, k)) {
            LinearForm f = zero_form(w.length(), w.rank);
            for (int j = 1; j <= w.length(); ++j) f.coeffs[j - 1] = p.coeffs[j - 1];
            forms.push_back(std::move(f));
        }
    }
    return forms;
}

std::vector<LinearForm> lambda_cone(const ReducedWord& w) {
    std::vector<LinearForm> forms;
    for (int j = 1; j <= w.length(); ++j) {
        LinearForm f = zero_form(w.length(), w.rank);
        f.coeffs[j - 1] = -1;
        for (int k = j + 1; k <= w.length(); ++k)
            f.coeffs[k - 1] = column_coupling(w.letters[j - 1], w.letters[k - 1]);
        f.cst.lambda[w.letters[j - 1] - 1] = 1;
        forms.push_back(std::move(f));
    }
    return forms;
}

std::vector<LinearForm> string_polytope_forms(const ReducedWord& w) {
    std::vector<LinearForm> forms = string_cone(w);
    std::vector<LinearForm> upper = lambda_cone(w);
    forms.insert(forms.end(), upper.begin(), upper.end());
    return forms;
}

LinearForm to_chamber_coordinates(const LinearForm& f, const ChamberBasis& basis) {
    const std::size_t N = f.coeffs.size();
    if (basis.inverse.size() != N) throw WordError("basis dimension mismatch");
    LinearForm g = f;
    for (std::size_t q = 0; q < N; ++q) {
        Rat s = 0;
        for (std::size_t p = 0; p < N; ++p)
            if (f.coeffs[p] != 0) s += f.coeffs[p] * basis.inverse[p][q];
        g.coeffs[q] = s;
    }
    return g;
}

std::vector<Side> extension_layout(const ReducedWord& w) {
    std::vector<int> letters = w.letters;
    std::vector<Side> sigma(w.rank, Side::D);
    for (int k = w.rank; k >= 2; --k) {
        const int base = k * (k - 1) / 2;
        bool isD = true, isA = true;
        for (int j = 1; j <= k; ++j) {
            if (letters[base + j - 1] != k + 1 - j) isD = false;
            if (letters[base + j - 1] != j) isA = false;
        }
        if (isD) {
            sigma[k - 1] = Side::D;
        } else if (isA) {
            sigma[k - 1] = Side::A;
            for (int q = 0; q < base; ++q) {
                if (--letters[q] < 1) throw WordError("word is not extension-built");
            }
        } else {
            throw WordError("word is not extension-built");
        }
        letters.resize(base);
    }
    if (!letters.empty() && letters[0] != 1) throw WordError("word is not extension-built");
    return sigma;
}

LinearForm lambda_functional(const ReducedWord& w, int k, int j) {
    extension_layout(w);  // layout check; throws otherwise
    if (k < 1 || k > w.rank || j < 1 || j > k)
        throw WordError("block position out of range");
    const int node = k * (k - 1) / 2 + j;
    LinearForm f = lambda_cone(w)[node - 1];
    f.cst = AffineConst{Rat(0), Vec(w.rank, Rat(0))};
    return f;
}

}  // namespace stringcone
