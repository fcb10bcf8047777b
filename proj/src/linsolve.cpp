#include "appell/linsolve.hpp"

namespace appell {

namespace {

// Rational gcd: gcd of numerators over lcm of denominators.
Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Int g, l;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return rat_of(g, l);
}

// Divide out the common polynomial factor and rational content of a row.
void strip_row(std::vector<UniPoly>& row) {
    UniPoly g;
    Rat cont(0);
    for (const auto& p : row) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : UniPoly::gcd(g, p);
        cont = rat_gcd(cont, p.content());
    }
    if (g.is_zero()) return;
    bool poly_divide = g.degree() > 0;
    for (auto& p : row) {
        if (poly_divide && !p.is_zero()) {
            UniPoly q, r;
            UniPoly::divrem(p, g, q, r);
            p = q;
        }
        p = p.scaled(Rat(1) / cont);
    }
}

}  // namespace

std::vector<UniPoly> clear_row(const std::vector<RatFunc>& row) {
    UniPoly common = UniPoly::one();
    for (const auto& f : row)
        if (!f.is_zero()) {
            UniPoly g = UniPoly::gcd(common, f.den());
            UniPoly q, r;
            UniPoly::divrem(f.den(), g, q, r);
            common = common * q;
        }
    std::vector<UniPoly> out;
    out.reserve(row.size());
    for (const auto& f : row) {
        if (f.is_zero()) {
            out.emplace_back();
            continue;
        }
        UniPoly q, r;
        UniPoly::divrem(common, f.den(), q, r);
        out.push_back(f.num() * q);
    }
    strip_row(out);
    return out;
}

std::vector<std::vector<UniPoly>> kernel_modulo(const std::vector<std::vector<RatFunc>>& tagged,
                                                const std::vector<std::vector<RatFunc>>& gens) {
    const size_t ncols = tagged.empty() ? (gens.empty() ? 0 : gens[0].size()) : tagged[0].size();
    const size_t ntag = tagged.size();
    const size_t width = ncols + ntag;

    std::vector<std::vector<UniPoly>> rows;
    rows.reserve(gens.size() + ntag);
    for (const auto& g : gens) {
        auto r = clear_row(g);
        r.resize(width);
        rows.push_back(std::move(r));
    }
    for (size_t i = 0; i < ntag; ++i) {
        // Tag before clearing so scalings stay consistent with the tag.
        std::vector<RatFunc> r = tagged[i];
        r.resize(width);
        r[ncols + i] = RatFunc(Rat(1));
        rows.push_back(clear_row(r));
    }

    std::vector<bool> used(rows.size(), false);
    for (size_t col = 0; col < ncols; ++col) {
        // Pivot: unused row with nonzero entry of minimal degree in this column.
        size_t piv = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][col].is_zero()) continue;
            if (piv == rows.size() || rows[i][col].degree() < rows[piv][col].degree()) piv = i;
        }
        if (piv == rows.size()) continue;
        used[piv] = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][col].is_zero()) continue;
            UniPoly f = rows[i][col], p = rows[piv][col];
            for (size_t j = 0; j < width; ++j) rows[i][j] = rows[i][j] * p - rows[piv][j] * f;
            strip_row(rows[i]);
        }
    }

    // Unused rows now have zero main part; nonzero tag regions span the kernel.
    std::vector<std::vector<UniPoly>> kernel;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (used[i]) continue;
        bool tag_nonzero = false;
        for (size_t j = ncols; j < width; ++j)
            if (!rows[i][j].is_zero()) tag_nonzero = true;
        if (!tag_nonzero) continue;
        kernel.emplace_back(rows[i].begin() + ncols, rows[i].end());
    }

    // Echelonize tags from the highest index down so leading indices are
    // distinct and as small as possible.
    auto top_index = [&](const std::vector<UniPoly>& v) -> int {
        for (int j = (int)v.size() - 1; j >= 0; --j)
            if (!v[j].is_zero()) return j;
        return -1;
    };
    std::vector<std::vector<UniPoly>> echelon;
    for (auto vec : kernel) {
        for (;;) {
            int t = top_index(vec);
            if (t < 0) break;
            auto it = std::find_if(echelon.begin(), echelon.end(),
                                   [&](const auto& e) { return top_index(e) == t; });
            if (it == echelon.end()) {
                strip_row(vec);
                echelon.push_back(std::move(vec));
                break;
            }
            const auto& e = *it;
            UniPoly f = vec[t], p = e[t];
            for (size_t j = 0; j < vec.size(); ++j) vec[j] = vec[j] * p - e[j] * f;
        }
    }
    std::sort(echelon.begin(), echelon.end(),
              [&](const auto& a, const auto& b) { return top_index(a) < top_index(b); });
    return echelon;
}

}  // namespace appell
