#include "hadlab/symbolic.hpp"

#include <stdexcept>

namespace hadlab {

SymbolicMatrix SymbolicMatrix::from_strings(
    const std::vector<std::vector<std::string>>& entries) {
    if (entries.empty() || entries[0].empty())
        throw std::invalid_argument("symbolic matrix needs at least one entry");
    SymbolicMatrix m;
    m.entries_.reserve(entries.size());
    for (const auto& row : entries) {
        if (row.size() != entries[0].size())
            throw std::invalid_argument("ragged symbolic matrix");
        std::vector<LaurentPoly> parsed;
        parsed.reserve(row.size());
        for (const auto& text : row) {
            LaurentPoly p = LaurentPoly::parse(text);
            if (!p.is_monomial())
                throw std::invalid_argument("symbolic entries must be one-term monomials: " +
                                            text);
            parsed.push_back(std::move(p));
        }
        m.entries_.push_back(std::move(parsed));
    }
    return m;
}

SymbolicMatrix SymbolicMatrix::transposed() const {
    SymbolicMatrix t;
    t.entries_.assign(static_cast<std::size_t>(cols()),
                      std::vector<LaurentPoly>(static_cast<std::size_t>(rows())));
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c)
            t.entries_[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] =
                entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return t;
}

const LaurentPoly& SymbolicMatrix::entry(int r, int c) const {
    if (r < 0 || r >= rows() || c < 0 || c >= cols())
        throw std::out_of_range("symbolic matrix index");
    return entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

LaurentPoly SymbolicMatrix::entry_inverse(int r, int c) const { return entry(r, c).pow(-1); }

LaurentPoly build_ort(const SymbolicMatrix& s, int x, int y) {
    LaurentPoly acc;
    for (int v = 0; v < s.cols(); ++v) {
        LaurentPoly term = s.entry(x, v);
        for (int u = 0; u < s.cols(); ++u)
            if (u != v) term = term * s.entry(y, u);
        acc = acc + term;
    }
    return acc;
}

LaurentPoly build_cancel(const SymbolicMatrix& s, int x, int y) {
    LaurentPoly acc(Rational(1));
    for (int q = 1; q < s.cols(); ++q)
        acc = acc * (s.entry(x, 0) * s.entry(y, q) + s.entry(x, q) * s.entry(y, 0));
    return acc;
}

HaagerupPolys build_haagerup(const SymbolicMatrix& s, const std::array<int, 3>& rows,
                             const std::array<int, 4>& cols) {
    auto partial = [&](int x, int y) {
        LaurentPoly acc;
        for (int v : cols) acc = acc + s.entry(x, v) * s.entry_inverse(y, v);
        return acc;
    };
    const int i = rows[0], j = rows[1], k = rows[2];
    const LaurentPoly ij = partial(i, j), ji = partial(j, i);
    const LaurentPoly jk = partial(j, k), kj = partial(k, j);
    const LaurentPoly ki = partial(k, i), ik = partial(i, k);
    HaagerupPolys out;
    out.bracket = ij * jk * ki - LaurentPoly(Rational(4)) + ij * ji + jk * kj + ki * ik;
    LaurentPoly prod(Rational(1));
    for (int r : rows)
        for (int c : cols) prod = prod * s.entry(r, c);
    out.full = out.bracket * prod;
    return out;
}

} // namespace hadlab
