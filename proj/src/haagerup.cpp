#include "hadlab/haagerup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hadlab {

namespace {

struct Grid {
    const CHMatrix& m;
    bool transposed;

    std::complex<double> at(int r, int c) const {
        return transposed ? m.value(c, r) : m.value(r, c);
    }
    int grid_rows() const { return transposed ? m.cols() : m.rows(); }
    int grid_cols() const { return transposed ? m.rows() : m.cols(); }
};

void check_selection(const Grid& g, const std::array<int, 3>& rows,
                     const std::array<int, 4>& cols) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (rows[i] == rows[j]) throw std::invalid_argument("bracket rows must be distinct");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (cols[i] == cols[j])
                throw std::invalid_argument("bracket columns must be distinct");
    for (int r : rows)
        if (r < 0 || r >= g.grid_rows()) throw std::out_of_range("bracket row out of range");
    for (int c : cols)
        if (c < 0 || c >= g.grid_cols()) throw std::out_of_range("bracket column out of range");
}

std::complex<double> bracket_impl(const Grid& g, const std::array<int, 3>& rows,
                                  const std::array<int, 4>& cols) {
    auto partial = [&](int x, int y) {
        std::complex<double> s = 0.0;
        for (int v : cols) s += g.at(x, v) * std::conj(g.at(y, v));
        return s;
    };
    const int i = rows[0], j = rows[1], k = rows[2];
    const std::complex<double> ij = partial(i, j), ji = partial(j, i);
    const std::complex<double> jk = partial(j, k), kj = partial(k, j);
    const std::complex<double> ki = partial(k, i), ik = partial(i, k);
    return ij * jk * ki - 4.0 + ij * ji + jk * kj + ki * ik;
}

} // namespace

std::complex<double> haagerup_bracket(const CHMatrix& m, const std::array<int, 3>& rows,
                                      const std::array<int, 4>& cols, bool transposed) {
    const Grid g{m, transposed};
    check_selection(g, rows, cols);
    return bracket_impl(g, rows, cols);
}

std::complex<double> haagerup_full(const CHMatrix& m, const std::array<int, 3>& rows,
                                   const std::array<int, 4>& cols, bool transposed) {
    const Grid g{m, transposed};
    check_selection(g, rows, cols);
    std::complex<double> prod = 1.0;
    for (int r : rows)
        for (int c : cols) prod *= g.at(r, c);
    return bracket_impl(g, rows, cols) * prod;
}

ScanReport haagerup_scan(const CHMatrix& m) {
    if (m.rows() != 6 || m.cols() != 6)
        throw std::invalid_argument("haagerup_scan requires a 6x6 matrix");
    ScanReport rep;
    for (int ori = 0; ori < 2; ++ori) {
        const Grid g{m, ori == 1};
        for (int r0 = 0; r0 < 6; ++r0)
            for (int r1 = r0 + 1; r1 < 6; ++r1)
                for (int r2 = r1 + 1; r2 < 6; ++r2)
                    for (int c0 = 0; c0 < 6; ++c0)
                        for (int c1 = c0 + 1; c1 < 6; ++c1)
                            for (int c2 = c1 + 1; c2 < 6; ++c2)
                                for (int c3 = c2 + 1; c3 < 6; ++c3) {
                                    const std::array<int, 3> rows{r0, r1, r2};
                                    const std::array<int, 4> cols{c0, c1, c2, c3};
                                    const double v = std::abs(bracket_impl(g, rows, cols));
                                    if (v > rep.max_abs) {
                                        rep.max_abs = v;
                                        rep.argmax = {rows, cols, ori == 1};
                                    }
                                }
    }
    return rep;
}

std::vector<std::complex<double>> haagerup_fingerprint(const CHMatrix& m) {
    auto snap = [](double v) { return std::round(v * 1e8) / 1e8; };
    std::vector<std::complex<double>> vals;
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.rows(); ++k) {
            if (k == i) continue;
            for (int j = 0; j < m.cols(); ++j)
                for (int l = 0; l < m.cols(); ++l) {
                    if (l == j) continue;
                    const std::complex<double> v = m.value(i, j) * m.value(k, l) *
                                                   std::conj(m.value(i, l)) *
                                                   std::conj(m.value(k, j));
                    vals.emplace_back(snap(v.real()), snap(v.imag()));
                }
        }
    auto lt = [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    std::sort(vals.begin(), vals.end(), lt);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

} // namespace hadlab
