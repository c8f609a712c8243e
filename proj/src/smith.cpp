#include "fsh/smith.hpp"

#include <stdexcept>

namespace fsh {

std::vector<Int> SmithForm::diagonal() const {
    int n = std::min(s.rows(), s.cols());
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = s.at(i, i);
    return d;
}

namespace {

// Finds the entry of smallest nonzero |value| in s[t.., t..]; ties go to the
// lowest row, then the lowest column. Returns false if the submatrix is zero.
bool find_pivot(const IntMatrix& s, int t, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int r = t; r < s.rows(); ++r)
        for (int c = t; c < s.cols(); ++c) {
            const Int& x = s.at(r, c);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pr = r;
                pc = c;
            }
        }
    return found;
}

// Core reduction; when track is false, u and v are ignored.
void reduce(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
    const int m = s.rows(), n = s.cols();
    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        int pr, pc;
        if (!find_pivot(s, t, pr, pc)) break;
        for (;;) {
            s.swap_rows(t, pr);
            if (u) u->swap_rows(t, pr);
            s.swap_cols(t, pc);
            if (v) v->swap_cols(t, pc);

            // Clear column t below the pivot by euclidean steps.
            bool dirty = false;
            for (int r = t + 1; r < m; ++r) {
                if (s.at(r, t) == 0) continue;
                Int q = s.at(r, t) / s.at(t, t);
                s.add_row_multiple(r, t, -q);
                if (u) u->add_row_multiple(r, t, -q);
                if (s.at(r, t) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(s, t, pr, pc);
                continue;
            }
            for (int c = t + 1; c < n; ++c) {
                if (s.at(t, c) == 0) continue;
                Int q = s.at(t, c) / s.at(t, t);
                s.add_col_multiple(c, t, -q);
                if (v) v->add_col_multiple(c, t, -q);
                if (s.at(t, c) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(s, t, pr, pc);
                continue;
            }
            // Pivot must divide the whole remaining submatrix; if not, pull
            // the offending row up and keep reducing.
            bool divides = true;
            for (int r = t + 1; r < m && divides; ++r)
                for (int c = t + 1; c < n; ++c)
                    if (s.at(r, c) % s.at(t, t) != 0) {
                        s.add_row_multiple(t, r, 1);
                        if (u) u->add_row_multiple(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
            find_pivot(s, t, pr, pc);
        }
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            if (u) u->negate_row(t);
        }
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm sf;
    sf.s = a;
    sf.u = IntMatrix::identity(a.rows());
    sf.v = IntMatrix::identity(a.cols());
    reduce(sf.s, &sf.u, &sf.v);
    int n = std::min(a.rows(), a.cols());
    sf.rank = 0;
    while (sf.rank < n && sf.s.at(sf.rank, sf.rank) != 0) ++sf.rank;
    return sf;
}

std::vector<Int> smith_invariant_factors(const IntMatrix& a) {
    IntMatrix s = a;
    reduce(s, nullptr, nullptr);
    std::vector<Int> d;
    int n = std::min(a.rows(), a.cols());
    for (int i = 0; i < n && s.at(i, i) != 0; ++i) d.push_back(s.at(i, i));
    return d;
}

int matrix_rank(const IntMatrix& a) { return int(smith_invariant_factors(a).size()); }

std::optional<std::vector<Int>> solve_with(const SmithForm& sf, const std::vector<Int>& b) {
    if (int(b.size()) != sf.u.cols()) throw std::invalid_argument("solve: rhs dimension mismatch");
    std::vector<Int> ub = mat_vec(sf.u, b);
    std::vector<Int> y(sf.s.cols());
    for (int i = 0; i < sf.s.rows(); ++i) {
        if (i < sf.rank) {
            const Int& d = sf.s.at(i, i);
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(sf.v, y);
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    return solve_with(smith_normal_form(a), b);
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: dimension mismatch");
    SmithForm sf = smith_normal_form(a);
    IntMatrix x(a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        auto xc = solve_with(sf, b.col(c));
        if (!xc) return std::nullopt;
        x.set_col(c, *xc);
    }
    return x;
}

IntMatrix kernel_lattice(const IntMatrix& a) {
    SmithForm sf = smith_normal_form(a);
    // a * v = u^{-1} s, so the kernel is spanned by the columns of v past the rank.
    return sf.v.submatrix_cols(sf.rank, sf.v.cols());
}

IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("preimage_lattice: dimension mismatch");
    IntMatrix k = kernel_lattice(m.hstack(b));
    return lattice_basis(k.submatrix_rows(0, m.cols()));
}

IntMatrix lattice_basis(const IntMatrix& g) {
    // Columns of v beyond the rank span ker g; the first `rank` columns of
    // g*v then form a basis of the column lattice (g*v = u^{-1} s has its
    // nonzero columns exactly there, and column operations preserve the
    // lattice).
    SmithForm sf = smith_normal_form(g);
    IntMatrix gv = g * sf.v;
    return gv.submatrix_cols(0, sf.rank);
}

bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    Int d = a.det();
    return d == 1 || d == -1;
}

}  // namespace fsh
