#include "fsh/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fsh {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> data) {
    rows_ = int(data.size());
    cols_ = rows_ ? int(data.begin()->size()) : 0;
    e_.resize(size_t(rows_) * cols_);
    int r = 0;
    for (const auto& row : data) {
        if (int(row.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        int c = 0;
        for (long long x : row) at(r, c++) = x;
        ++r;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix m(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const Int& b = o.at(k, c);
                if (b != 0) m.at(r, c) += a * b;
            }
        }
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

IntMatrix IntMatrix::scaled(const Int& k) const {
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = k * e_[i];
    return m;
}

std::vector<Int> IntMatrix::col(int c) const {
    std::vector<Int> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void IntMatrix::set_col(int c, const std::vector<Int>& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix: hstack row mismatch");
    IntMatrix m(rows_, cols_ + o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (int c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
    }
    return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("IntMatrix: vstack col mismatch");
    IntMatrix m(rows_ + o.rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int r = 0; r < o.rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
    return m;
}

IntMatrix IntMatrix::submatrix_cols(int c0, int c1) const {
    IntMatrix m(rows_, c1 - c0);
    for (int r = 0; r < rows_; ++r)
        for (int c = c0; c < c1; ++c) m.at(r, c - c0) = at(r, c);
    return m;
}

IntMatrix IntMatrix::submatrix_rows(int r0, int r1) const {
    IntMatrix m(r1 - r0, cols_);
    for (int r = r0; r < r1; ++r)
        for (int c = 0; c < cols_; ++c) m.at(r - r0, c) = at(r, c);
    return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx) const {
    IntMatrix m(int(idx.size()), cols_);
    for (size_t r = 0; r < idx.size(); ++r)
        for (int c = 0; c < cols_; ++c) m.at(int(r), c) = at(idx[r], c);
    return m;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows_; ++r)
        for (int c = 0; c < b.cols_; ++c) m.at(a.rows_ + r, a.cols_ + c) = b.at(r, c);
    return m;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int ra = 0; ra < a.rows_; ++ra)
        for (int ca = 0; ca < a.cols_; ++ca) {
            const Int& x = a.at(ra, ca);
            if (x == 0) continue;
            for (int rb = 0; rb < b.rows_; ++rb)
                for (int cb = 0; cb < b.cols_; ++cb)
                    m.at(ra * b.rows_ + rb, ca * b.cols_ + cb) = x * b.at(rb, cb);
        }
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) at(i, c).swap(at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) at(r, i).swap(at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& k) {
    if (k == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& k) {
    if (k == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix::det: square matrix required");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a.at(i, j) = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) /= prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    if (int(v.size()) != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Int> out(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        Int acc = 0;
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && v[c] != 0) acc += m.at(r, c) * v[c];
        out[r] = std::move(acc);
    }
    return out;
}

}  // namespace fsh
