#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fsh/ints.hpp"

namespace fsh {

// Dense integer matrix, row-major. Rows/cols may be zero; a 0xk or kx0
// matrix is a legitimate value (empty products and presentations of the
// trivial group rely on it).
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> data);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& k) const;

    // Column vector access: v as n x 1 matrices.
    std::vector<Int> col(int c) const;
    void set_col(int c, const std::vector<Int>& v);

    IntMatrix hstack(const IntMatrix& o) const;       // [this | o]
    IntMatrix vstack(const IntMatrix& o) const;       // [this ; o]
    IntMatrix submatrix_cols(int c0, int c1) const;   // columns [c0, c1)
    IntMatrix submatrix_rows(int r0, int r1) const;
    IntMatrix select_rows(const std::vector<int>& idx) const;

    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& k);  // row dst += k * row src
    void add_col_multiple(int dst, int src, const Int& k);
    void negate_row(int i);
    void negate_col(int i);

    // Exact determinant by fraction-free (Bareiss) elimination; square only.
    Int det() const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

}  // namespace fsh
