#pragma once

#include <functional>
#include <vector>

#include "poly.hpp"

namespace rigidcalc {

// Dense matrix of polynomials over one ring. Rows index target components,
// columns index source components (a column is an element of R^rows).
class Mat {
public:
    Mat() = default;
    Mat(RingP ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * cols, Poly::zero(ring_)) {}

    static Mat identity(const RingP& r, int n);
    static Mat zero(const RingP& r, int rows, int cols) { return Mat(r, rows, cols); }
    static Mat from_rows(const RingP& r, const std::vector<std::vector<Poly>>& rows);
    static Mat col_vec(const std::vector<Poly>& entries);

    const RingP& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scale(const Poly& c) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;

    Mat hstack(const Mat& o) const; // [this | o]
    Mat vstack(const Mat& o) const; // [this ; o]
    Mat cols_slice(int j0, int j1) const;
    Mat rows_slice(int i0, int i1) const;
    std::vector<Poly> col(int j) const;
    void set_col(int j, const std::vector<Poly>& v);

    // map entries (e.g. normal form or a ring map)
    Mat map_entries(const std::function<Poly(const Poly&)>& f, RingP new_ring = nullptr) const;

    // Kronecker product: (A ⊗ B)((i1,i2),(j1,j2)) = A(i1,j1)·B(i2,j2),
    // row index = i1*B.rows+i2, col index = j1*B.cols+j2
    Mat kron(const Mat& o) const;

    Poly det() const;                            // cofactor expansion, entries NF-reduced
    std::vector<Poly> minors(int k) const;       // all k x k minors
    bool is_zero() const;

    std::string str() const;

private:
    RingP ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> e_;
};

} // namespace rigidcalc
