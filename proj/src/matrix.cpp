#include "rigidcalc/matrix.hpp"

#include <sstream>

#include "rigidcalc/errors.hpp"

namespace rigidcalc {

Mat Mat::identity(const RingP& r, int n) {
    Mat m(r, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::one(r);
    return m;
}

Mat Mat::from_rows(const RingP& r, const std::vector<std::vector<Poly>>& rows) {
    int nr = (int)rows.size();
    int nc = nr ? (int)rows[0].size() : 0;
    Mat m(r, nr, nc);
    for (int i = 0; i < nr; ++i) {
        if ((int)rows[i].size() != nc)
            throw internal_error("from_rows: ragged rows");
        for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::col_vec(const std::vector<Poly>& entries) {
    if (entries.empty()) throw internal_error("col_vec: empty");
    Mat m(entries[0].ring(), (int)entries.size(), 1);
    for (int i = 0; i < (int)entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    check_same_ring(ring_, o.ring_);
    if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
    Mat r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Poly& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * b;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    check_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix sum shape mismatch");
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

Mat Mat::scale(const Poly& c) const {
    Mat r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

Mat Mat::hstack(const Mat& o) const {
    check_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_) throw internal_error("hstack row mismatch");
    Mat r(ring_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    check_same_ring(ring_, o.ring_);
    if (cols_ != o.cols_) throw internal_error("vstack col mismatch");
    Mat r(ring_, rows_ + o.rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
        for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i) r.at(rows_ + i, j) = o.at(i, j);
    }
    return r;
}

Mat Mat::cols_slice(int j0, int j1) const {
    Mat r(ring_, rows_, j1 - j0);
    for (int i = 0; i < rows_; ++i)
        for (int j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
    return r;
}

Mat Mat::rows_slice(int i0, int i1) const {
    Mat r(ring_, i1 - i0, cols_);
    for (int i = i0; i < i1; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i - i0, j) = at(i, j);
    return r;
}

std::vector<Poly> Mat::col(int j) const {
    std::vector<Poly> v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void Mat::set_col(int j, const std::vector<Poly>& v) {
    if ((int)v.size() != rows_) throw internal_error("set_col size mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::map_entries(const std::function<Poly(const Poly&)>& f, RingP new_ring) const {
    Mat r(new_ring ? new_ring : ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f(e_[i]);
    return r;
}

Mat Mat::kron(const Mat& o) const {
    check_same_ring(ring_, o.ring_);
    Mat r(ring_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i1 = 0; i1 < rows_; ++i1)
        for (int j1 = 0; j1 < cols_; ++j1) {
            const Poly& a = at(i1, j1);
            if (a.is_zero()) continue;
            for (int i2 = 0; i2 < o.rows_; ++i2)
                for (int j2 = 0; j2 < o.cols_; ++j2)
                    r.at(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = a * o.at(i2, j2);
        }
    return r;
}

Poly Mat::det() const {
    if (rows_ != cols_) throw internal_error("det of non-square matrix");
    if (rows_ == 0) return Poly::one(ring_);
    if (rows_ == 1) return at(0, 0);
    // cofactor expansion along the first row; fine at the sizes we meet
    Poly acc = Poly::zero(ring_);
    for (int j = 0; j < cols_; ++j) {
        const Poly& a = at(0, j);
        if (a.is_zero()) continue;
        Mat sub(ring_, rows_ - 1, cols_ - 1);
        for (int i = 1; i < rows_; ++i) {
            int jj = 0;
            for (int k = 0; k < cols_; ++k) {
                if (k == j) continue;
                sub.at(i - 1, jj++) = at(i, k);
            }
        }
        Poly term = a * sub.det();
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<Poly> Mat::minors(int k) const {
    std::vector<Poly> out;
    if (k <= 0) {
        out.push_back(Poly::one(ring_));
        return out;
    }
    if (k > rows_ || k > cols_) return out; // no k x k submatrices
    std::vector<int> ri(k), ci(k);
    // iterate over all k-subsets of rows and of columns
    std::vector<int> rs(k);
    for (int i = 0; i < k; ++i) rs[i] = i;
    auto next_subset = [](std::vector<int>& s, int n) {
        int k2 = (int)s.size();
        int i = k2 - 1;
        while (i >= 0 && s[i] == n - k2 + i) --i;
        if (i < 0) return false;
        ++s[i];
        for (int j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
        return true;
    };
    do {
        std::vector<int> cs(k);
        for (int i = 0; i < k; ++i) cs[i] = i;
        do {
            Mat sub(ring_, k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = at(rs[i], cs[j]);
            out.push_back(sub.det());
        } while (next_subset(cs, cols_));
    } while (next_subset(rs, rows_));
    return out;
}

bool Mat::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

} // namespace rigidcalc
