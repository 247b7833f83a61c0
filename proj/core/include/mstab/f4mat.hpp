#pragma once

#include <stdexcept>
#include <vector>

#include "mstab/f4.hpp"

namespace mstab {

/* Dense matrix over F4, row-major. */
struct Mat {
    int rows = 0, cols = 0;
    std::vector<F4> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = F4::one();
        return m;
    }

    F4& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const F4& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows)
            throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                F4 v = x.at(i, k);
                if (v.is_zero())
                    continue;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols)
            throw std::invalid_argument("Mat: shape mismatch in sum");
        Mat r = x;
        for (size_t i = 0; i < r.a.size(); ++i)
            r.a[i] += y.a[i];
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat block(int i0, int j0, int r, int c) const {
        Mat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m.at(i, j) = at(i0 + i, j0 + j);
        return m;
    }
    void set_block(int i0, int j0, const Mat& m) {
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                at(i0 + i, j0 + j) = m.at(i, j);
    }

    std::vector<F4> col(int j) const {
        std::vector<F4> v(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i)
            v[size_t(i)] = at(i, j);
        return v;
    }
};

/* in-place reduced row echelon form; returns pivot columns */
std::vector<int> rref(Mat& m);
int rank(Mat m);
F4 det(Mat m);
Mat inverse(const Mat& m);
/* basis of the right kernel, in reduced echelon form w.r.t. column order */
std::vector<std::vector<F4>> kernel_basis(Mat m);

}  // namespace mstab
