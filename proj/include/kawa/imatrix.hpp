#ifndef KAWA_IMATRIX_HPP
#define KAWA_IMATRIX_HPP

#include <vector>

#include <Eigen/Dense>

#include "kawa/interval.hpp"

namespace kawa
{

class IMatrix
{
public:
    IMatrix() = default;
    IMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IMatrix identity(int n);
    static IMatrix from_float(const Eigen::MatrixXd& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Interval& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Interval& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Interval* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    Eigen::MatrixXd mid() const;
    IMatrix transpose() const;
    IMatrix block(int r0, int c0, int nr, int nc) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Interval> a_;
};

IMatrix operator+(const IMatrix& a, const IMatrix& b);
IMatrix operator-(const IMatrix& a, const IMatrix& b);

// Interval matrix products. The plain versions split rows across OpenMP
// threads; the serial versions are the reference they are tested against.
// Each entry is accumulated in the same order in both, so results agree bit
// for bit.
namespace kernels
{

IMatrix matmul(const IMatrix& a, const IMatrix& b);
IMatrix matmul_serial(const IMatrix& a, const IMatrix& b);
IMatrix matmul(const Eigen::MatrixXd& a, const IMatrix& b);
IMatrix matmul_serial(const Eigen::MatrixXd& a, const IMatrix& b);
IMatrix matmul(const IMatrix& a, const Eigen::MatrixXd& b);

std::vector<Interval> matvec(const IMatrix& a, const std::vector<Interval>& x);

} // namespace kernels

// Upper bounds on induced norms of every matrix in the box.
double norm_inf_up(const IMatrix& m);
double norm_one_up(const IMatrix& m);
double frobenius_up(const IMatrix& m);

// Encloses the solution of m x = rhs (column by column) for every m, rhs in
// the boxes. r is a float approximate inverse of mid(m).
IMatrix verified_solve(const IMatrix& m, const IMatrix& rhs, const Eigen::MatrixXd& r);
IMatrix verified_solve(const IMatrix& m, const IMatrix& rhs);

// [lower, upper] bracket of the spectral norm, valid for every matrix in the box.
Interval op_norm2_upper(const IMatrix& m, int squarings = 6);

} // namespace kawa

#endif
