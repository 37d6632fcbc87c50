#ifndef PRYMCOVER_RATMAT_HPP
#define PRYMCOVER_RATMAT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "prymcover/rational.hpp"

namespace prym {

// Dense exact rational matrix, just big enough for the linear
// algebra this engine needs: rank, solving small square-ish
// systems, and span comparison. Everything is fraction-free only
// in spirit; mpq keeps entries canonical.
class RatMat {
public:
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // Row echelon reduction in place; returns the rank.
    std::size_t rref() {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
            if (pivot == rows_) continue;
            swap_rows(pivot, rank);
            Rat inv = at(rank, col);
            for (std::size_t j = col; j < cols_; ++j) at(rank, j) /= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == rank || at(i, col) == 0) continue;
                Rat f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) -= f * at(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const {
        RatMat copy = *this;
        return copy.rref();
    }

    // Solve A x = b exactly; throws if inconsistent. A may be
    // rectangular; a particular solution is returned (free
    // variables set to zero).
    std::vector<Rat> solve(const std::vector<Rat>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("solve: size mismatch");
        RatMat aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        aug.rref();
        std::vector<Rat> x(cols_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t lead = cols_ + 1;
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (aug.at(i, j) != 0) { lead = j; break; }
            }
            if (lead == cols_) throw std::domain_error("solve: inconsistent system");
            if (lead > cols_) continue;  // zero row
            x[lead] = aug.at(i, cols_);
            for (std::size_t j = lead + 1; j < cols_; ++j)
                x[lead] -= aug.at(i, j) * x[j];
            // Back-substitution is unnecessary after full rref, but
            // free columns to the right may carry nonzero entries;
            // they were set to zero above, so subtract their terms.
        }
        return x;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(at(a, j), at(b, j));
    }

    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Do two row-span generating sets span the same subspace?
inline bool same_row_span(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.cols()) return false;
    RatMat stacked(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            stacked.at(a.rows() + i, j) = b.at(i, j);
    std::size_t r = stacked.rank();
    return r == a.rank() && r == b.rank();
}

}  // namespace prym

#endif
