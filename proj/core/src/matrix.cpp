#include "pcong/matrix.hpp"

#include "pcong/errors.hpp"

namespace pcong {

IntegerMatrix::IntegerMatrix(const std::vector<std::vector<Integer>>& rows)
    : IntegerMatrix(rows.size()) {
    for (std::size_t i = 0; i < dim_; ++i) {
        if (rows[i].size() != dim_) throw precondition_error("matrix is not square");
        for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) = rows[i][j];
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t dim) { return scalar(dim, Integer(1)); }

IntegerMatrix IntegerMatrix::scalar(std::size_t dim, const Integer& value) {
    IntegerMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<Integer>& entries) {
    IntegerMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

IntegerMatrix IntegerMatrix::companion(const std::vector<Integer>& display_coefficients) {
    if (display_coefficients.empty() || display_coefficients.front() != 1) {
        throw precondition_error("companion matrix needs a monic polynomial");
    }
    const std::size_t d = display_coefficients.size() - 1;
    IntegerMatrix m(d);
    for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1;
    // Last column holds −a_d, …, −a_1 from the top.
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -display_coefficients[d - i];
    return m;
}

Integer IntegerMatrix::trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<std::vector<Integer>> IntegerMatrix::rows() const {
    std::vector<std::vector<Integer>> out(dim_, std::vector<Integer>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.dim_ != b.dim_) throw precondition_error("matrix dimensions differ");
    const std::size_t d = a.dim_;
    IntegerMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

}  // namespace pcong
