#include "mlmonkey/matrix.hpp"

#include <cassert>
#include <cmath>

namespace mlmonkey {

bool Matrix::all_finite() const {
    for (double value : data_) {
        if (!std::isfinite(value)) {
            return false;
        }
    }
    return true;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.rows());
    Matrix result(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                result(i, j) += aik * b(k, j);
            }
        }
    }
    return result;
}

}  // namespace mlmonkey
