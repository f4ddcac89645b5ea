#pragma once

#include <cstddef>
#include <vector>

namespace qsvr {

// Eigendecomposition of a dense symmetric matrix (row-major, n*n) by cyclic
// Jacobi rotations. Adequate for the matrix sizes seen here (n in the
// hundreds); eigenvalues are returned unsorted unless sort is requested.
struct SymmetricEigen {
    std::vector<double> eigenvalues;        // length n
    std::vector<double> eigenvectors;       // n*n, column k = eigenvector k; empty if not requested
};

SymmetricEigen symmetric_eigen(const std::vector<double>& a, std::size_t n,
                               bool want_vectors = false, bool sort_ascending = true);

double min_symmetric_eigenvalue(const std::vector<double>& a, std::size_t n);

}  // namespace qsvr
