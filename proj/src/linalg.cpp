#include "qsvr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qsvr {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
}

}  // namespace

SymmetricEigen symmetric_eigen(const std::vector<double>& a_in, std::size_t n,
                               bool want_vectors, bool sort_ascending) {
    if (a_in.size() != n * n) throw std::invalid_argument("symmetric_eigen: size mismatch");
    std::vector<double> a(n * n);
    // work on the symmetrized matrix
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (a_in[i * n + j] + a_in[j * n + i]);

    std::vector<double> v;
    if (want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }

    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double stop = std::max(1e-300, 1e-14 * frob);

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a, n) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::abs(apq) <= 1e-300) continue;
                double app = a[p * n + p];
                double aqq = a[q * n + q];
                double theta = 0.5 * (aqq - app) / apq;
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k * n + p];
                    double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p * n + k];
                    double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        double vkp = v[k * n + p];
                        double vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    SymmetricEigen out;
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a[i * n + i];
    out.eigenvectors = std::move(v);

    if (sort_ascending) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return out.eigenvalues[x] < out.eigenvalues[y];
        });
        std::vector<double> ev(n);
        for (std::size_t k = 0; k < n; ++k) ev[k] = out.eigenvalues[order[k]];
        out.eigenvalues = std::move(ev);
        if (want_vectors) {
            std::vector<double> vv(n * n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t r = 0; r < n; ++r) vv[r * n + k] = out.eigenvectors[r * n + order[k]];
            out.eigenvectors = std::move(vv);
        }
    }
    return out;
}

double min_symmetric_eigenvalue(const std::vector<double>& a, std::size_t n) {
    auto eig = symmetric_eigen(a, n, false, true);
    return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
}

}  // namespace qsvr
