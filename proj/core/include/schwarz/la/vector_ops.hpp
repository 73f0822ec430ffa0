#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "schwarz/la/errors.hpp"

namespace schwarz::la {

using Vector = std::vector<double>;

inline double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

/// y += alpha * x
inline void axpy(double alpha, const Vector& x, Vector& y) {
    if (x.size() != y.size()) throw DimensionError("axpy: size mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(double alpha, Vector& x) {
    for (double& v : x) v *= alpha;
}

/// out[i] = x[idx[i]]
inline void gather(const Vector& x, const std::vector<int>& idx, Vector& out) {
    out.resize(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = x[static_cast<std::size_t>(idx[i])];
}

/// out[idx[i]] += local[i]
inline void scatter_add(const Vector& local, const std::vector<int>& idx, Vector& out) {
    for (std::size_t i = 0; i < idx.size(); ++i) out[static_cast<std::size_t>(idx[i])] += local[i];
}

} // namespace schwarz::la
