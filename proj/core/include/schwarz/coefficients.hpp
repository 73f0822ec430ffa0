#pragma once

#include <vector>

#include "schwarz/mesh.hpp"

namespace schwarz {

/// Lame parameters of one material. `incompressible` marks the Stokes
/// limit (nu = 1/2, lambda infinite); `lambda` is meaningless then.
struct LameParameters {
    double mu = 0.0;
    double lambda = 0.0;
    bool incompressible = false;
};

/// mu = E / (2(1+nu)), lambda = E nu / ((1+nu)(1-2nu)).
/// nu = 1/2 returns the incompressible marker instead of failing.
LameParameters lame_from_E_nu(double E, double nu);

/// Piecewise-constant material data, one (mu, lambda) pair per subdomain.
class CoefficientField {
public:
    static CoefficientField constant(const SubdomainLayout& layout, double E, double nu);
    /// Grids are given in matrix orientation: row 0 is the TOP subdomain row.
    static CoefficientField from_grid(const SubdomainLayout& layout,
                                      const std::vector<double>& E_rows,
                                      const std::vector<double>& nu_rows);
    /// nu = nu_center on the central block of subdomains, nu_outer elsewhere.
    static CoefficientField central_jump(const SubdomainLayout& layout, double E,
                                         double nu_center, double nu_outer = 0.3);
    /// The fixed 4x4 mix of compressible and almost-incompressible
    /// subdomains with E = 6000; requires a 4x4 layout.
    static CoefficientField checkerboard(const SubdomainLayout& layout);

    int subdomain_count() const { return static_cast<int>(params_.size()); }
    double mu(int s) const { return params_[static_cast<std::size_t>(s)].mu; }
    double lambda(int s) const { return params_[static_cast<std::size_t>(s)].lambda; }
    bool incompressible(int s) const { return params_[static_cast<std::size_t>(s)].incompressible; }
    const LameParameters& lame(int s) const { return params_[static_cast<std::size_t>(s)]; }

    bool any_incompressible() const;
    bool all_incompressible() const;

    /// Multiplies every mu and lambda by c (used by scaling-invariance tests).
    CoefficientField scaled(double c) const;

private:
    std::vector<LameParameters> params_;
};

} // namespace schwarz
