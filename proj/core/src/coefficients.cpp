#include "schwarz/coefficients.hpp"

#include <stdexcept>

namespace schwarz {

LameParameters lame_from_E_nu(double E, double nu) {
    if (E <= 0.0) throw std::invalid_argument("lame_from_E_nu: E must be positive");
    if (nu < 0.0 || nu > 0.5) throw std::invalid_argument("lame_from_E_nu: nu must lie in [0, 1/2]");
    LameParameters p;
    p.mu = E / (2.0 * (1.0 + nu));
    if (nu == 0.5) {
        p.incompressible = true;
        p.lambda = 0.0;
    } else {
        p.lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
    }
    return p;
}

CoefficientField CoefficientField::constant(const SubdomainLayout& layout, double E, double nu) {
    CoefficientField f;
    f.params_.assign(static_cast<std::size_t>(layout.count()), lame_from_E_nu(E, nu));
    return f;
}

CoefficientField CoefficientField::from_grid(const SubdomainLayout& layout,
                                             const std::vector<double>& E_rows,
                                             const std::vector<double>& nu_rows) {
    const std::size_t n = static_cast<std::size_t>(layout.count());
    if (E_rows.size() != n || nu_rows.size() != n)
        throw std::invalid_argument("CoefficientField::from_grid: grid size must match subdomain count");
    CoefficientField f;
    f.params_.resize(n);
    for (int s = 0; s < layout.count(); ++s) {
        // Matrix row 0 is the top subdomain row, layout row 0 the bottom one.
        const int sx = layout.subdomain_x(s);
        const int sy = layout.subdomain_y(s);
        const int row = layout.subdomains_y - 1 - sy;
        const std::size_t k = static_cast<std::size_t>(row * layout.subdomains_x + sx);
        f.params_[static_cast<std::size_t>(s)] = lame_from_E_nu(E_rows[k], nu_rows[k]);
    }
    return f;
}

CoefficientField CoefficientField::central_jump(const SubdomainLayout& layout, double E,
                                                double nu_center, double nu_outer) {
    if (layout.subdomains_x % 2 != 0 || layout.subdomains_y % 2 != 0)
        throw std::invalid_argument("central_jump: needs an even subdomain grid");
    CoefficientField f;
    f.params_.resize(static_cast<std::size_t>(layout.count()));
    const int cx0 = layout.subdomains_x / 2 - 1, cy0 = layout.subdomains_y / 2 - 1;
    for (int s = 0; s < layout.count(); ++s) {
        const int sx = layout.subdomain_x(s), sy = layout.subdomain_y(s);
        const bool central = (sx == cx0 || sx == cx0 + 1) && (sy == cy0 || sy == cy0 + 1);
        f.params_[static_cast<std::size_t>(s)] = lame_from_E_nu(E, central ? nu_center : nu_outer);
    }
    return f;
}

CoefficientField CoefficientField::checkerboard(const SubdomainLayout& layout) {
    if (layout.subdomains_x != 4 || layout.subdomains_y != 4)
        throw std::invalid_argument("checkerboard: preset is defined on a 4x4 subdomain grid");
    const std::vector<double> nu = {
        0.49999, 0.37,    0.499, 0.41,
        0.3,     0.49999, 0.33,  0.4999,
        0.49999, 0.29,    0.499, 0.3,
        0.2,     0.4999,  0.31,  0.499,
    };
    const std::vector<double> E(16, 6000.0);
    return from_grid(layout, E, nu);
}

bool CoefficientField::any_incompressible() const {
    for (const auto& p : params_)
        if (p.incompressible) return true;
    return false;
}

bool CoefficientField::all_incompressible() const {
    for (const auto& p : params_)
        if (!p.incompressible) return false;
    return !params_.empty();
}

CoefficientField CoefficientField::scaled(double c) const {
    if (c <= 0.0) throw std::invalid_argument("CoefficientField::scaled: factor must be positive");
    CoefficientField f = *this;
    for (auto& p : f.params_) {
        p.mu *= c;
        p.lambda *= c;
    }
    return f;
}

} // namespace schwarz
