#include "ecdlp/cost.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ecdlp {

double classical_ops(unsigned b, ClassicalVariant variant)
{
    if (b < 1)
        throw std::invalid_argument("classical_ops: b must be >= 1");
    double n = std::exp2(static_cast<double>(b));
    switch (variant) {
    case ClassicalVariant::Figure:
        return std::exp2(b / 2.0);
    case ClassicalVariant::Rho:
        return std::sqrt(M_PI * n / 2.0);
    case ClassicalVariant::RhoNegation:
        return std::sqrt(M_PI * n / 4.0);
    }
    throw std::logic_error("classical_ops: unknown variant");
}

double classical_walltime(double ops, double rate)
{
    if (ops <= 0 || rate <= 0)
        throw std::invalid_argument("classical_walltime: positive inputs required");
    return ops / rate;
}

double logical_error(int d, const CodeParams& params)
{
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("logical_error: d must be odd and >= 3");
    return params.C * std::pow(params.p / params.p_th, (d + 1) / 2.0);
}

int min_distance(double t_ops, const CodeParams& params)
{
    if (t_ops <= 0 || params.eps_target <= 0 || params.eps_target >= 1)
        throw std::invalid_argument("min_distance: invalid inputs");
    // Tiny relative slack so exactly-on-budget cases are not lost to
    // floating-point rounding.
    const double budget = params.eps_target * (1.0 + 1e-9);
    for (int d = 3; d <= 99; d += 2)
        if (t_ops * logical_error(d, params) <= budget)
            return d;
    throw std::domain_error("min_distance: no distance <= 99 meets the error budget");
}

double physical_footprint(double n_log, double factories, int d_data, int d_fac,
                          const CodeParams& params)
{
    if (n_log <= 0 || d_data <= 0 || d_fac <= 0 || factories < 0)
        throw std::invalid_argument("physical_footprint: invalid inputs");
    double dd = static_cast<double>(d_data);
    double df = static_cast<double>(d_fac);
    return std::ceil(params.alpha * dd * dd * n_log + params.beta * df * df * factories);
}

RuntimeResult runtime(double t_depth, double t_count, double factories, int d_data,
                      const CodeParams& params)
{
    if (t_depth <= 0 || t_count <= 0 || factories <= 0 || d_data <= 0)
        throw std::invalid_argument("runtime: positive inputs required");
    double depth = params.c * d_data * t_depth * params.tau;
    double supply = t_count * params.tau / (factories * params.r_fac);
    if (depth >= supply)
        return {depth, LimitingTerm::Depth};
    return {supply, LimitingTerm::Supply};
}

double repcat_logical_z(double p_z, int d)
{
    if (p_z < 0 || p_z > 1 || d < 1 || d % 2 == 0)
        throw std::invalid_argument("repcat_logical_z: invalid inputs");
    double total = 0.0;
    for (int j = (d + 1) / 2; j <= d; ++j) {
        double coeff = 1.0;
        for (int i = 1; i <= j; ++i)
            coeff *= static_cast<double>(d - j + i) / i;
        total += coeff * std::pow(p_z, j) * std::pow(1.0 - p_z, d - j);
    }
    return total;
}

namespace {

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string emit_classical_curve(const std::vector<unsigned>& bits, ClassicalVariant variant,
                                 double rate)
{
    std::ostringstream out;
    out << "b,classical_ops,wall_seconds\n";
    for (unsigned b : bits) {
        double ops = classical_ops(b, variant);
        out << b << ',' << fmt(ops) << ',' << fmt(classical_walltime(ops, rate)) << '\n';
    }
    return out.str();
}

std::string emit_estimate_curve(const std::vector<EstimatePoint>& points)
{
    std::ostringstream out;
    out << "b,N_phys,t_seconds\n";
    for (const EstimatePoint& pt : points)
        out << pt.b << ',' << fmt(pt.n_phys) << ',' << fmt(pt.t_seconds) << '\n';
    return out.str();
}

}  // namespace ecdlp
