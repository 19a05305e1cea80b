#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ecdlp {

enum class ClassicalVariant { Figure, Rho, RhoNegation };

// Expected group operations to break a b-bit instance. Figure: 2^{b/2}.
// Rho: sqrt(pi*n/2), RhoNegation: sqrt(pi*n/4), with n = 2^b.
double classical_ops(unsigned b, ClassicalVariant variant = ClassicalVariant::Figure);

// Reference rate: 1e8 group operations per second.
double classical_walltime(double ops, double rate = 1e8);

struct CodeParams {
    double C = 0.1;          // logical-error prefactor
    double p = 1e-3;         // physical error rate
    double p_th = 1e-2;      // threshold
    double tau = 1e-6;       // cycle time, seconds
    double alpha = 2.0;      // data-patch layout constant
    double beta = 1.0;       // factory layout constant
    double c = 1.0;          // schedule constant
    double factories = 1.0;  // F
    double r_fac = 1.0;      // non-Clifford states per factory per cycle
    double eps_target = 1e-2;
};

// C * (p / p_th)^{(d+1)/2} for odd d >= 3.
double logical_error(int d, const CodeParams& params);

// Smallest odd d >= 3 with T_ops * logical_error(d) <= eps_target; throws
// std::domain_error when no d <= 99 suffices.
int min_distance(double t_ops, const CodeParams& params);

// ceil(alpha * d_data^2 * N_log + beta * d_fac^2 * F).
double physical_footprint(double n_log, double factories, int d_data, int d_fac,
                          const CodeParams& params);

enum class LimitingTerm { Depth, Supply };

struct RuntimeResult {
    double seconds = 0.0;
    LimitingTerm limit = LimitingTerm::Depth;
};

// max(c * d_data * T_depth * tau, T_count * tau / (F * r_fac)).
RuntimeResult runtime(double t_depth, double t_count, double factories, int d_data,
                      const CodeParams& params);

// Logical phase-flip probability of a distance-d repetition code: binomial
// tail for a majority of d cells flipping. d odd >= 1.
double repcat_logical_z(double p_z, int d);

// CSV "b,classical_ops,wall_seconds" over the given bit strengths.
std::string emit_classical_curve(const std::vector<unsigned>& bits,
                                 ClassicalVariant variant = ClassicalVariant::Figure,
                                 double rate = 1e8);

struct EstimatePoint {
    unsigned b = 0;
    double n_phys = 0.0;
    double t_seconds = 0.0;
};

// CSV "b,N_phys,t_seconds", deterministic formatting.
std::string emit_estimate_curve(const std::vector<EstimatePoint>& points);

}  // namespace ecdlp
