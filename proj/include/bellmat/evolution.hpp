#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "bellmat/bell.hpp"

namespace bellmat {

/// Numeric evolution layer for one Bell family. Every exponential of M
/// reduces to cos/sin closed forms because M^2 = -I; nothing here uses a
/// series expansion. Phases must be concrete (an angle or trivial table)
/// since this layer evaluates to complex doubles.
struct EvolutionSpec {
    BellFamily family;
    PhaseAssignment phases;
    /// Scale the exposed Hamiltonians by 1/2, the convention whose evolution
    /// operator is e^{theta M/2}. Trajectories and residual checks always
    /// use the unscaled generator that psi(theta) = B(theta) phi satisfies.
    bool half_factor = false;

    static EvolutionSpec for_plain(int n_qubits);
    static EvolutionSpec for_jj(const QTable& q);

    long dim() const { return m_numeric.rows(); }
    const Eigen::MatrixXcd& m() const { return m_numeric; }

    Eigen::MatrixXcd m_numeric;
};

/// B(x) = ((1+x) I + (1-x) M) / sqrt(2 (1+x^2)); unitary for real x, B(1) = I.
Eigen::MatrixXcd b_of_x(const EvolutionSpec& spec, double x);

/// H(x) = i (dB/dx) B^{-1} = -i M / (1+x^2), Hermitian.
Eigen::MatrixXcd hamiltonian_x(const EvolutionSpec& spec, double x);

/// B(theta) = cos(pi/4 - theta) I + sin(pi/4 - theta) M; B(0) = B, B(pi/4) = I.
Eigen::MatrixXcd b_of_theta(const EvolutionSpec& spec, double theta);

/// U(theta) = e^{-M theta} = cos(theta) I - sin(theta) M.
Eigen::MatrixXcd u_of_theta(const EvolutionSpec& spec, double theta);

/// H = -i M (time independent).
Eigen::MatrixXcd hamiltonian_theta(const EvolutionSpec& spec);

struct Trajectory {
    std::vector<double> thetas;
    std::vector<Eigen::VectorXcd> states;
    double step = 0.0;
};

/// Samples psi(theta) = B(theta) phi0 on a uniform grid of `steps` intervals.
/// Throws std::invalid_argument unless phi0 is normalized within 1e-9.
Trajectory evolve(const EvolutionSpec& spec, const Eigen::VectorXcd& phi0,
                  double theta0, double theta1, int steps);

/// Max over interior samples of |i (psi_{k+1} - psi_{k-1})/(2h) - H psi_k|,
/// central differences against the unscaled generator.
double schrodinger_residual(const EvolutionSpec& spec, const Trajectory& t);

/// Max deviation of sample norms from 1.
double max_norm_drift(const Trajectory& t);

/// Max drift of <psi|H|psi> from its initial value along the trajectory.
double max_energy_drift(const EvolutionSpec& spec, const Trajectory& t);

/// Columns: theta, then interleaved re/im amplitudes in basis order.
void write_csv(const Trajectory& t, std::ostream& os);

} // namespace bellmat
