#include "bellmat/evolution.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace bellmat {

namespace {

Eigen::MatrixXcd id_like(const Eigen::MatrixXcd& m) {
    return Eigen::MatrixXcd::Identity(m.rows(), m.cols());
}

} // namespace

EvolutionSpec EvolutionSpec::for_plain(int n_qubits) {
    BellFamily fam = BellFamily::plain(n_qubits);
    Eigen::MatrixXcd m = fam.M.evaluate({});
    return EvolutionSpec{std::move(fam), {}, false, std::move(m)};
}

EvolutionSpec EvolutionSpec::for_jj(const QTable& q) {
    BellFamily fam = BellFamily::jj(q);
    Eigen::MatrixXcd m = fam.M.evaluate(q.assignment());
    return EvolutionSpec{std::move(fam), q.assignment(), false, std::move(m)};
}

Eigen::MatrixXcd b_of_x(const EvolutionSpec& spec, double x) {
    double rho = 1.0 + x * x;
    double s = 1.0 / std::sqrt(2.0 * rho);
    return s * (1.0 + x) * id_like(spec.m()) + s * (1.0 - x) * spec.m();
}

Eigen::MatrixXcd hamiltonian_x(const EvolutionSpec& spec, double x) {
    double rho = 1.0 + x * x;
    double scale = spec.half_factor ? 0.5 : 1.0;
    return std::complex<double>(0.0, -scale / rho) * spec.m();
}

Eigen::MatrixXcd b_of_theta(const EvolutionSpec& spec, double theta) {
    double a = M_PI / 4.0 - theta;
    return std::cos(a) * id_like(spec.m()) + std::sin(a) * spec.m();
}

Eigen::MatrixXcd u_of_theta(const EvolutionSpec& spec, double theta) {
    return std::cos(theta) * id_like(spec.m()) - std::sin(theta) * spec.m();
}

Eigen::MatrixXcd hamiltonian_theta(const EvolutionSpec& spec) {
    double scale = spec.half_factor ? 0.5 : 1.0;
    return std::complex<double>(0.0, -scale) * spec.m();
}

Trajectory evolve(const EvolutionSpec& spec, const Eigen::VectorXcd& phi0,
                  double theta0, double theta1, int steps) {
    if (steps < 1) throw std::invalid_argument("evolve: steps must be >= 1");
    if (phi0.size() != spec.dim())
        throw std::invalid_argument("evolve: state dimension mismatch");
    if (std::abs(phi0.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("evolve: initial state is not normalized");
    Trajectory t;
    t.step = (theta1 - theta0) / steps;
    t.thetas.reserve(steps + 1);
    t.states.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        double theta = theta0 + k * t.step;
        t.thetas.push_back(theta);
        t.states.push_back(b_of_theta(spec, theta) * phi0);
    }
    return t;
}

double schrodinger_residual(const EvolutionSpec& spec, const Trajectory& t) {
    if (t.states.size() < 3) return 0.0;
    Eigen::MatrixXcd h =
        std::complex<double>(0.0, -1.0) * spec.m();
    const std::complex<double> iu(0.0, 1.0);
    double worst = 0.0;
    for (size_t k = 1; k + 1 < t.states.size(); ++k) {
        Eigen::VectorXcd lhs =
            iu * (t.states[k + 1] - t.states[k - 1]) / (2.0 * t.step);
        Eigen::VectorXcd rhs = h * t.states[k];
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

double max_norm_drift(const Trajectory& t) {
    double worst = 0.0;
    for (const auto& s : t.states)
        worst = std::max(worst, std::abs(s.norm() - 1.0));
    return worst;
}

double max_energy_drift(const EvolutionSpec& spec, const Trajectory& t) {
    if (t.states.empty()) return 0.0;
    Eigen::MatrixXcd h = hamiltonian_theta(spec);
    auto energy = [&](const Eigen::VectorXcd& s) {
        return (s.adjoint() * h * s)(0, 0).real();
    };
    double e0 = energy(t.states.front());
    double worst = 0.0;
    for (const auto& s : t.states)
        worst = std::max(worst, std::abs(energy(s) - e0));
    return worst;
}

void write_csv(const Trajectory& t, std::ostream& os) {
    long dim = t.states.empty() ? 0 : t.states.front().size();
    os << "theta";
    for (long k = 1; k <= dim; ++k) os << ",re" << k << ",im" << k;
    os << "\n";
    os << std::setprecision(17);
    for (size_t s = 0; s < t.states.size(); ++s) {
        os << t.thetas[s];
        for (long k = 0; k < dim; ++k)
            os << "," << t.states[s](k).real() << ","
               << t.states[s](k).imag();
        os << "\n";
    }
}

} // namespace bellmat
