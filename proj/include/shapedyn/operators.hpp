#pragma once

#include "shapedyn/wavefunction.hpp"

namespace shapedyn {

// All operators act pointwise through nested central finite differences; no
// global grids. Steps are scale-relative; order 2 or 4 with optional
// Richardson extrapolation at the outer level.

// Gradient with respect to the flat particle coordinates (no mass weights).
Eigen::VectorXcd fd_gradient(const WaveFunctionModel& wf, const MassedConfiguration& cfg,
                             const FDScheme& scheme);

// sum_k (1/m_k) d_k [ w(q) d_k psi ], the mass-weighted divergence of a
// weighted mass-weighted gradient. The building block of every operator here.
Complex weighted_divgrad(const std::function<double(const MassedConfiguration&)>& weight,
                         const WaveEvaluator& psi, const MassedConfiguration& cfg,
                         const FDScheme& scheme);

// Laplace-Beltrami operator of g = f g_e:  f^{-n/2} div (f^{n/2-1} grad).
Complex laplace_beltrami_g(const ConformalModel& model, const WaveFunctionModel& wf,
                           const MassedConfiguration& cfg, const FDScheme& scheme);

// Lift of the shape Laplacian: J div_g (J^{-1} grad_g). Defined on invariant
// (G1) wave functions; other tags are rejected.
Complex lifted_shape_laplacian(const ConformalModel& model, const WaveFunctionModel& wf,
                               const MassedConfiguration& cfg, const FDScheme& scheme,
                               JacobianRoute route = JacobianRoute::Invariant);
// Same operator applied to an arbitrary evaluator (the gauge-chain algebra
// needs it on non-invariant products such as J^{1/2} psi).
Complex lifted_shape_laplacian_raw(const ConformalModel& model, const WaveEvaluator& psi,
                                   const MassedConfiguration& cfg, const FDScheme& scheme,
                                   JacobianRoute route = JacobianRoute::Invariant);

// Flat mass-weighted Laplacian sum_k (1/m_k) d_k^2 (direct stencil).
Complex flat_laplacian(const WaveEvaluator& psi, const MassedConfiguration& cfg,
                       const FDScheme& scheme);

// First gauge potential: -(hbar^2/2) (lift J^{1/2}) / J^{1/2}. Constant on
// fibers for the invariant Jacobian route.
double potential_V1(const ConformalModel& model, const MassedConfiguration& cfg,
                    const FDScheme& scheme, JacobianRoute route = JacobianRoute::Invariant);

// Second gauge potential: -(hbar^2/2) f^{n/4} Laplace_g(f^{-n/4}).
double potential_V2(const ConformalModel& model, const MassedConfiguration& cfg,
                    const FDScheme& scheme);

// Scalar curvature of g via the conformal Laplacian identity
// R_g = 4(n-1)/(n-2) f^{(n-2)/4} Laplace_g(f^{-(n-2)/4}).
double scalar_curvature(const ConformalModel& model, const MassedConfiguration& cfg,
                        const FDScheme& scheme);

// Potential of the flat-Laplacian representation:
// U = f (V1 - E) - (hbar^2/8) (n-2)/(n-1) f R_g.
double potential_U(const ConformalModel& model, const MassedConfiguration& cfg,
                   const FDScheme& scheme, double energy_const,
                   JacobianRoute route = JacobianRoute::Invariant);

// Apply the gauge-chain Hamiltonian matching the wave function's tag:
//   G1: -(1/2) lift(psi)
//   G2: -(1/2) Laplace_g psi + V1 psi
//   G3: -(1/2) div (1/f) grad psi + (V1 + V2) psi
//   S : -(1/2) flat Laplacian psi + U psi      (hbar = 1)
Complex hamiltonian_apply(Gauge gauge, const ConformalModel& model, const WaveFunctionModel& wf,
                          const MassedConfiguration& cfg, const FDScheme& scheme,
                          double energy_const = 0.0,
                          JacobianRoute route = JacobianRoute::Invariant);

// Difference check for second-order operators sharing their pure second
// derivative part and self-adjointness measure: (opB - opA) must act as one
// multiplication function, independent of the test function, equal to opB(1)
// when opA(1) = 0.
using PointOperator = std::function<Complex(const WaveEvaluator&, const MassedConfiguration&)>;

struct PdoCheckPoint {
    Complex mean_difference;     // averaged multiplication value at the point
    double function_spread;      // max pairwise deviation across test functions
    Complex op_b_on_one;         // opB applied to the constant function 1
};

std::vector<PdoCheckPoint> pdo_difference_check(const PointOperator& opA, const PointOperator& opB,
                                                const std::vector<WaveEvaluator>& testfns,
                                                const std::vector<MassedConfiguration>& points);

// 2D Laplace-Beltrami of a chart function under the pulled-back shape metric;
// the independent oracle for the lifted shape Laplacian.
Complex chart_laplace_beltrami(const ConformalModel& model,
                               const std::function<Complex(std::complex<double>)>& fn,
                               const ShapePoint& z, const Eigen::VectorXd& masses,
                               double h = 1e-4);

}  // namespace shapedyn
