#ifndef SIGNET_LYAPUNOV_HPP
#define SIGNET_LYAPUNOV_HPP

#include "signet/algebra.hpp"

#include <Eigen/Dense>

namespace signet {

/// Strict Lyapunov certificate for one mode: P solves
///   P L_e + L_e^T P = Q                      (alpha == 0, nonsingular L_e)
///   P (L_e + a*Pi) + (L_e + a*Pi)^T P = Q    (alpha == a > 0, shifted)
struct LyapunovCertificate {
    Eigen::MatrixXd P;
    Eigen::MatrixXd Q;
    double alpha = 0.0;
    double residual = 0.0;  // Frobenius defect of the defining equation
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

/// Direct Lyapunov solve for an edge Laplacian without zero eigenvalues
/// (directed spanning tree, or the zero-multiplicity-0 unbalanced case).
/// Throws WrongTheoremError when the Laplacian is singular.
LyapunovCertificate solve_tree(const Eigen::MatrixXd& edge_laplacian, const Eigen::MatrixXd& Q);

/// Shifted solve for edge Laplacians with zero eigenvalues: a single scalar
/// alpha applied through the spectral projector. Throws StructuralError when
/// the shifted matrix is not positively stable (the graph breaks the
/// certificate's structural hypotheses).
LyapunovCertificate solve_shifted(const Eigen::MatrixXd& edge_laplacian, const Eigen::MatrixXd& Q,
                                  double alpha, const Eigen::MatrixXd& projector);

/// Independent recomputation of the certificate's defining equation.
struct CertificateReport {
    double equation_defect = 0.0;
    double symmetry_defect = 0.0;
    double lambda_min = 0.0;
};

CertificateReport validate_certificate(const LyapunovCertificate& cert,
                                       const Eigen::MatrixXd& edge_laplacian,
                                       const Eigen::MatrixXd& projector);

/// Switching constants for a consecutive mode pair (prev -> next).
struct ModeConstants {
    double gamma = 0.0;    // decay rate of the incoming mode, k1 / lambda_max(P_next)
    double omega = 0.0;    // jump amplification, 1 + 2 lambda_max(P_next) / lambda_min(P_prev)
    double tau_min = 0.0;  // minimal admissible dwell time, ln(omega) / gamma
};

ModeConstants mode_constants(const LyapunovCertificate& next, const LyapunovCertificate& prev,
                             double k1);

} // namespace signet

#endif
