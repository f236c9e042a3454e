#include "signet/lyapunov.hpp"

#include "signet/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <sstream>

namespace signet {

namespace {

constexpr double kStabilityTol = 1e-9;

void require_spd_q(const Eigen::MatrixXd& q) {
    if (q.rows() != q.cols()) throw PreconditionError("Q must be square");
    if ((q - q.transpose()).norm() > 1e-12 * std::max(1.0, q.norm()))
        throw PreconditionError("Q must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
    if (q.rows() > 0 && es.eigenvalues()(0) <= 0.0)
        throw PreconditionError("Q must be positive definite");
}

double min_real_eigenvalue(const Eigen::MatrixXd& a) {
    if (a.rows() == 0) return std::numeric_limits<double>::infinity();
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    return es.eigenvalues().real().minCoeff();
}

// Solves P R + R^T P = Q through the vectorized linear system; the sizes
// here are desk-scale, so the M^2 x M^2 LU is exact and deterministic.
Eigen::MatrixXd lyapunov_solve(const Eigen::MatrixXd& r, const Eigen::MatrixXd& q) {
    const int m = static_cast<int>(r.rows());
    if (m == 0) return Eigen::MatrixXd(0, 0);
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(m * m, m * m);
    // vec(P R) = (R^T kron I) vec(P), vec(R^T P) = (I kron R^T) vec(P)
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                system(i + m * j, i + m * k) += r(k, j);
                system(i + m * j, k + m * j) += r(k, i);
            }
    Eigen::VectorXd rhs(m * m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) rhs(i + m * j) = q(i, j);
    Eigen::VectorXd sol = system.partialPivLu().solve(rhs);
    Eigen::MatrixXd p(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) p(i, j) = sol(i + m * j);
    return 0.5 * (p + p.transpose());
}

LyapunovCertificate finish(const Eigen::MatrixXd& r, const Eigen::MatrixXd& q, double alpha) {
    LyapunovCertificate cert;
    cert.Q = q;
    cert.alpha = alpha;
    cert.P = lyapunov_solve(r, q);
    cert.residual = (cert.P * r + r.transpose() * cert.P - q).norm();
    if (cert.P.rows() > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cert.P, Eigen::EigenvaluesOnly);
        cert.lambda_min = es.eigenvalues()(0);
        cert.lambda_max = es.eigenvalues()(cert.P.rows() - 1);
    }
    return cert;
}

} // namespace

LyapunovCertificate solve_tree(const Eigen::MatrixXd& edge_laplacian, const Eigen::MatrixXd& Q) {
    require_spd_q(Q);
    if (Q.rows() != edge_laplacian.rows())
        throw PreconditionError("Q dimension does not match the edge Laplacian");
    double scale = std::max(1.0, edge_laplacian.norm());
    if (min_real_eigenvalue(edge_laplacian) <= kStabilityTol * scale)
        throw WrongTheoremError(
            "edge Laplacian has zero eigenvalues; use solve_shifted with a projector");
    return finish(edge_laplacian, Q, 0.0);
}

LyapunovCertificate solve_shifted(const Eigen::MatrixXd& edge_laplacian, const Eigen::MatrixXd& Q,
                                  double alpha, const Eigen::MatrixXd& projector) {
    require_spd_q(Q);
    if (alpha <= 0.0) throw PreconditionError("alpha must be positive");
    if (projector.rows() != edge_laplacian.rows() || projector.cols() != edge_laplacian.cols())
        throw PreconditionError("projector dimension does not match the edge Laplacian");
    Eigen::MatrixXd r = edge_laplacian + alpha * projector;
    double scale = std::max(1.0, r.norm());
    double lo = min_real_eigenvalue(r);
    if (lo <= kStabilityTol * scale) {
        std::ostringstream msg;
        msg << "shifted edge Laplacian keeps an eigenvalue at real part " << lo
            << "; the graph violates the certificate's structural hypotheses";
        throw StructuralError(msg.str());
    }
    return finish(r, Q, alpha);
}

CertificateReport validate_certificate(const LyapunovCertificate& cert,
                                       const Eigen::MatrixXd& edge_laplacian,
                                       const Eigen::MatrixXd& projector) {
    CertificateReport rep;
    const auto& p = cert.P;
    Eigen::MatrixXd lhs = p * edge_laplacian + edge_laplacian.transpose() * p;
    Eigen::MatrixXd rhs = cert.Q;
    if (cert.alpha > 0.0)
        rhs -= cert.alpha * (p * projector + projector.transpose() * p);
    rep.equation_defect = (lhs - rhs).norm();
    rep.symmetry_defect = (p - p.transpose()).norm();
    if (p.rows() > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p, Eigen::EigenvaluesOnly);
        rep.lambda_min = es.eigenvalues()(0);
    }
    return rep;
}

ModeConstants mode_constants(const LyapunovCertificate& next, const LyapunovCertificate& prev,
                             double k1) {
    if (k1 <= 0.0) throw PreconditionError("k1 must be positive");
    if (next.lambda_min <= 0.0 || prev.lambda_min <= 0.0)
        throw PreconditionError("mode_constants needs positive definite certificates");
    ModeConstants mc;
    mc.gamma = k1 / next.lambda_max;
    mc.omega = 1.0 + 2.0 * next.lambda_max / prev.lambda_min;
    mc.tau_min = std::log(mc.omega) / mc.gamma;
    return mc;
}

} // namespace signet
