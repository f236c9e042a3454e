#include "signet/algebra.hpp"

#include "signet/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <sstream>

namespace signet {

ModeMatrices build_matrices(const SignedDigraph& g) {
    auto violations = validate(g);
    if (!violations.empty())
        throw PreconditionError("invalid graph: " + violations.front());

    const int n = g.num_nodes();
    const int m = g.num_edges();
    ModeMatrices mm;
    mm.incidence = Eigen::MatrixXd::Zero(n, m);
    mm.in_incidence = Eigen::MatrixXd::Zero(n, m);
    for (int k = 0; k < m; ++k) {
        const auto& e = g.edges[k];
        mm.incidence(e.tail, k) = +1.0;
        mm.incidence(e.head, k) = e.sign > 0 ? -1.0 : +1.0;
        mm.in_incidence(e.head, k) = e.sign > 0 ? -1.0 : +1.0;
    }
    mm.laplacian = mm.in_incidence * mm.incidence.transpose();
    mm.edge_laplacian = mm.incidence.transpose() * mm.in_incidence;
    return mm;
}

int predicted_zero_multiplicity(const SignedDigraph& g, const BalanceVerdict& balance,
                                const LeaderStructure& leaders) {
    if (!is_weakly_connected(g))
        throw PreconditionError("zero-multiplicity prediction needs a weakly connected graph");
    const int n = g.num_nodes();
    const int m = g.num_edges();
    const int l1 = static_cast<int>(leaders.root_nodes.size());
    const int l2sb = static_cast<int>(leaders.sb_rooted_sccs.size());
    if (leaders.group_count() > 1) return m - n + l1 + l2sb;
    if (balance.balanced) return m - n + 1;
    if (l1 + l2sb >= 1) return m - n + 1;
    return m - n;  // unbalanced, single SUB-rooted SCC, no root
}

namespace {

// Nullity at the relative tolerance; faults when the singular spectrum does
// not separate cleanly around it.
int checked_nullity(const Eigen::MatrixXd& a, double zero_tol) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& s = svd.singularValues();
    const double scale = std::max(1.0, s.size() > 0 ? s(0) : 0.0);
    int nullity = 0;
    for (int i = 0; i < s.size(); ++i) {
        double rel = s(i) / scale;
        if (rel < zero_tol) ++nullity;
        if (rel > zero_tol / 10.0 && rel < zero_tol * 10.0) {
            std::ostringstream msg;
            msg << "singular value " << rel << " straddles zero tolerance " << zero_tol;
            throw AmbiguousSpectrumError(msg.str());
        }
    }
    return nullity;
}

} // namespace

ZeroStructure zero_structure(const Eigen::MatrixXd& edge_laplacian, double zero_tol) {
    if (edge_laplacian.rows() != edge_laplacian.cols())
        throw PreconditionError("edge Laplacian must be square");
    const int m = static_cast<int>(edge_laplacian.rows());

    ZeroStructure zs;
    zs.zero_tol = zero_tol;
    zs.projector = Eigen::MatrixXd::Zero(m, m);
    zs.eigenvalues = Eigen::VectorXcd::Zero(m);
    if (m == 0) return zs;

    Eigen::EigenSolver<Eigen::MatrixXd> es(edge_laplacian, /*computeEigenvectors=*/false);
    zs.eigenvalues = es.eigenvalues();

    zs.geometric = checked_nullity(edge_laplacian, zero_tol);
    zs.algebraic = zs.geometric;
    if (zs.geometric == 0) return zs;

    // Grow the power until the nullity stabilizes at the algebraic
    // multiplicity (Jordan chains for the zero eigenvalue are short).
    Eigen::MatrixXd power = edge_laplacian;
    while (zs.algebraic < m) {
        Eigen::MatrixXd next = power * edge_laplacian;
        int nullity = checked_nullity(next, zero_tol);
        if (nullity == zs.algebraic) break;
        power = std::move(next);
        zs.algebraic = nullity;
    }

    // Basis of the generalized zero eigenspace (null space of the power) and
    // of the complementary invariant subspace (its range); the projector is
    // the identity on the first block in that basis.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(power, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const int xi = zs.algebraic;
    Eigen::MatrixXd basis(m, m);
    basis.leftCols(xi) = svd.matrixV().rightCols(xi);
    basis.rightCols(m - xi) = svd.matrixU().leftCols(m - xi);
    Eigen::MatrixXd selector = Eigen::MatrixXd::Zero(m, m);
    selector.topLeftCorner(xi, xi).setIdentity();
    zs.projector = basis * selector * basis.partialPivLu().solve(Eigen::MatrixXd::Identity(m, m));
    return zs;
}

Eigen::VectorXd edge_states(const Eigen::MatrixXd& incidence, const Eigen::VectorXd& x) {
    if (incidence.rows() != x.size())
        throw PreconditionError("edge_states: state dimension does not match node count");
    return incidence.transpose() * x;
}

Eigen::VectorXd edge_average(const ZeroStructure& zs, const Eigen::VectorXd& e) {
    if (zs.projector.cols() != e.size())
        throw PreconditionError("edge_average: dimension mismatch");
    return zs.projector * e;
}

Eigen::VectorXd sync_error(const ZeroStructure& zs, const Eigen::VectorXd& e) {
    if (zs.projector.cols() != e.size())
        throw PreconditionError("sync_error: dimension mismatch");
    return e - zs.projector * e;
}

} // namespace signet
