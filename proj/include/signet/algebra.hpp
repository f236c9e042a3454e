#ifndef SIGNET_ALGEBRA_HPP
#define SIGNET_ALGEBRA_HPP

#include "signet/graph.hpp"

#include <Eigen/Dense>

namespace signet {

/// Incidence matrices and the two Laplacians of one mode.
/// laplacian = in_incidence * incidence^T (N x N),
/// edge_laplacian = incidence^T * in_incidence (M x M).
struct ModeMatrices {
    Eigen::MatrixXd incidence;       // N x M, entries in {-1,0,+1}
    Eigen::MatrixXd in_incidence;    // N x M, one nonzero per column (edge head)
    Eigen::MatrixXd laplacian;       // N x N
    Eigen::MatrixXd edge_laplacian;  // M x M
};

/// Column k for edge (tail -> head, sign): incidence gets +1 at the tail and
/// -sign at the head; in_incidence gets -sign at the head only.
ModeMatrices build_matrices(const SignedDigraph& g);

/// Multiplicity of the zero eigenvalue predicted from graph structure:
/// M - N + l_1 + l_2SB in the multi-leader case, which reduces to M - N + 1
/// for balanced graphs and for unbalanced graphs keeping a root node or an
/// SB-rooted SCC, and to M - N otherwise. Requires weak connectivity.
int predicted_zero_multiplicity(const SignedDigraph& g, const BalanceVerdict& balance,
                                const LeaderStructure& leaders);

/// Zero-eigenvalue structure of an edge Laplacian.
///
/// The algebraic multiplicity is the stabilized nullity of successive powers
/// of the matrix (rank-revealing SVD at the relative tolerance), which stays
/// exact even when the zero eigenvalue is defective and the raw eigenvalues
/// scatter to ~sqrt(machine eps). The projector maps onto the generalized
/// zero eigenspace along the complementary invariant subspace and is real by
/// construction.
struct ZeroStructure {
    int algebraic = 0;   // xi
    int geometric = 0;
    Eigen::MatrixXd projector;     // M x M, rank == algebraic
    Eigen::VectorXcd eigenvalues;  // all M eigenvalues, unsorted
    double zero_tol = 0;           // relative threshold actually used
};

/// Throws AmbiguousSpectrumError when a singular-value cluster straddles the
/// tolerance (within a factor 10 on either side).
ZeroStructure zero_structure(const Eigen::MatrixXd& edge_laplacian, double zero_tol = 1e-9);

/// e = incidence^T * x.
Eigen::VectorXd edge_states(const Eigen::MatrixXd& incidence, const Eigen::VectorXd& x);

/// Weighted edge average: the projector component of e.
Eigen::VectorXd edge_average(const ZeroStructure& zs, const Eigen::VectorXd& e);

/// Synchronization errors: e minus its edge average.
Eigen::VectorXd sync_error(const ZeroStructure& zs, const Eigen::VectorXd& e);

} // namespace signet

#endif
