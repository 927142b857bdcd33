#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "barylab/errors.hpp"

namespace barylab::lie {

/// Tolerance below which alpha(v) counts as vanishing on a unit vector.
inline constexpr double kSingularTol = 1e-9;

/// Dimension bookkeeping for X = SL(m,R)/SO(m).
struct SlConstants {
  int m = 0;
  int n = 0;              // dim X = m(m+1)/2 - 1
  int r = 0;              // rank = m - 1
  int threshold = 0;      // n - r + 2
  int splitting_rank = 0; // m(m-1)/2
};

SlConstants sl_constants(int m);

enum class Family { A, B, C, D };

const char* family_name(Family f);

/// Reduced root system in standard coordinates. Roots are stored as the
/// positive half; the full system is the positive set and its negatives.
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  std::vector<Eigen::VectorXd> positive_roots;  // each of size `rank`
  std::vector<int> multiplicities;              // dim of the root space

  int num_positive() const { return static_cast<int>(positive_roots.size()); }
};

/// Standard realization of A/B/C/D at the given rank. Type A_{r} is expressed
/// in an orthonormal basis of the sum-zero hyperplane of R^{r+1}, chosen so
/// that it matches the root coordinates of build_cartan_frame(r+1) exactly.
/// D is accepted for rank >= 2 (D_2 and D_3 coincide with A_1 x A_1 and A_3).
RootSystem root_system(Family family, int rank);

/// Checks closure of the root set under reflections in root hyperplanes and
/// integrality of the Cartan pairings.
bool crystallographic_closure(const RootSystem& rs, double tol = kSingularTol);

/// Adapted orthonormal basis of p = T_o X for sl(m,R): the traceless diagonal
/// subalgebra a, plus one symmetric/antisymmetric pair of unit blocks per
/// positive root alpha_{ij}(H) = h_i - h_j.  The inner product everywhere is
/// <U,V> = trace(U V).
struct CartanFrame {
  int m = 0;
  int n = 0;
  int r = 0;

  std::vector<Eigen::MatrixXd> a_basis;  // r traceless diagonal matrices

  struct RootBlock {
    int i = 0;  // 0-based indices, i < j
    int j = 0;
    Eigen::VectorXd h;                    // H_alpha as an m-vector of diagonal entries
    std::vector<Eigen::MatrixXd> p_basis; // (E_ij + E_ji)/sqrt(2)
    std::vector<Eigen::MatrixXd> k_basis; // (E_ij - E_ji)/sqrt(2)
  };
  std::vector<RootBlock> blocks;

  /// alpha(v) for the block's root, v given by its diagonal entries.
  double root_value(int block, const Eigen::VectorXd& diag) const {
    return diag(blocks[block].i) - diag(blocks[block].j);
  }

  /// Coordinates of a traceless symmetric matrix in the frame basis
  /// (a_basis entries first, then one coordinate per root block).
  Eigen::VectorXd coords(const Eigen::MatrixXd& sym) const;
  Eigen::MatrixXd matrix(const Eigen::VectorXd& coords) const;

  /// First coordinate index of block b in coords(); blocks have dim 1 here.
  int block_offset(int b) const { return r + b; }

  /// Expresses an element of a (given by diagonal entries) in a_basis coords.
  Eigen::VectorXd a_coords(const Eigen::VectorXd& diag) const;
  Eigen::VectorXd diag_from_a_coords(const Eigen::VectorXd& coords) const;
};

/// Builds the frame for 2 <= m <= 12; throws SizeError outside that range.
CartanFrame build_cartan_frame(int m);

/// Gram-matrix and dimension checks for a frame; max deviation from identity.
double frame_orthonormality_residual(const CartanFrame& frame);

/// Unit vector in a together with its vanishing-root list.
struct ChamberVector {
  Eigen::VectorXd diag;        // m entries, sum 0
  bool unit = false;
  std::vector<int> vanishing;  // block indices with |alpha(v)| <= tol

  bool regular() const { return vanishing.empty(); }
};

ChamberVector make_chamber_vector(const CartanFrame& frame, Eigen::VectorXd diag,
                                  double tol = kSingularTol);

struct RootActionReport {
  double max_residual = 0.0;
  bool ok = false;
  double tol = 0.0;
};

/// Checks [u,v] = -alpha(v) (I-theta)(I+theta)^{-1} u on every k-block basis
/// element against the a-basis plus seeded random v in a.  A failure is
/// reported, not thrown.
RootActionReport verify_root_action(const CartanFrame& frame, int random_samples = 5,
                                    std::uint64_t seed = 1, double tol = 1e-12);

/// Unit vector proportional to the sum of the positive root vectors; regular.
ChamberVector chamber_barycenter(const CartanFrame& frame);

/// Most singular chamber-face projection reachable from v: enumerates the
/// faces of the closed Weyl chamber containing v, projects v onto each face
/// span (block averaging in sorted coordinates), keeps projections within
/// angular distance rho, and picks the one with the most vanishing roots
/// (ties: smaller angle, then smaller face mask).  The selection is iterated
/// to a fixed point so the map is exactly idempotent.
ChamberVector maximally_singular_near(const CartanFrame& frame, const ChamberVector& v,
                                      double rho);

/// Orthonormal basis of Q = sum of p_alpha over positive roots with
/// alpha(v*) != 0, as a subset of the frame's p-blocks.
struct RootSpanBasis {
  std::vector<int> block_indices;
  std::vector<Eigen::MatrixXd> basis;
  int dim = 0;
};

RootSpanBasis orthogonal_root_sum(const CartanFrame& frame, const ChamberVector& v_star);

/// The type-A root system whose coordinates agree with this frame's roots.
RootSystem frame_root_system(const CartanFrame& frame);

/// Coordinates of a ChamberVector in the a_basis (for use with RootSystem).
Eigen::VectorXd chamber_vector_coords(const CartanFrame& frame, const ChamberVector& v);

}  // namespace barylab::lie
