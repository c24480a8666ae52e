#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vhs/exact/scalar.hpp"
#include "vhs/exact/subspace.hpp"
#include "vhs/hodge/endo.hpp"
#include "vhs/hodge/polarized_space.hpp"

namespace vhs {

/// Provenance of one basis element of a graded piece.
struct GradedBasisLabel {
  int r = 0;                  ///< element of g^{-r,r}
  int source_level = 0;       ///< p: the element maps level p ...
  int target_level = 0;       ///< ... to level p - r
  std::size_t source_index = 0;
  std::size_t target_index = 0;
  bool middle = false;        ///< from the self-paired block (2p - r = n)

  std::string to_string() const;
};

/// Brackets of basis elements: table[i][j] = coordinates of [X_i, Y_j] in g^{-(r+s)}.
using BracketTable = std::vector<std::vector<SparseVec>>;

/// The complexified Lie algebra of Q-infinitesimal isometries, graded by Hodge type.
///
/// g^{-r,r} (|r| <= n) consists of endomorphisms X with X(level p) in level p - r
/// and Q(Xu, v) + Q(u, Xv) = 0. Each piece has a canonical basis; every basis
/// element has a key entry equal to 1 that vanishes on all other basis elements
/// of its piece, so coordinates are read off from key entries.
class GradedLie {
 public:
  GradedLie() = default;
  explicit GradedLie(const HodgeNumbers& h, MiddleForm middle = MiddleForm::Diagonal);

  const PolarizedSpace& space() const { return space_; }
  const HodgeNumbers& hodge() const { return space_.hodge(); }
  int weight() const { return space_.weight(); }

  /// dim g^{-r,r}; zero for |r| > n.
  std::size_t piece_dim(int r) const;
  const std::vector<SparseEndo>& piece_basis(int r) const;
  const std::vector<GradedBasisLabel>& piece_labels(int r) const;

  /// sum of coords[i] * X_i in g^{-r,r}.
  SparseEndo element(int r, const Vec& coords) const;
  /// Coordinates of X in g^{-r,r}, or nullopt when X is not in that piece.
  std::optional<Vec> coordinates(int r, const SparseEndo& x) const;
  /// Coordinates read from key entries without checking membership.
  Vec key_coordinates(int r, const SparseEndo& x) const;

  /// Coordinates in g^{-(r+s)} of [x, y] for x in g^{-r}, y in g^{-s} given by coordinates.
  Vec bracket(int r, const Vec& x, int s, const Vec& y) const;
  /// Structure constants of [g^{-r}, g^{-s}] (computed once, then shared).
  const BracketTable& bracket_table(int r, int s) const;

  /// dim of the nilpotent part p = sum_{r >= 1} g^{-r,r}; equals dim D.
  std::size_t nilpotent_dim() const;
  /// Offset of g^{-r,r} inside the coordinates of p, for 1 <= r <= n.
  std::size_t nilpotent_offset(int r) const;
  /// dim of the whole algebra.
  std::size_t total_dim() const;

 private:
  struct Piece {
    std::vector<SparseEndo> basis;
    std::vector<GradedBasisLabel> labels;
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> key_index;
  };
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::unique_ptr<BracketTable>> tables;
  };

  const Piece& piece(int r) const;
  void build_piece(int r);

  PolarizedSpace space_;
  std::vector<Piece> pieces_;  // index r + n
  std::shared_ptr<Cache> cache_;
};

/// Dimension of the period domain: sum of dim g^{-r,r} over r >= 1.
std::size_t domain_dimension(const HodgeNumbers& h);

/// W_{I(k)} = sum_{1 <= r <= k} g^{-r,r}, as a subspace of the coordinates of p.
Subspace horizontal_subsystem(const GradedLie& lie, int k);

/// Full structure constants, keyed by (r, s); used to audit a constructed algebra.
using StructureConstants = std::map<std::pair<int, int>, BracketTable>;
StructureConstants structure_constants(const GradedLie& lie);

struct StructureReport {
  bool pass = true;
  std::size_t basis_checked = 0;
  std::size_t brackets_checked = 0;
  std::size_t jacobi_triples_checked = 0;
  std::string failure;  ///< first counterexample, empty on pass
};

struct StructureCheckOptions {
  bool jacobi = true;
  /// Jacobi is run on all basis triples when dim g does not exceed this; otherwise skipped.
  std::size_t jacobi_dim_limit = 80;
};

/// Checks Q-invariance, grading and membership of brackets, antisymmetry and Jacobi
/// against the given structure constants.
StructureReport verify_structure(const GradedLie& lie, const StructureConstants& table,
                                 const StructureCheckOptions& opts = {});
StructureReport verify_structure(const GradedLie& lie, const StructureCheckOptions& opts = {});

}  // namespace vhs
