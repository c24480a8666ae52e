#include "vhs/hodge/graded_lie.hpp"

#include <algorithm>

#include "vhs/error.hpp"

namespace vhs {

namespace {

enum class BlockKind { None, Free, Middle };

BlockKind block_kind(int n, int p, int r) {
  const int c = 2 * p - r;
  if (c > n) return BlockKind::Free;
  if (c == n) return BlockKind::Middle;
  return BlockKind::None;
}

// Sign relation on a middle block: symmetric when s(p - r) != s(p).
bool middle_symmetric(const PolarizedSpace& s, int p, int r) { return s.sign(p - r) != s.sign(p); }

std::size_t piece_dimension(const PolarizedSpace& s, int r) {
  const int n = s.weight();
  if (r < -n || r > n) return 0;
  std::size_t dim = 0;
  for (int p = 0; p <= n; ++p) {
    const int t = p - r;
    if (t < 0 || t > n) continue;
    const std::size_t a = s.level_dim(p);
    const std::size_t b = s.level_dim(t);
    switch (block_kind(n, p, r)) {
      case BlockKind::Free:
        dim += a * b;
        break;
      case BlockKind::Middle:
        dim += middle_symmetric(s, p, r) ? a * (a + 1) / 2 : (a > 0 ? a * (a - 1) / 2 : 0);
        break;
      case BlockKind::None:
        break;
    }
  }
  return dim;
}

}  // namespace

std::string GradedBasisLabel::to_string() const {
  return "g^{" + std::to_string(-r) + "," + std::to_string(r) + "}[" + std::to_string(source_level) + "->" +
         std::to_string(target_level) + "](" + std::to_string(source_index) + "," + std::to_string(target_index) +
         ")";
}

GradedLie::GradedLie(const HodgeNumbers& h, MiddleForm middle)
    : space_(h, middle), cache_(std::make_shared<Cache>()) {
  const int n = h.weight();
  pieces_.resize(static_cast<std::size_t>(2 * n + 1));
  for (int r = -n; r <= n; ++r) build_piece(r);
}

void GradedLie::build_piece(int r) {
  const int n = weight();
  const std::size_t dim = space_.dim();
  Piece& pc = pieces_[static_cast<std::size_t>(r + n)];
  auto add = [&](std::vector<SparseEndo::Entry> entries, GradedBasisLabel label) {
    pc.keys.emplace_back(entries.front().row, entries.front().col);
    pc.key_index[pc.keys.back()] = pc.basis.size();
    pc.basis.emplace_back(dim, std::move(entries));
    pc.labels.push_back(label);
  };
  for (int p = n; p >= 0; --p) {
    const int t = p - r;
    if (t < 0 || t > n) continue;
    const std::size_t a = space_.level_dim(p);
    const std::size_t b = space_.level_dim(t);
    if (a == 0 || b == 0) continue;
    const BlockKind kind = block_kind(n, p, r);
    if (kind == BlockKind::Free) {
      // X e_{p,al} = e_{t,be}; the dual entry sends e_{n-t, pi(be)} to c e_{n-p, pi(al)}.
      const int q = n - t;
      const Scalar c = fraction(-space_.sign(t), space_.sign(p));
      for (std::size_t al = 0; al < a; ++al) {
        for (std::size_t be = 0; be < b; ++be) {
          std::vector<SparseEndo::Entry> e;
          e.push_back({space_.index(t, be), space_.index(p, al), Scalar(1)});
          e.push_back({space_.index(n - p, space_.partner(p, al)), space_.index(q, space_.partner(t, be)), c});
          add(std::move(e), {r, p, t, al, be, false});
        }
      }
    } else if (kind == BlockKind::Middle) {
      // Y_{ga,al} = X_{(t, pi(ga)), (p, al)} with s(t) Y_{ga,al} + s(p) Y_{al,ga} = 0.
      const bool sym = middle_symmetric(space_, p, r);
      for (std::size_t al = 0; al < a; ++al) {
        for (std::size_t ga = 0; ga <= al; ++ga) {
          if (ga == al && !sym) continue;
          std::vector<SparseEndo::Entry> e;
          e.push_back({space_.index(t, space_.partner(p, ga)), space_.index(p, al), Scalar(1)});
          if (ga != al)
            e.push_back({space_.index(t, space_.partner(p, al)), space_.index(p, ga), Scalar(sym ? 1 : -1)});
          add(std::move(e), {r, p, t, al, space_.partner(p, ga), true});
        }
      }
    }
  }
  if (pc.basis.size() != piece_dimension(space_, r))
    throw CheckFailure("graded piece " + std::to_string(r) + " has unexpected dimension");
}

const GradedLie::Piece& GradedLie::piece(int r) const {
  static const Piece empty;
  const int n = weight();
  if (r < -n || r > n || pieces_.empty()) return empty;
  return pieces_[static_cast<std::size_t>(r + n)];
}

std::size_t GradedLie::piece_dim(int r) const { return piece(r).basis.size(); }
const std::vector<SparseEndo>& GradedLie::piece_basis(int r) const { return piece(r).basis; }
const std::vector<GradedBasisLabel>& GradedLie::piece_labels(int r) const { return piece(r).labels; }

SparseEndo GradedLie::element(int r, const Vec& coords) const {
  const Piece& pc = piece(r);
  if (coords.size() != pc.basis.size()) throw PreconditionError("element: coordinate length mismatch");
  std::vector<SparseEndo::Entry> entries;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (const auto& e : pc.basis[i].entries()) entries.push_back({e.row, e.col, coords[i] * e.value});
  }
  return SparseEndo(space_.dim(), std::move(entries));
}

Vec GradedLie::key_coordinates(int r, const SparseEndo& x) const {
  const Piece& pc = piece(r);
  Vec coords(pc.basis.size());
  for (const auto& e : x.entries()) {
    auto it = pc.key_index.find({e.row, e.col});
    if (it != pc.key_index.end()) coords[it->second] = e.value;
  }
  return coords;
}

std::optional<Vec> GradedLie::coordinates(int r, const SparseEndo& x) const {
  if (x.dim() != space_.dim()) throw PreconditionError("coordinates: dimension mismatch");
  Vec c = key_coordinates(r, x);
  if (!(element(r, c) == x)) return std::nullopt;
  return c;
}

const BracketTable& GradedLie::bracket_table(int r, int s) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->tables[{r, s}];
  if (!slot) {
    const Piece& a = piece(r);
    const Piece& b = piece(s);
    const bool in_range = std::abs(r + s) <= weight();
    auto table = std::make_unique<BracketTable>(a.basis.size(), std::vector<SparseVec>(b.basis.size()));
    if (in_range) {
      for (std::size_t i = 0; i < a.basis.size(); ++i)
        for (std::size_t j = 0; j < b.basis.size(); ++j)
          (*table)[i][j] = to_sparse(key_coordinates(r + s, commutator(a.basis[i], b.basis[j])));
    }
    slot = std::move(table);
  }
  return *slot;
}

Vec GradedLie::bracket(int r, const Vec& x, int s, const Vec& y) const {
  if (x.size() != piece_dim(r) || y.size() != piece_dim(s)) throw PreconditionError("bracket: coordinate length mismatch");
  Vec out(piece_dim(r + s));
  if (out.empty()) return out;
  const BracketTable& t = bracket_table(r, s);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar f = x[i] * y[j];
      for (const auto& [k, v] : t[i][j]) out[k] += f * v;
    }
  }
  return out;
}

std::size_t GradedLie::nilpotent_dim() const {
  std::size_t d = 0;
  for (int r = 1; r <= weight(); ++r) d += piece_dim(r);
  return d;
}

std::size_t GradedLie::nilpotent_offset(int r) const {
  if (r < 1 || r > weight()) throw PreconditionError("nilpotent_offset: grade out of range");
  std::size_t d = 0;
  for (int q = 1; q < r; ++q) d += piece_dim(q);
  return d;
}

std::size_t GradedLie::total_dim() const {
  std::size_t d = 0;
  for (int r = -weight(); r <= weight(); ++r) d += piece_dim(r);
  return d;
}

std::size_t domain_dimension(const HodgeNumbers& h) {
  const PolarizedSpace s(h);
  std::size_t d = 0;
  for (int r = 1; r <= h.weight(); ++r) d += piece_dimension(s, r);
  return d;
}

Subspace horizontal_subsystem(const GradedLie& lie, int k) {
  if (k < 1 || k > lie.weight()) throw PreconditionError("horizontal_subsystem: need 1 <= k <= n");
  std::vector<std::size_t> idx;
  for (int r = 1; r <= k; ++r)
    for (std::size_t i = 0; i < lie.piece_dim(r); ++i) idx.push_back(lie.nilpotent_offset(r) + i);
  return Subspace::coordinate(lie.nilpotent_dim(), idx);
}

StructureConstants structure_constants(const GradedLie& lie) {
  StructureConstants out;
  const int n = lie.weight();
  for (int r = -n; r <= n; ++r)
    for (int s = -n; s <= n; ++s) out[{r, s}] = lie.bracket_table(r, s);
  return out;
}

namespace {

std::string basis_name(const GradedLie& lie, int r, std::size_t i) {
  return lie.piece_labels(r)[i].to_string();
}

}  // namespace

StructureReport verify_structure(const GradedLie& lie, const StructureConstants& table,
                                 const StructureCheckOptions& opts) {
  StructureReport rep;
  const int n = lie.weight();
  auto fail = [&](std::string msg) {
    rep.pass = false;
    rep.failure = std::move(msg);
    return rep;
  };

  const SparseEndo gram = SparseEndo::from_dense(lie.space().gram());
  for (int r = -n; r <= n; ++r) {
    for (std::size_t i = 0; i < lie.piece_dim(r); ++i) {
      const SparseEndo& x = lie.piece_basis(r)[i];
      if (!(x.transpose() * gram + gram * x).is_zero())
        return fail("basis element " + basis_name(lie, r, i) + " is not Q-infinitesimally isometric");
      for (const auto& e : x.entries()) {
        if (lie.space().level_of(e.col) - lie.space().level_of(e.row) != r)
          return fail("basis element " + basis_name(lie, r, i) + " has the wrong Hodge type");
      }
      ++rep.basis_checked;
    }
  }

  for (const auto& [rs, tab] : table) {
    const auto [r, s] = rs;
    if (tab.size() != lie.piece_dim(r)) return fail("structure table shape mismatch");
    for (std::size_t i = 0; i < tab.size(); ++i) {
      if (tab[i].size() != lie.piece_dim(s)) return fail("structure table shape mismatch");
      for (std::size_t j = 0; j < tab[i].size(); ++j) {
        const SparseEndo actual = commutator(lie.piece_basis(r)[i], lie.piece_basis(s)[j]);
        const std::string where = "[" + basis_name(lie, r, i) + ", " + basis_name(lie, s, j) + "]";
        if (std::abs(r + s) > n) {
          if (!actual.is_zero() || !tab[i][j].empty()) return fail("bracket " + where + " leaves the grading");
        } else {
          Vec c(lie.piece_dim(r + s));
          for (const auto& [k, v] : tab[i][j]) {
            if (k >= c.size()) return fail("bracket " + where + " has an out-of-range coordinate");
            c[k] = v;
          }
          if (!(lie.element(r + s, c) == actual))
            return fail("bracket " + where + " does not match its structure constants in g^{" +
                        std::to_string(-(r + s)) + "," + std::to_string(r + s) + "}");
        }
        auto rev = table.find({s, r});
        if (rev != table.end()) {
          SparseVec neg = rev->second[j][i];
          for (auto& e : neg) e.second = -e.second;
          if (neg != tab[i][j]) return fail("bracket " + where + " is not antisymmetric");
        }
        ++rep.brackets_checked;
      }
    }
  }

  if (!opts.jacobi || lie.total_dim() > opts.jacobi_dim_limit) return rep;

  struct Ref {
    int r;
    std::size_t i;
  };
  std::vector<Ref> all;
  for (int r = -n; r <= n; ++r)
    for (std::size_t i = 0; i < lie.piece_dim(r); ++i) all.push_back({r, i});

  auto lookup = [&](int r, std::size_t i, int s, std::size_t j) -> const SparseVec* {
    auto it = table.find({r, s});
    if (it == table.end()) return nullptr;
    return &it->second[i][j];
  };
  // Adds coef * [[x, y], z] into acc.
  auto nested = [&](std::map<std::size_t, Scalar>& acc, const Ref& x, const Ref& y, const Ref& z) {
    const int g = x.r + y.r;
    if (std::abs(g) > n) return;
    const SparseVec* xy = lookup(x.r, x.i, y.r, y.i);
    if (!xy) return;
    for (const auto& [k, v] : *xy) {
      const SparseVec* kz = lookup(g, k, z.r, z.i);
      if (!kz) continue;
      for (const auto& [m, w] : *kz) acc[m] += v * w;
    }
  };
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      for (std::size_t c = b + 1; c < all.size(); ++c) {
        std::map<std::size_t, Scalar> acc;
        nested(acc, all[a], all[b], all[c]);
        nested(acc, all[b], all[c], all[a]);
        nested(acc, all[c], all[a], all[b]);
        for (const auto& [k, v] : acc) {
          if (sgn(v) != 0)
            return fail("Jacobi identity fails on (" + basis_name(lie, all[a].r, all[a].i) + ", " +
                        basis_name(lie, all[b].r, all[b].i) + ", " + basis_name(lie, all[c].r, all[c].i) + ")");
        }
        ++rep.jacobi_triples_checked;
      }
    }
  }
  return rep;
}

StructureReport verify_structure(const GradedLie& lie, const StructureCheckOptions& opts) {
  return verify_structure(lie, structure_constants(lie), opts);
}

}  // namespace vhs
