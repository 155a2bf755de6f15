#pragma once

#include <functional>
#include <string>
#include <vector>

#include "assoc/poset.hpp"

namespace assoc::poset {

/// A polytopal cell complex given by its face poset.  Cells are the poset
/// elements, ranks are cell dimensions, and the top cells are the maximal
/// elements.  There need not be a single greatest cell.
class CellComplex {
 public:
  CellComplex() = default;
  explicit CellComplex(FacePoset cells) : cells_(std::move(cells)) {}

  const FacePoset& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  std::vector<Index> top_cells() const { return cells_.maximal(); }

 private:
  FacePoset cells_;
};

/// Downward closure of `generators` inside `p`, with the induced order.
CellComplex subcomplex(const FacePoset& p, const std::vector<Index>& generators);

/// The whole face poset of a polytope viewed as a complex with one top cell.
inline CellComplex as_complex(FacePoset p) { return CellComplex(std::move(p)); }

/// Downward closure of the codimension-one cells lying in exactly one top
/// cell.  Rejects complexes whose top cells have different ranks.
CellComplex boundary_subcomplex(const CellComplex& c);

/// Maps a cell label of a boundary to the block it belongs to.
using BlockKey = std::function<std::string(const std::string& label)>;

/// Labels used for the cells a cone adds.
inline const std::string kConeApex = "cone{apex}";
inline const std::string kConeTop = "cone{top}";
std::string cone_cell_label(const std::string& block);

/// Cone over a ball-like complex.
///
/// Without a key, one cell apex*G is added for each cell G of the boundary
/// (rank(G)+1), plus the apex and a single top cell.  With a key, boundary
/// cells sharing a key are merged into one block and receive a single cone
/// cell of rank (largest rank in the block)+1; this is the cone over a
/// coarser cell structure of the same boundary.  An empty complex cones to a
/// point.
CellComplex cone_complex(const CellComplex& c, const BlockKey& key = {});

/// The key describing which cone cell carries each cell of cone_complex(c, key):
/// the apex and cone cells carry themselves, boundary cells of c carry the
/// cone cell of their block, and interior cells of c carry the top.
BlockKey cone_carrier(const CellComplex& c, const BlockKey& key = {});

/// Label of a product cell.
std::string product_label(const std::string& a, const std::string& b);
/// Splits a label produced by product_label.
std::pair<std::string, std::string> split_product_label(const std::string& label);

/// Cartesian product: pairs of cells, componentwise order, additive rank.
CellComplex product_complex(const CellComplex& a, const CellComplex& b);

/// Label-wise union.  Shared labels must carry equal ranks.
CellComplex union_complex(const CellComplex& a, const CellComplex& b);

}  // namespace assoc::poset
