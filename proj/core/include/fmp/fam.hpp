/**
 * @file fam.hpp
 *
 * Fuzzy associative matrices and the two Mamdani (min-max) inference stages.
 *
 *   FAM1: (first corner label, second corner label) -> 1-D edge descriptor, one table per axis.
 *         Only the 55 ordered pairs row <= column exist, since corners are ordered u <= u'.
 *   FAM2: (y edge descriptor, x edge descriptor) -> 2-D position descriptor, all 15 x 15 pairs.
 *
 * Only fragments of both tables are published. The remaining cells are completed by reflection
 * (left/right and above/below) and two fill rules; every completed cell records its provenance.
 * Completion throws InternalInconsistency if any derived cell disagrees with a fixed one.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmp/descriptors.hpp"
#include "fmp/fuzzy_values.hpp"
#include "fmp/membership.hpp"

namespace fmp {

enum class Provenance : std::uint8_t {
  fragment,  ///< printed in the published fragment
  mirror,    ///< reflection of a fragment cell
  rule,      ///< produced by a fill rule, or the reflection of such a cell
  imported,  ///< loaded from a grid file
};

std::string_view to_string(Provenance p);

/// Corner-pair table for one axis. Cells with row > column do not exist.
class Fam1Table {
 public:
  explicit Fam1Table(Axis axis) : _axis(axis) {}

  Axis axis() const { return _axis; }

  /// nullopt for row > column and for cells not (yet) filled.
  std::optional<EdgeDescriptor> cell(PointLabel row, PointLabel column) const;
  Provenance provenance(PointLabel row, PointLabel column) const;
  /// Throws InternalInconsistency for row > column.
  void set(PointLabel row, PointLabel column, EdgeDescriptor value, Provenance provenance);

  /// True when all 55 ordered cells are filled.
  bool complete() const;

 private:
  struct Cell {
    std::optional<EdgeDescriptor> value;
    Provenance provenance = Provenance::fragment;
  };
  Axis _axis;
  std::array<std::array<Cell, kPointLabelCount>, kPointLabelCount> _cells{};
};

/// Edge-pair table: rows are y-axis edge descriptors, columns x-axis edge descriptors.
class Fam2Table {
 public:
  static constexpr std::size_t kSize = EdgeDescriptor::kCount;

  std::optional<PositionDescriptor> cell(EdgeDescriptor row_y, EdgeDescriptor column_x) const;
  Provenance provenance(EdgeDescriptor row_y, EdgeDescriptor column_x) const;
  void set(EdgeDescriptor row_y, EdgeDescriptor column_x, PositionDescriptor value, Provenance provenance);
  bool complete() const;

 private:
  struct Cell {
    std::optional<PositionDescriptor> value;
    Provenance provenance = Provenance::fragment;
  };
  std::array<std::array<Cell, kSize>, kSize> _cells{};
};

/// A published cell, in the x-axis spelling for FAM1 ("fl", "cr", "CR/L").
struct Fam1FragmentCell {
  PointLabel row;
  PointLabel column;
  EdgeDescriptor value;
};

struct Fam2FragmentCell {
  EdgeDescriptor row_y;
  EdgeDescriptor column_x;
  PositionDescriptor value;
};

/// The 35 cells of the published FAM1 fragment (rows fl..er, columns fl..cr, upper triangle).
const std::vector<Fam1FragmentCell> &fam1_fragment();
/// The 63 cells of the published FAM2 fragment (rows FA/A..LO/V, columns CL/L..LO/H).
const std::vector<Fam2FragmentCell> &fam2_fragment();

/// Fragment cells, then reflection m(d) with FAM1(d1, d2) = mirror(FAM1(m(d2), m(d1))), then
/// LO for any corner pair that starts at or beyond close-low and ends at or beyond close-high.
/// The y-axis table is the same table under the l/a, r/b, L/A, R/B, H/V renaming.
Fam1Table build_fam1(Axis axis);

/// Fragment cells; FA/L and NE/L columns of the A/V rows by the outermost-locus rule (locus is
/// the outermost of row and column loci, orientation copied from the row's CL/L cell); then
/// R columns by left/right reflection and B rows by above/below reflection.
Fam2Table build_fam2();

struct FamTables {
  Fam1Table x = Fam1Table(Axis::x);
  Fam1Table y = Fam1Table(Axis::y);
  Fam2Table two;

  /// Built with build_fam1 / build_fam2. Constructed once and cached.
  static const FamTables &standard();
};

/// Mamdani inference over the corner pair: mu_d = max over cells equal to d of
/// min(mu_first, mu_second). Pairs with row > column are skipped.
EdgeMemberships infer_1d(const PointMemberships &first, const PointMemberships &second, const Fam1Table &fam);

/// mu_d = max over FAM2 cells equal to d of min(mu_x, mu_y).
FuzzyDescriptorVector infer_2d(const EdgeMemberships &x, const EdgeMemberships &y, const Fam2Table &fam);

/// Both FAM stages joined into one table indexed by the four corner labels (x, x', y, y').
class FusedLookup {
 public:
  static FusedLookup fuse(const FamTables &tables);

  /// nullopt when x > x' or y > y' (or the underlying cell is missing).
  std::optional<PositionDescriptor> operator()(PointLabel x_first, PointLabel x_second, PointLabel y_first,
                                               PointLabel y_second) const;

 private:
  static constexpr std::uint8_t kInvalid = 0xff;
  static constexpr std::size_t kN = kPointLabelCount;
  std::array<std::uint8_t, kN * kN * kN * kN> _cells{};
};

/// Checks that every published fragment cell is reproduced and that both tables are closed
/// under their reflections. Returns human-readable violations, empty when sound.
std::vector<std::string> check_fam_tables(const FamTables &tables);

/// Relation of `box` to `reference`: relativize, fuzzify the four corners, infer per axis,
/// then infer the 2-D descriptor. Two-stage path.
FuzzyDescriptorVector describe_pair(const BoundingBox &box, const BoundingBox &reference,
                                    const PartitionPair &partitions, const FamTables &tables);

/// Same relation through the fused lookup. Identical output to the two-stage path.
FuzzyDescriptorVector describe_pair(const BoundingBox &box, const BoundingBox &reference,
                                    const PartitionPair &partitions, const FusedLookup &fused);

/// Partition pair and tables bundled with their fused lookup.
class Reasoner {
 public:
  Reasoner();
  Reasoner(PartitionPair partitions, FamTables tables);

  const PartitionPair &partitions() const { return _partitions; }
  const FamTables &tables() const { return _tables; }
  const FusedLookup &fused() const { return _fused; }

  /// Fused path.
  FuzzyDescriptorVector describe(const BoundingBox &box, const BoundingBox &reference) const;
  FuzzyDescriptorVector describe_two_stage(const BoundingBox &box, const BoundingBox &reference) const;

 private:
  PartitionPair _partitions;
  FamTables _tables;
  FusedLookup _fused;
};

/// Plain-text grids: optional '#' comment lines, a header of column labels, then one line per
/// row starting with its label. Cells are "LOCUS/ORIENT" (or edge names), "--" where undefined.
std::string dump_grid(const Fam1Table &table);
std::string dump_grid(const Fam2Table &table);
/// Loaded cells have Provenance::imported. Throws ParseError on malformed grids.
Fam1Table load_fam1_grid(std::string_view text, Axis axis);
Fam2Table load_fam2_grid(std::string_view text);

}  // namespace fmp
