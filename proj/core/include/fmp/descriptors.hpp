/**
 * @file descriptors.hpp
 *
 * Linguistic vocabularies of the fuzzy position pipeline:
 *   - point (corner) labels, 10 per axis: fl nl cl el il ir er cr nr fr (y: a/b instead of l/r)
 *   - 1-D edge descriptors, 15 per axis: {FA,NE,CL,TO,CR,IN} x {L,R} plus SH/H, SA/H, LO/H (y: A, B, V)
 *   - 2-D position descriptors: locus x orientation pairs
 *
 * Edge and position descriptors are small value types wrapping their index in the canonical
 * vocabulary order, so they double as dense array indices.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fmp {

enum class Axis : std::uint8_t { x, y };

// ---------------------------------------------------------------------------------------------
// Point labels
// ---------------------------------------------------------------------------------------------

enum class Zone : std::uint8_t { inside, edge, close, near, far };

/// low = left (x) or above (y), high = right (x) or below (y).
enum class Side : std::uint8_t { low, high };

/// Canonical order, low far side through high far side.
enum class PointLabel : std::uint8_t {
  far_low,
  near_low,
  close_low,
  edge_low,
  inside_low,
  inside_high,
  edge_high,
  close_high,
  near_high,
  far_high,
};

inline constexpr std::size_t kPointLabelCount = 10;

constexpr std::size_t index_of(PointLabel p) { return static_cast<std::size_t>(p); }
constexpr PointLabel point_label(std::size_t index) { return static_cast<PointLabel>(index); }

constexpr Side side_of(PointLabel p) { return index_of(p) < 5 ? Side::low : Side::high; }

constexpr Zone zone_of(PointLabel p) {
  constexpr std::array<Zone, 5> kLowZones{Zone::far, Zone::near, Zone::close, Zone::edge, Zone::inside};
  const std::size_t i = index_of(p);
  return i < 5 ? kLowZones[i] : kLowZones[9 - i];
}

constexpr PointLabel make_point_label(Zone zone, Side side) {
  constexpr std::array<std::size_t, 5> kLowIndex{4, 3, 2, 1, 0};  // inside, edge, close, near, far
  const std::size_t low = kLowIndex[static_cast<std::size_t>(zone)];
  return point_label(side == Side::low ? low : 9 - low);
}

/// Reflection u -> -u swaps sides and keeps the zone.
constexpr PointLabel mirror(PointLabel p) { return point_label(9 - index_of(p)); }

/// "fl", "ir", ... for x; "fa", "ib", ... for y.
std::string_view to_string(PointLabel p, Axis axis);
std::optional<PointLabel> parse_point_label(std::string_view text, Axis axis);

// ---------------------------------------------------------------------------------------------
// 1-D edge descriptors
// ---------------------------------------------------------------------------------------------

enum class EdgeKind : std::uint8_t { FA, NE, CL, LO, TO, CR, IN, SH, SA };

/// low = L / A, high = R / B, neutral = H / V.
enum class EdgeDirection : std::uint8_t { low, high, neutral };

class EdgeDescriptor {
 public:
  static constexpr std::size_t kCount = 15;

  constexpr EdgeDescriptor() = default;
  static constexpr EdgeDescriptor from_index(std::size_t index) { return EdgeDescriptor(static_cast<std::uint8_t>(index)); }
  /// nullopt for the invalid combinations (e.g. SH with a side, FA without one).
  static std::optional<EdgeDescriptor> make(EdgeKind kind, EdgeDirection direction);

  constexpr std::size_t index() const { return _index; }
  EdgeKind kind() const;
  EdgeDirection direction() const;
  EdgeDescriptor mirrored() const;

  /// "CL/L", "SH/H" for x; "CL/A", "SH/V" for y.
  std::string to_string(Axis axis) const;
  static std::optional<EdgeDescriptor> parse(std::string_view text, Axis axis);

  friend constexpr bool operator==(EdgeDescriptor, EdgeDescriptor) = default;
  friend constexpr auto operator<=>(EdgeDescriptor, EdgeDescriptor) = default;

 private:
  constexpr explicit EdgeDescriptor(std::uint8_t index) : _index(index) {}
  std::uint8_t _index = 0;
};

std::string_view to_string(EdgeKind kind);

// ---------------------------------------------------------------------------------------------
// 2-D position descriptors
// ---------------------------------------------------------------------------------------------

/// Order matches the rows/columns of the locus matching matrix.
enum class Locus : std::uint8_t { FA, NE, CL, TO, CR, IN, LG, SP, SA };
inline constexpr std::size_t kLocusCount = 9;

/// Order matches the rows/columns of the orientation matching matrix.
enum class Orientation : std::uint8_t { LE, LA, AB, RA, RI, RB, BE, LB, CE, HO, VE };
inline constexpr std::size_t kOrientationCount = 11;

std::string_view to_string(Locus locus);
std::string_view to_string(Orientation orientation);
std::optional<Locus> parse_locus(std::string_view text);
std::optional<Orientation> parse_orientation(std::string_view text);

/// Left-right reflection: LE<->RI, LA<->RA, LB<->RB.
Orientation mirror_horizontal(Orientation o);
/// Above-below reflection: AB<->BE, LA<->LB, RA<->RB.
Orientation mirror_vertical(Orientation o);

class PositionDescriptor {
 public:
  /// 57 pairs named in the vocabulary text plus LG/HO and LG/VE, which the published FAM2
  /// fragment uses for equal-extent boxes that are longer along the other axis.
  static constexpr std::size_t kCount = 59;

  constexpr PositionDescriptor() = default;
  static constexpr PositionDescriptor from_index(std::size_t index) {
    return PositionDescriptor(static_cast<std::uint8_t>(index));
  }
  static std::optional<PositionDescriptor> make(Locus locus, Orientation orientation);

  constexpr std::size_t index() const { return _index; }
  Locus locus() const;
  Orientation orientation() const;

  PositionDescriptor mirrored_horizontal() const;
  PositionDescriptor mirrored_vertical() const;

  std::string to_string() const;
  static std::optional<PositionDescriptor> parse(std::string_view text);

  friend constexpr bool operator==(PositionDescriptor, PositionDescriptor) = default;
  friend constexpr auto operator<=>(PositionDescriptor, PositionDescriptor) = default;

 private:
  constexpr explicit PositionDescriptor(std::uint8_t index) : _index(index) {}
  std::uint8_t _index = 0;
};

}  // namespace fmp
