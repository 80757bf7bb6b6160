/**
 * @file descriptors.cpp
 */

#include "fmp/descriptors.hpp"

#include <utility>

namespace fmp {

namespace {

constexpr std::array<std::string_view, kPointLabelCount> kPointNamesX{"fl", "nl", "cl", "el", "il",
                                                                     "ir", "er", "cr", "nr", "fr"};
constexpr std::array<std::string_view, kPointLabelCount> kPointNamesY{"fa", "na", "ca", "ea", "ia",
                                                                     "ib", "eb", "cb", "nb", "fb"};

struct EdgeEntry {
  EdgeKind kind;
  EdgeDirection direction;
};

using enum EdgeKind;

constexpr std::array<EdgeEntry, EdgeDescriptor::kCount> kEdges{{
    {FA, EdgeDirection::low},
    {NE, EdgeDirection::low},
    {CL, EdgeDirection::low},
    {TO, EdgeDirection::low},
    {CR, EdgeDirection::low},
    {IN, EdgeDirection::low},
    {SH, EdgeDirection::neutral},
    {SA, EdgeDirection::neutral},
    {LO, EdgeDirection::neutral},
    {IN, EdgeDirection::high},
    {CR, EdgeDirection::high},
    {TO, EdgeDirection::high},
    {CL, EdgeDirection::high},
    {NE, EdgeDirection::high},
    {FA, EdgeDirection::high},
}};

constexpr std::array<std::string_view, 9> kEdgeKindNames{"FA", "NE", "CL", "LO", "TO", "CR", "IN", "SH", "SA"};

constexpr std::array<std::string_view, kLocusCount> kLocusNames{"FA", "NE", "CL", "TO", "CR",
                                                                "IN", "LG", "SP", "SA"};
constexpr std::array<std::string_view, kOrientationCount> kOrientationNames{"LE", "LA", "AB", "RA", "RI", "RB",
                                                                            "BE", "LB", "CE", "HO", "VE"};

struct PositionEntry {
  Locus locus;
  Orientation orientation;
};

constexpr std::array<PositionEntry, PositionDescriptor::kCount> buildPositions() {
  std::array<PositionEntry, PositionDescriptor::kCount> out{};
  std::size_t k = 0;
  for (Locus l : {Locus::FA, Locus::NE, Locus::CL, Locus::TO, Locus::CR, Locus::IN}) {
    for (std::size_t o = 0; o < 8; ++o) {
      out[k++] = {l, static_cast<Orientation>(o)};
    }
  }
  using enum Orientation;
  for (Orientation o : {LE, RI, AB, BE, HO, VE}) {
    out[k++] = {Locus::SP, o};
  }
  out[k++] = {Locus::IN, CE};
  out[k++] = {Locus::SA, CE};
  out[k++] = {Locus::LG, CE};
  out[k++] = {Locus::LG, HO};
  out[k++] = {Locus::LG, VE};
  return out;
}

constexpr auto kPositions = buildPositions();

constexpr std::array<std::array<std::int8_t, kOrientationCount>, kLocusCount> buildPositionLookup() {
  std::array<std::array<std::int8_t, kOrientationCount>, kLocusCount> out{};
  for (auto &row : out) {
    row.fill(-1);
  }
  for (std::size_t i = 0; i < kPositions.size(); ++i) {
    out[static_cast<std::size_t>(kPositions[i].locus)][static_cast<std::size_t>(kPositions[i].orientation)] =
        static_cast<std::int8_t>(i);
  }
  return out;
}

constexpr auto kPositionLookup = buildPositionLookup();

char directionLetter(EdgeDirection direction, Axis axis) {
  switch (direction) {
    case EdgeDirection::low:
      return axis == Axis::x ? 'L' : 'A';
    case EdgeDirection::high:
      return axis == Axis::x ? 'R' : 'B';
    case EdgeDirection::neutral:
      break;
  }
  return axis == Axis::x ? 'H' : 'V';
}

std::pair<std::string_view, std::string_view> splitSlash(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return {text, {}};
  }
  return {text.substr(0, slash), text.substr(slash + 1)};
}

}  // namespace

std::string_view to_string(PointLabel p, Axis axis) {
  return axis == Axis::x ? kPointNamesX[index_of(p)] : kPointNamesY[index_of(p)];
}

std::optional<PointLabel> parse_point_label(std::string_view text, Axis axis) {
  const auto &names = axis == Axis::x ? kPointNamesX : kPointNamesY;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == text) {
      return point_label(i);
    }
  }
  return std::nullopt;
}

std::optional<EdgeDescriptor> EdgeDescriptor::make(EdgeKind kind, EdgeDirection direction) {
  for (std::size_t i = 0; i < kEdges.size(); ++i) {
    if (kEdges[i].kind == kind and kEdges[i].direction == direction) {
      return from_index(i);
    }
  }
  return std::nullopt;
}

EdgeKind EdgeDescriptor::kind() const { return kEdges[_index].kind; }

EdgeDirection EdgeDescriptor::direction() const { return kEdges[_index].direction; }

EdgeDescriptor EdgeDescriptor::mirrored() const {
  switch (direction()) {
    case EdgeDirection::low:
      return *make(kind(), EdgeDirection::high);
    case EdgeDirection::high:
      return *make(kind(), EdgeDirection::low);
    case EdgeDirection::neutral:
      break;
  }
  return *this;
}

std::string EdgeDescriptor::to_string(Axis axis) const {
  std::string out(fmp::to_string(kind()));
  out += '/';
  out += directionLetter(direction(), axis);
  return out;
}

std::optional<EdgeDescriptor> EdgeDescriptor::parse(std::string_view text, Axis axis) {
  for (std::size_t i = 0; i < kCount; ++i) {
    if (from_index(i).to_string(axis) == text) {
      return from_index(i);
    }
  }
  return std::nullopt;
}

std::string_view to_string(EdgeKind kind) { return kEdgeKindNames[static_cast<std::size_t>(kind)]; }

std::string_view to_string(Locus locus) { return kLocusNames[static_cast<std::size_t>(locus)]; }

std::string_view to_string(Orientation orientation) {
  return kOrientationNames[static_cast<std::size_t>(orientation)];
}

std::optional<Locus> parse_locus(std::string_view text) {
  for (std::size_t i = 0; i < kLocusNames.size(); ++i) {
    if (kLocusNames[i] == text) {
      return static_cast<Locus>(i);
    }
  }
  return std::nullopt;
}

std::optional<Orientation> parse_orientation(std::string_view text) {
  for (std::size_t i = 0; i < kOrientationNames.size(); ++i) {
    if (kOrientationNames[i] == text) {
      return static_cast<Orientation>(i);
    }
  }
  return std::nullopt;
}

Orientation mirror_horizontal(Orientation o) {
  using enum Orientation;
  switch (o) {
    case LE: return RI;
    case RI: return LE;
    case LA: return RA;
    case RA: return LA;
    case LB: return RB;
    case RB: return LB;
    default: return o;
  }
}

Orientation mirror_vertical(Orientation o) {
  using enum Orientation;
  switch (o) {
    case AB: return BE;
    case BE: return AB;
    case LA: return LB;
    case LB: return LA;
    case RA: return RB;
    case RB: return RA;
    default: return o;
  }
}

std::optional<PositionDescriptor> PositionDescriptor::make(Locus locus, Orientation orientation) {
  const auto index = kPositionLookup[static_cast<std::size_t>(locus)][static_cast<std::size_t>(orientation)];
  if (index < 0) {
    return std::nullopt;
  }
  return from_index(static_cast<std::size_t>(index));
}

Locus PositionDescriptor::locus() const { return kPositions[_index].locus; }

Orientation PositionDescriptor::orientation() const { return kPositions[_index].orientation; }

PositionDescriptor PositionDescriptor::mirrored_horizontal() const {
  return *make(locus(), mirror_horizontal(orientation()));
}

PositionDescriptor PositionDescriptor::mirrored_vertical() const {
  return *make(locus(), mirror_vertical(orientation()));
}

std::string PositionDescriptor::to_string() const {
  std::string out(fmp::to_string(locus()));
  out += '/';
  out += fmp::to_string(orientation());
  return out;
}

std::optional<PositionDescriptor> PositionDescriptor::parse(std::string_view text) {
  const auto [locusText, orientationText] = splitSlash(text);
  const auto locus = parse_locus(locusText);
  const auto orientation = parse_orientation(orientationText);
  if (not locus or not orientation) {
    return std::nullopt;
  }
  return make(*locus, *orientation);
}

}  // namespace fmp
