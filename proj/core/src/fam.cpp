/**
 * @file fam.cpp
 */

#include "fmp/fam.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fmp/error.hpp"

namespace fmp {

namespace {

// Published FAM1 fragment, x-axis spelling. Row r starts at column r.
constexpr std::array<std::string_view, 7> kFam1Rows{
    "fl: FA/L NE/L CL/L TO/L CR/L CR/L CR/L LO/H",
    "nl: NE/L CL/L TO/L CR/L CR/L CR/L LO/H",
    "cl: CL/L TO/L CR/L CR/L CR/L LO/H",
    "el: TO/L IN/L IN/L SA/H CR/R",
    "il: IN/L SH/H IN/R CR/R",
    "ir: IN/R IN/R CR/R",
    "er: TO/R TO/R",
};

constexpr std::array<std::string_view, 7> kFam2Columns{"CL/L", "TO/L", "CR/L", "IN/L", "SH/H", "SA/H", "LO/H"};

// Published FAM2 fragment: row label (y axis) followed by one cell per kFam2Columns entry.
constexpr std::array<std::string_view, 9> kFam2Rows{
    "FA/A: FA/LA FA/AB FA/AB FA/AB FA/AB FA/AB FA/AB",
    "NE/A: NE/LA NE/LA NE/AB NE/AB NE/AB NE/AB NE/AB",
    "CL/A: CL/LA CL/LA CL/AB CL/AB CL/AB CL/AB CL/AB",
    "TO/A: CL/LA TO/LA TO/LA TO/AB TO/AB TO/AB TO/AB",
    "CR/A: CL/LE TO/LA CR/LA CR/AB CR/AB CR/AB CR/AB",
    "IN/A: CL/LE TO/LE CR/LE IN/LA IN/AB IN/AB SP/AB",
    "SH/V: CL/LE TO/LE CR/LE IN/LE IN/CE SP/HO SP/HO",
    "SA/V: CL/LE TO/LE CR/LE IN/LE SP/VE SA/CE LG/HO",
    "LO/V: CL/LE TO/LE CR/LE SP/LE SP/VE LG/VE LG/CE",
};

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string token;
  while (is >> token) {
    out.push_back(token);
  }
  return out;
}

EdgeDescriptor edge(std::string_view text, Axis axis) {
  auto parsed = EdgeDescriptor::parse(text, axis);
  if (not parsed) {
    throw InternalInconsistency("unknown edge descriptor '" + std::string(text) + "'");
  }
  return *parsed;
}

PositionDescriptor position(std::string_view text) {
  auto parsed = PositionDescriptor::parse(text);
  if (not parsed) {
    throw InternalInconsistency("unknown position descriptor '" + std::string(text) + "'");
  }
  return *parsed;
}

Provenance derivedProvenance(Provenance source) {
  return source == Provenance::rule ? Provenance::rule : Provenance::mirror;
}

/// Outward ranking used by the FAM2 fill rule; kinds without an outside reading rank lowest.
int outwardRank(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::FA: return 5;
    case EdgeKind::NE: return 4;
    case EdgeKind::CL: return 3;
    case EdgeKind::TO: return 2;
    case EdgeKind::CR: return 1;
    default: return 0;
  }
}

Locus locusOf(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::FA: return Locus::FA;
    case EdgeKind::NE: return Locus::NE;
    case EdgeKind::CL: return Locus::CL;
    case EdgeKind::TO: return Locus::TO;
    case EdgeKind::CR: return Locus::CR;
    default: break;
  }
  throw InternalInconsistency("edge kind " + std::string(to_string(kind)) + " has no outward locus");
}

std::string pointName(std::size_t i, Axis axis) { return std::string(to_string(point_label(i), axis)); }

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::fragment: return "fragment";
    case Provenance::mirror: return "mirror";
    case Provenance::rule: return "rule";
    case Provenance::imported: return "imported";
  }
  return "?";
}

// ---------------------------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------------------------

std::optional<EdgeDescriptor> Fam1Table::cell(PointLabel row, PointLabel column) const {
  if (index_of(row) > index_of(column)) {
    return std::nullopt;
  }
  return _cells[index_of(row)][index_of(column)].value;
}

Provenance Fam1Table::provenance(PointLabel row, PointLabel column) const {
  return _cells[index_of(row)][index_of(column)].provenance;
}

void Fam1Table::set(PointLabel row, PointLabel column, EdgeDescriptor value, Provenance provenance) {
  if (index_of(row) > index_of(column)) {
    throw InternalInconsistency("FAM1 has no cell (" + pointName(index_of(row), _axis) + ", " +
                                pointName(index_of(column), _axis) + ")");
  }
  _cells[index_of(row)][index_of(column)] = {value, provenance};
}

bool Fam1Table::complete() const {
  for (std::size_t r = 0; r < kPointLabelCount; ++r) {
    for (std::size_t c = r; c < kPointLabelCount; ++c) {
      if (not _cells[r][c].value) {
        return false;
      }
    }
  }
  return true;
}

std::optional<PositionDescriptor> Fam2Table::cell(EdgeDescriptor row_y, EdgeDescriptor column_x) const {
  return _cells[row_y.index()][column_x.index()].value;
}

Provenance Fam2Table::provenance(EdgeDescriptor row_y, EdgeDescriptor column_x) const {
  return _cells[row_y.index()][column_x.index()].provenance;
}

void Fam2Table::set(EdgeDescriptor row_y, EdgeDescriptor column_x, PositionDescriptor value, Provenance provenance) {
  _cells[row_y.index()][column_x.index()] = {value, provenance};
}

bool Fam2Table::complete() const {
  for (const auto &row : _cells) {
    for (const auto &cell : row) {
      if (not cell.value) {
        return false;
      }
    }
  }
  return true;
}

const std::vector<Fam1FragmentCell> &fam1_fragment() {
  static const std::vector<Fam1FragmentCell> cells = [] {
    std::vector<Fam1FragmentCell> out;
    for (std::size_t r = 0; r < kFam1Rows.size(); ++r) {
      const auto tokens = tokenize(kFam1Rows[r]);
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        out.push_back({point_label(r), point_label(r + k - 1), edge(tokens[k], Axis::x)});
      }
    }
    return out;
  }();
  return cells;
}

const std::vector<Fam2FragmentCell> &fam2_fragment() {
  static const std::vector<Fam2FragmentCell> cells = [] {
    std::vector<Fam2FragmentCell> out;
    for (const auto row : kFam2Rows) {
      const auto tokens = tokenize(row);
      const auto rowLabel = edge(std::string_view(tokens[0]).substr(0, tokens[0].size() - 1), Axis::y);
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        out.push_back({rowLabel, edge(kFam2Columns[k - 1], Axis::x), position(tokens[k])});
      }
    }
    return out;
  }();
  return cells;
}

Fam1Table build_fam1(Axis axis) {
  Fam1Table table(axis);
  auto name = [axis](std::size_t r, std::size_t c) {
    return "(" + pointName(r, axis) + ", " + pointName(c, axis) + ")";
  };
  auto place = [&](std::size_t r, std::size_t c, EdgeDescriptor value, Provenance provenance, const char *source) {
    const auto existing = table.cell(point_label(r), point_label(c));
    if (existing) {
      if (*existing != value) {
        throw InternalInconsistency(std::string(source) + " gives " + value.to_string(axis) + " for FAM1 cell " +
                                    name(r, c) + " but it already holds " + existing->to_string(axis));
      }
      return;
    }
    table.set(point_label(r), point_label(c), value, provenance);
  };

  for (const auto &f : fam1_fragment()) {
    place(index_of(f.row), index_of(f.column), f.value, Provenance::fragment, "fragment");
  }

  // Reflection: a box spanning [u, u'] mirrors to [-u', -u].
  for (std::size_t r = 0; r < kPointLabelCount; ++r) {
    for (std::size_t c = r; c < kPointLabelCount; ++c) {
      const auto value = table.cell(point_label(r), point_label(c));
      if (value) {
        place(9 - c, 9 - r, value->mirrored(), derivedProvenance(table.provenance(point_label(r), point_label(c))),
              "reflection");
      }
    }
  }

  // Span rule: both edges outside the reference on opposite sides.
  const auto longer = *EdgeDescriptor::make(EdgeKind::LO, EdgeDirection::neutral);
  for (std::size_t r = 0; r <= index_of(PointLabel::close_low); ++r) {
    for (std::size_t c = index_of(PointLabel::close_high); c < kPointLabelCount; ++c) {
      place(r, c, longer, Provenance::rule, "span rule");
    }
  }

  for (std::size_t r = 0; r < kPointLabelCount; ++r) {
    for (std::size_t c = r; c < kPointLabelCount; ++c) {
      const auto value = table.cell(point_label(r), point_label(c));
      if (not value) {
        throw InternalInconsistency("FAM1 cell " + name(r, c) + " left unfilled");
      }
      if (table.cell(point_label(9 - c), point_label(9 - r)) != value->mirrored()) {
        throw InternalInconsistency("FAM1 is not closed under reflection at " + name(r, c));
      }
    }
  }
  return table;
}

Fam2Table build_fam2() {
  Fam2Table table;
  auto name = [](EdgeDescriptor row, EdgeDescriptor column) {
    return "(" + row.to_string(Axis::y) + ", " + column.to_string(Axis::x) + ")";
  };
  auto place = [&](EdgeDescriptor row, EdgeDescriptor column, PositionDescriptor value, Provenance provenance,
                   const char *source) {
    const auto existing = table.cell(row, column);
    if (existing) {
      if (*existing != value) {
        throw InternalInconsistency(std::string(source) + " gives " + value.to_string() + " for FAM2 cell " +
                                    name(row, column) + " but it already holds " + existing->to_string());
      }
      return;
    }
    table.set(row, column, value, provenance);
  };
  auto forEachCell = [](auto &&fn) {
    for (std::size_t r = 0; r < Fam2Table::kSize; ++r) {
      for (std::size_t c = 0; c < Fam2Table::kSize; ++c) {
        fn(EdgeDescriptor::from_index(r), EdgeDescriptor::from_index(c));
      }
    }
  };

  for (const auto &f : fam2_fragment()) {
    place(f.row_y, f.column_x, f.value, Provenance::fragment, "fragment");
  }

  // Outermost-locus rule for the FA/L and NE/L columns of the rows printed in the fragment.
  const auto closeLeft = *EdgeDescriptor::make(EdgeKind::CL, EdgeDirection::low);
  for (EdgeKind columnKind : {EdgeKind::FA, EdgeKind::NE}) {
    const auto column = *EdgeDescriptor::make(columnKind, EdgeDirection::low);
    for (std::size_t r = 0; r < Fam2Table::kSize; ++r) {
      const auto row = EdgeDescriptor::from_index(r);
      if (row.direction() == EdgeDirection::high) {
        continue;
      }
      const auto reference = table.cell(row, closeLeft);
      if (not reference) {
        throw InternalInconsistency("FAM2 rule needs cell " + name(row, closeLeft));
      }
      const EdgeKind outer = outwardRank(row.kind()) > outwardRank(columnKind) ? row.kind() : columnKind;
      const auto value = PositionDescriptor::make(locusOf(outer), reference->orientation());
      if (not value) {
        throw InternalInconsistency("FAM2 rule produced an invalid descriptor at " + name(row, column));
      }
      place(row, column, *value, Provenance::rule, "outermost-locus rule");
    }
  }

  forEachCell([&](EdgeDescriptor row, EdgeDescriptor column) {
    if (const auto value = table.cell(row, column)) {
      place(row, column.mirrored(), value->mirrored_horizontal(), derivedProvenance(table.provenance(row, column)),
            "left/right reflection");
    }
  });
  forEachCell([&](EdgeDescriptor row, EdgeDescriptor column) {
    if (const auto value = table.cell(row, column)) {
      place(row.mirrored(), column, value->mirrored_vertical(), derivedProvenance(table.provenance(row, column)),
            "above/below reflection");
    }
  });

  forEachCell([&](EdgeDescriptor row, EdgeDescriptor column) {
    const auto value = table.cell(row, column);
    if (not value) {
      throw InternalInconsistency("FAM2 cell " + name(row, column) + " left unfilled");
    }
    if (table.cell(row, column.mirrored()) != value->mirrored_horizontal() or
        table.cell(row.mirrored(), column) != value->mirrored_vertical()) {
      throw InternalInconsistency("FAM2 is not closed under reflection at " + name(row, column));
    }
  });
  return table;
}

const FamTables &FamTables::standard() {
  static const FamTables tables{build_fam1(Axis::x), build_fam1(Axis::y), build_fam2()};
  return tables;
}

// ---------------------------------------------------------------------------------------------
// Inference
// ---------------------------------------------------------------------------------------------

EdgeMemberships infer_1d(const PointMemberships &first, const PointMemberships &second, const Fam1Table &fam) {
  EdgeMemberships out;
  for (const auto &p : first) {
    for (const auto &q : second) {
      if (index_of(p.label) > index_of(q.label)) {
        continue;
      }
      if (const auto d = fam.cell(p.label, q.label)) {
        out.include(*d, std::min(p.mu, q.mu));
      }
    }
  }
  return out;
}

FuzzyDescriptorVector infer_2d(const EdgeMemberships &x, const EdgeMemberships &y, const Fam2Table &fam) {
  FuzzyDescriptorVector out;
  for (const auto &ey : y) {
    for (const auto &ex : x) {
      if (const auto d = fam.cell(ey.label, ex.label)) {
        out.include(*d, std::min(ex.mu, ey.mu));
      }
    }
  }
  return out;
}

FusedLookup FusedLookup::fuse(const FamTables &tables) {
  FusedLookup out;
  out._cells.fill(kInvalid);
  for (std::size_t x1 = 0; x1 < kN; ++x1) {
    for (std::size_t x2 = x1; x2 < kN; ++x2) {
      const auto dx = tables.x.cell(point_label(x1), point_label(x2));
      for (std::size_t y1 = 0; y1 < kN; ++y1) {
        for (std::size_t y2 = y1; y2 < kN; ++y2) {
          const auto dy = tables.y.cell(point_label(y1), point_label(y2));
          if (not dx or not dy) {
            continue;
          }
          if (const auto d = tables.two.cell(*dy, *dx)) {
            out._cells[((x1 * kN + x2) * kN + y1) * kN + y2] = static_cast<std::uint8_t>(d->index());
          }
        }
      }
    }
  }
  return out;
}

std::optional<PositionDescriptor> FusedLookup::operator()(PointLabel x_first, PointLabel x_second,
                                                          PointLabel y_first, PointLabel y_second) const {
  const auto v = _cells[((index_of(x_first) * kN + index_of(x_second)) * kN + index_of(y_first)) * kN +
                        index_of(y_second)];
  if (v == kInvalid) {
    return std::nullopt;
  }
  return PositionDescriptor::from_index(v);
}

std::vector<std::string> check_fam_tables(const FamTables &tables) {
  std::vector<std::string> problems;
  for (const Fam1Table *table : {&tables.x, &tables.y}) {
    const Axis axis = table->axis();
    const std::string label = axis == Axis::x ? "FAM1x" : "FAM1y";
    for (const auto &f : fam1_fragment()) {
      const auto got = table->cell(f.row, f.column);
      if (got != f.value) {
        problems.push_back(label + " cell (" + std::string(to_string(f.row, axis)) + ", " +
                           std::string(to_string(f.column, axis)) + ") should be " + f.value.to_string(axis) +
                           ", found " + (got ? got->to_string(axis) : std::string("--")));
      }
    }
    for (std::size_t r = 0; r < kPointLabelCount; ++r) {
      for (std::size_t c = r; c < kPointLabelCount; ++c) {
        const auto value = table->cell(point_label(r), point_label(c));
        if (not value) {
          problems.push_back(label + " cell (" + pointName(r, axis) + ", " + pointName(c, axis) + ") is missing");
        } else if (table->cell(point_label(9 - c), point_label(9 - r)) != value->mirrored()) {
          problems.push_back(label + " is not closed under reflection at (" + pointName(r, axis) + ", " +
                             pointName(c, axis) + ")");
        }
      }
    }
  }
  for (const auto &f : fam2_fragment()) {
    const auto got = tables.two.cell(f.row_y, f.column_x);
    if (got != f.value) {
      problems.push_back("FAM2 cell (" + f.row_y.to_string(Axis::y) + ", " + f.column_x.to_string(Axis::x) +
                         ") should be " + f.value.to_string() + ", found " +
                         (got ? got->to_string() : std::string("--")));
    }
  }
  for (std::size_t r = 0; r < Fam2Table::kSize; ++r) {
    for (std::size_t c = 0; c < Fam2Table::kSize; ++c) {
      const auto row = EdgeDescriptor::from_index(r);
      const auto column = EdgeDescriptor::from_index(c);
      const auto value = tables.two.cell(row, column);
      const std::string where = "(" + row.to_string(Axis::y) + ", " + column.to_string(Axis::x) + ")";
      if (not value) {
        problems.push_back("FAM2 cell " + where + " is missing");
      } else if (tables.two.cell(row, column.mirrored()) != value->mirrored_horizontal() or
                 tables.two.cell(row.mirrored(), column) != value->mirrored_vertical()) {
        problems.push_back("FAM2 is not closed under reflection at " + where);
      }
    }
  }
  return problems;
}

// ---------------------------------------------------------------------------------------------
// Pair description
// ---------------------------------------------------------------------------------------------

FuzzyDescriptorVector describe_pair(const BoundingBox &box, const BoundingBox &reference,
                                    const PartitionPair &partitions, const FamTables &tables) {
  const RelativeBox rel = relativize_box(box, reference);
  const auto x = infer_1d(fuzzify_scalar(rel.u_min, partitions.x), fuzzify_scalar(rel.u_max, partitions.x), tables.x);
  const auto y = infer_1d(fuzzify_scalar(rel.v_min, partitions.y), fuzzify_scalar(rel.v_max, partitions.y), tables.y);
  return infer_2d(x, y, tables.two);
}

FuzzyDescriptorVector describe_pair(const BoundingBox &box, const BoundingBox &reference,
                                    const PartitionPair &partitions, const FusedLookup &fused) {
  const RelativeBox rel = relativize_box(box, reference);
  const auto x1 = fuzzify_scalar(rel.u_min, partitions.x);
  const auto x2 = fuzzify_scalar(rel.u_max, partitions.x);
  const auto y1 = fuzzify_scalar(rel.v_min, partitions.y);
  const auto y2 = fuzzify_scalar(rel.v_max, partitions.y);
  FuzzyDescriptorVector out;
  for (const auto &a : x1) {
    for (const auto &b : x2) {
      const double muX = std::min(a.mu, b.mu);
      for (const auto &c : y1) {
        for (const auto &d : y2) {
          if (const auto label = fused(a.label, b.label, c.label, d.label)) {
            out.include(*label, std::min(muX, std::min(c.mu, d.mu)));
          }
        }
      }
    }
  }
  return out;
}

Reasoner::Reasoner() : Reasoner(PartitionPair{}, FamTables::standard()) {}

Reasoner::Reasoner(PartitionPair partitions, FamTables tables)
    : _partitions(std::move(partitions)), _tables(std::move(tables)), _fused(FusedLookup::fuse(_tables)) {}

FuzzyDescriptorVector Reasoner::describe(const BoundingBox &box, const BoundingBox &reference) const {
  return describe_pair(box, reference, _partitions, _fused);
}

FuzzyDescriptorVector Reasoner::describe_two_stage(const BoundingBox &box, const BoundingBox &reference) const {
  return describe_pair(box, reference, _partitions, _tables);
}

// ---------------------------------------------------------------------------------------------
// Grid text format
// ---------------------------------------------------------------------------------------------

namespace {

constexpr int kGridWidth = 7;

void writeRow(std::ostringstream &os, const std::string &label, const std::vector<std::string> &cells) {
  os << std::left << std::setw(kGridWidth) << label;
  for (const auto &cell : cells) {
    os << std::right << std::setw(kGridWidth) << cell;
  }
  os << '\n';
}

/// Non-empty, non-comment lines, tokenized.
std::vector<std::pair<std::size_t, std::vector<std::string>>> gridLines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(is, line)) {
    ++number;
    auto tokens = tokenize(line);
    if (tokens.empty() or tokens.front().starts_with('#')) {
      continue;
    }
    out.emplace_back(number, std::move(tokens));
  }
  return out;
}

[[noreturn]] void gridError(std::size_t line, const std::string &message) {
  throw ParseError("grid line " + std::to_string(line) + ": " + message);
}

template <class Label, class NameFn>
void expectHeader(const std::vector<std::pair<std::size_t, std::vector<std::string>>> &lines, std::size_t count,
                  NameFn name) {
  if (lines.size() != count + 1) {
    throw ParseError("grid must have a header and " + std::to_string(count) + " rows, found " +
                     std::to_string(lines.empty() ? 0 : lines.size() - 1) + " rows");
  }
  const auto &[number, header] = lines.front();
  if (header.size() != count) {
    gridError(number, "header must list " + std::to_string(count) + " column labels");
  }
  for (std::size_t c = 0; c < count; ++c) {
    if (header[c] != name(c)) {
      gridError(number, "column " + std::to_string(c + 1) + " should be '" + name(c) + "', found '" + header[c] + "'");
    }
  }
}

}  // namespace

std::string dump_grid(const Fam1Table &table) {
  const Axis axis = table.axis();
  std::ostringstream os;
  os << "# FAM1 " << (axis == Axis::x ? "x" : "y") << ": rows = first corner, columns = second corner\n";
  std::vector<std::string> header;
  for (std::size_t c = 0; c < kPointLabelCount; ++c) {
    header.push_back(pointName(c, axis));
  }
  writeRow(os, "", header);
  for (std::size_t r = 0; r < kPointLabelCount; ++r) {
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < kPointLabelCount; ++c) {
      const auto value = table.cell(point_label(r), point_label(c));
      cells.push_back(value ? value->to_string(axis) : "--");
    }
    writeRow(os, pointName(r, axis), cells);
  }
  return os.str();
}

std::string dump_grid(const Fam2Table &table) {
  std::ostringstream os;
  os << "# FAM2: rows = y edge descriptor, columns = x edge descriptor\n";
  std::vector<std::string> header;
  for (std::size_t c = 0; c < Fam2Table::kSize; ++c) {
    header.push_back(EdgeDescriptor::from_index(c).to_string(Axis::x));
  }
  writeRow(os, "", header);
  for (std::size_t r = 0; r < Fam2Table::kSize; ++r) {
    const auto row = EdgeDescriptor::from_index(r);
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < Fam2Table::kSize; ++c) {
      const auto value = table.cell(row, EdgeDescriptor::from_index(c));
      cells.push_back(value ? value->to_string() : "--");
    }
    writeRow(os, row.to_string(Axis::y), cells);
  }
  return os.str();
}

Fam1Table load_fam1_grid(std::string_view text, Axis axis) {
  const auto lines = gridLines(text);
  expectHeader<PointLabel>(lines, kPointLabelCount, [axis](std::size_t c) { return pointName(c, axis); });
  Fam1Table table(axis);
  for (std::size_t r = 0; r < kPointLabelCount; ++r) {
    const auto &[number, tokens] = lines[r + 1];
    if (tokens.size() != kPointLabelCount + 1 or tokens[0] != pointName(r, axis)) {
      gridError(number, "expected row '" + pointName(r, axis) + "' with " + std::to_string(kPointLabelCount) + " cells");
    }
    for (std::size_t c = 0; c < kPointLabelCount; ++c) {
      const auto &token = tokens[c + 1];
      if (c < r) {
        if (token != "--") {
          gridError(number, "cell below the diagonal must be '--', found '" + token + "'");
        }
        continue;
      }
      const auto value = EdgeDescriptor::parse(token, axis);
      if (not value) {
        gridError(number, "'" + token + "' is not an edge descriptor");
      }
      table.set(point_label(r), point_label(c), *value, Provenance::imported);
    }
  }
  return table;
}

Fam2Table load_fam2_grid(std::string_view text) {
  const auto lines = gridLines(text);
  expectHeader<EdgeDescriptor>(lines, Fam2Table::kSize,
                               [](std::size_t c) { return EdgeDescriptor::from_index(c).to_string(Axis::x); });
  Fam2Table table;
  for (std::size_t r = 0; r < Fam2Table::kSize; ++r) {
    const auto row = EdgeDescriptor::from_index(r);
    const auto &[number, tokens] = lines[r + 1];
    if (tokens.size() != Fam2Table::kSize + 1 or tokens[0] != row.to_string(Axis::y)) {
      gridError(number, "expected row '" + row.to_string(Axis::y) + "' with " + std::to_string(Fam2Table::kSize) +
                            " cells");
    }
    for (std::size_t c = 0; c < Fam2Table::kSize; ++c) {
      const auto &token = tokens[c + 1];
      const auto value = PositionDescriptor::parse(token);
      if (not value) {
        gridError(number, "'" + token + "' is not a position descriptor");
      }
      table.set(row, EdgeDescriptor::from_index(c), *value, Provenance::imported);
    }
  }
  return table;
}

}  // namespace fmp
