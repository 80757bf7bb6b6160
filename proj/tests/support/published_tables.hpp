/**
 * @file published_tables.hpp
 *
 * Independent transcription of the printed table fragments, used as test oracles. Kept apart
 * from the library's own copies on purpose.
 */

#pragma once

#include <array>
#include <string_view>

namespace fmp::published {

/// FAM1 fragment, x-axis. Rows fl..er, columns fl..cr; "---" below the diagonal.
inline constexpr std::array<std::string_view, 8> kFam1Columns{"fl", "nl", "cl", "el", "il", "ir", "er", "cr"};
inline constexpr std::array<std::string_view, 7> kFam1RowLabels{"fl", "nl", "cl", "el", "il", "ir", "er"};
inline constexpr std::array<std::array<std::string_view, 8>, 7> kFam1{{
    {"FA/L", "NE/L", "CL/L", "TO/L", "CR/L", "CR/L", "CR/L", "LO/H"},
    {"---", "NE/L", "CL/L", "TO/L", "CR/L", "CR/L", "CR/L", "LO/H"},
    {"---", "---", "CL/L", "TO/L", "CR/L", "CR/L", "CR/L", "LO/H"},
    {"---", "---", "---", "TO/L", "IN/L", "IN/L", "SA/H", "CR/R"},
    {"---", "---", "---", "---", "IN/L", "SH/H", "IN/R", "CR/R"},
    {"---", "---", "---", "---", "---", "IN/R", "IN/R", "CR/R"},
    {"---", "---", "---", "---", "---", "---", "TO/R", "TO/R"},
}};

/// FAM2 fragment. Rows are y-axis edge descriptors, columns x-axis.
inline constexpr std::array<std::string_view, 7> kFam2Columns{"CL/L", "TO/L", "CR/L", "IN/L", "SH/H", "SA/H", "LO/H"};
inline constexpr std::array<std::string_view, 9> kFam2RowLabels{"FA/A", "NE/A", "CL/A", "TO/A", "CR/A",
                                                                "IN/A", "SH/V", "SA/V", "LO/V"};
inline constexpr std::array<std::array<std::string_view, 7>, 9> kFam2{{
    {"FA/LA", "FA/AB", "FA/AB", "FA/AB", "FA/AB", "FA/AB", "FA/AB"},
    {"NE/LA", "NE/LA", "NE/AB", "NE/AB", "NE/AB", "NE/AB", "NE/AB"},
    {"CL/LA", "CL/LA", "CL/AB", "CL/AB", "CL/AB", "CL/AB", "CL/AB"},
    {"CL/LA", "TO/LA", "TO/LA", "TO/AB", "TO/AB", "TO/AB", "TO/AB"},
    {"CL/LE", "TO/LA", "CR/LA", "CR/AB", "CR/AB", "CR/AB", "CR/AB"},
    {"CL/LE", "TO/LE", "CR/LE", "IN/LA", "IN/AB", "IN/AB", "SP/AB"},
    {"CL/LE", "TO/LE", "CR/LE", "IN/LE", "IN/CE", "SP/HO", "SP/HO"},
    {"CL/LE", "TO/LE", "CR/LE", "IN/LE", "SP/VE", "SA/CE", "LG/HO"},
    {"CL/LE", "TO/LE", "CR/LE", "SP/LE", "SP/VE", "LG/VE", "LG/CE"},
}};

/// Locus matching matrix, order FA NE CL TO CR IN LG SP SA.
inline constexpr std::array<std::array<std::string_view, 9>, 9> kLocus{{
    {"1", "vh", "vl", "0", "0", "0", "0", "0", "0"},
    {"vh", "1", "vh", "vl", "0", "0", "0", "0", "0"},
    {"vl", "vh", "1", "vh", "vl", "0", "0", "0", "0"},
    {"0", "vl", "vh", "1", "vh", "vl", "0", "0", "0"},
    {"0", "0", "vl", "vh", "1", "vh", "0", "0", "0"},
    {"0", "0", "0", "vl", "vh", "1", "0", "vl", "vl"},
    {"0", "0", "0", "0", "0", "0", "1", "vl", "vl"},
    {"0", "0", "0", "0", "0", "vl", "vl", "1", "vl"},
    {"0", "0", "0", "0", "0", "vl", "vl", "vl", "1"},
}};

/// Orientation matching matrix, order LE LA AB RA RI RB BE LB CE HO VE.
inline constexpr std::array<std::array<std::string_view, 11>, 11> kOrientation{{
    {"1", "vh", "0", "0", "0", "0", "0", "h", "0", "vl", "0"},
    {"hi", "1", "vh", "0", "0", "0", "0", "0", "0", "vl", "vl"},
    {"0", "vh", "1", "vh", "0", "0", "0", "0", "0", "0", "vl"},
    {"0", "0", "vh", "1", "vh", "0", "0", "0", "0", "vl", "vl"},
    {"0", "0", "0", "vh", "1", "vh", "0", "0", "0", "vl", "0"},
    {"0", "0", "0", "0", "vh", "1", "vh", "0", "0", "vl", "vl"},
    {"0", "0", "0", "0", "0", "vh", "1", "vh", "0", "0", "vl"},
    {"hi", "0", "0", "0", "0", "0", "vl", "1", "0", "vl", "vl"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "1", "vl", "vl"},
    {"vl", "vl", "0", "vl", "vl", "vl", "0", "vl", "vl", "1", "0"},
    {"0", "vl", "vl", "vl", "0", "vl", "vl", "vl", "vl", "0", "1"},
}};

inline constexpr double kVh = 0.5;
inline constexpr double kVl = 0.25;

inline double token_value(std::string_view token) {
  if (token == "1") return 1.0;
  if (token == "0") return 0.0;
  if (token == "vl") return kVl;
  return kVh;  // vh, h, hi
}

/// 1-based row orders of the permuted orientation matrix.
inline constexpr std::array<std::size_t, 11> kSymX{5, 4, 3, 2, 1, 8, 7, 6, 9, 10, 11};
inline constexpr std::array<std::size_t, 11> kSymY{1, 8, 7, 6, 5, 4, 3, 2, 9, 10, 11};
inline constexpr std::array<std::size_t, 11> kSymXY{5, 6, 7, 8, 1, 2, 3, 4, 9, 11, 10};

}  // namespace fmp::published
