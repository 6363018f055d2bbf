#pragma once

#include <string>

#include "mgdual/dual.hpp"

namespace mgdual {

/// Plain-text Hilbert table.
///  k == 1: two rows, degrees and values.
///  k == 2: grid with i = first coordinate across and j = second coordinate
///          down (largest j on top); a cell shows "-" when it is outside the
///          table or its value is 0.
///  k >= 3: one "degree value" line per entry.
std::string format_hilbert_table(const HilbertTable& table, std::size_t k);

/// "m1,...,mk,dim" rows under a header line.
std::string format_hilbert_csv(const HilbertTable& table, std::size_t k);

}  // namespace mgdual
