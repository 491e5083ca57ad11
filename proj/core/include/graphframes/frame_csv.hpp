#pragma once

#include <string>
#include <string_view>

#include "graphframes/frame.hpp"
#include "graphframes/graph_frame.hpp"
#include "graphframes/matrix.hpp"

namespace graphframes {

// CSV layout: one frame vector per row, entries comma-separated, written
// with 17 significant digits so parsing restores the exact doubles. '#'
// comment and blank lines are skipped when reading; the format comment is
// the first line when writing.
std::string frame_to_csv(const Frame& f);
Frame frame_from_csv(std::string_view text);

// Shift files use the same grid layout: one row per connected component.
std::string shifts_to_csv(const DualSpec& spec);
DualSpec shifts_from_csv(std::string_view text);

std::string matrix_to_csv(const Matrix& m);

}  // namespace graphframes
