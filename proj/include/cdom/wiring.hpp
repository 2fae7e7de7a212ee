#pragma once

#include "cdom/io.hpp"
#include "cdom/paths.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdom {

struct WiringDiagram {
    SwitchSeq seq;
    // tracks[a] holds (column, row) for column 0..swaps, row = position of a.
    std::vector<std::vector<std::pair<int, int>>> tracks;
    // Upper row of each crossing, in sequence order.
    std::vector<int> crossings;
};

WiringDiagram wiring_diagram(const SwitchSeq& seq);

enum class WiringFormat { Ascii, Svg };

std::string render_ascii(const SwitchSeq& seq, const Alphabet& a);
std::string render_svg(const SwitchSeq& seq, const Alphabet& a);
std::string render_wiring(const SwitchSeq& seq, WiringFormat f, const Alphabet& a);

// Strict inverse of render_ascii; throws Parse on anything it would not emit.
SwitchSeq parse_ascii(std::string_view text, const Alphabet& a);

} // namespace cdom
