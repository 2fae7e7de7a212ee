#include "cdom/wiring.hpp"

#include <algorithm>
#include <sstream>

namespace cdom {

WiringDiagram wiring_diagram(const SwitchSeq& seq)
{
    Path p = path_from_seq(seq);
    WiringDiagram w{seq, std::vector<std::vector<std::pair<int, int>>>(kMaxAlternatives), {}};
    for (std::size_t c = 0; c < p.length(); ++c)
        for (int i = 0; i < p[c].size(); ++i)
            w.tracks[p[c].at(i)].emplace_back(int(c), i);
    for (std::size_t c = 0; c < seq.swaps.size(); ++c)
        w.crossings.push_back(std::min(p[c].position(seq.swaps[c].lo), p[c].position(seq.swaps[c].hi)));
    return w;
}

namespace {

std::size_t label_width(const LinearOrder& r, const Alphabet& a)
{
    std::size_t w = 0;
    for (int i = 0; i < r.size(); ++i)
        w = std::max(w, a.label(r.at(i)).size());
    return w;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); }

void rtrim(std::string& s)
{
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
}

[[noreturn]] void bad(int line, const std::string& msg)
{
    throw Error(ErrorKind::Parse, "wiring line " + std::to_string(line) + ": " + msg);
}

} // namespace

std::string render_ascii(const SwitchSeq& seq, const Alphabet& a)
{
    WiringDiagram wd = wiring_diagram(seq);
    LinearOrder end = seq_end(seq);
    const int n = seq.start.size();
    const std::size_t w = label_width(seq.start, a);
    std::string out;
    for (int line = 0; line < 2 * n - 1; ++line) {
        std::string s;
        if (line % 2 == 0) {
            int row = line / 2;
            s = pad(a.label(seq.start.at(row)), w) + " -";
            for (int c : wd.crossings)
                s += (c == row ? "\\ /" : c + 1 == row ? "/ \\" : "---") + std::string("-");
            s += " " + a.label(end.at(row));
        } else {
            int gap = line / 2;
            s = std::string(w + 2, ' ');
            for (int c : wd.crossings)
                s += (c == gap ? " X " : "   ") + std::string(" ");
            rtrim(s);
        }
        out += s + "\n";
    }
    return out;
}

SwitchSeq parse_ascii(std::string_view text, const Alphabet& a)
{
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string(text)};
        std::string l;
        while (std::getline(in, l))
            lines.push_back(l);
    }
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty() || lines.size() % 2 == 0)
        throw Error(ErrorKind::Parse, "wiring diagram needs an odd number of lines");
    const int n = int(lines.size() + 1) / 2;
    if (n > kMaxAlternatives)
        throw Error(ErrorKind::Parse, "too many wires");

    // Left labels fix the column where blocks start.
    std::vector<std::string> left(n);
    std::size_t w = 0;
    for (int row = 0; row < n; ++row) {
        const std::string& l = lines[std::size_t(2 * row)];
        auto sp = l.find(' ');
        if (sp == std::string::npos || sp == 0)
            bad(2 * row + 1, "missing left label");
        left[row] = l.substr(0, sp);
        w = std::max(w, left[row].size());
    }
    const std::size_t body = w + 2;

    std::size_t m = 0;
    {
        const std::string& l = lines[0];
        while (body + 4 * m + 3 < l.size() && l[body + 4 * m + 3] == '-')
            ++m;
    }

    std::vector<Alt> start_ids;
    std::vector<int> upper(m, -1);
    std::vector<std::string> right(n);
    for (int row = 0; row < n; ++row) {
        const std::string& l = lines[std::size_t(2 * row)];
        int ln = 2 * row + 1;
        if (l.size() < body + 4 * m + 2 || l.compare(0, body, pad(left[row], w) + " -") != 0)
            bad(ln, "malformed wire prefix");
        start_ids.push_back(a.id(left[row]));
        for (std::size_t c = 0; c < m; ++c) {
            std::string blk = l.substr(body + 4 * c, 3);
            if (l[body + 4 * c + 3] != '-')
                bad(ln, "missing block separator");
            if (blk == "\\ /") {
                if (upper[c] != -1)
                    bad(ln, "two crossings in one column");
                upper[c] = row;
            } else if (blk == "/ \\") {
                if (row == 0 || upper[c] != row - 1)
                    bad(ln, "crossing has no upper half");
            } else if (blk != "---") {
                bad(ln, "unknown block '" + blk + "'");
            } else if (upper[c] == row - 1 && row > 0) {
                bad(ln, "crossing has no lower half");
            }
        }
        if (l[body + 4 * m] != ' ')
            bad(ln, "missing right label");
        right[row] = l.substr(body + 4 * m + 1);
        if (right[row].empty() || right[row].find(' ') != std::string::npos)
            bad(ln, "malformed right label");
    }
    for (int gap = 0; gap + 1 < n; ++gap) {
        std::string l = lines[std::size_t(2 * gap + 1)];
        int ln = 2 * gap + 2;
        std::string want(body, ' ');
        for (std::size_t c = 0; c < m; ++c)
            want += (upper[c] == gap ? " X " : "   ") + std::string(" ");
        rtrim(want);
        if (l != want)
            bad(ln, "gap line does not match the crossings");
    }

    LinearOrder start;
    try {
        start = LinearOrder(start_ids);
    } catch (const Error&) {
        throw Error(ErrorKind::Parse, "left labels are not a linear order");
    }
    SwitchSeq seq{start, {}};
    LinearOrder cur = start;
    for (std::size_t c = 0; c < m; ++c) {
        if (upper[c] < 0 || upper[c] + 1 >= n)
            throw Error(ErrorKind::Parse, "column " + std::to_string(c + 1) + " has no crossing");
        SwitchingPair p(cur.at(upper[c]), cur.at(upper[c] + 1));
        seq.swaps.push_back(p);
        cur = apply_swap(cur, upper[c]);
    }
    for (int row = 0; row < n; ++row)
        if (a.id(right[row]) != cur.at(row))
            bad(2 * row + 1, "right label disagrees with the crossings");
    return seq;
}

std::string render_svg(const SwitchSeq& seq, const Alphabet& a)
{
    constexpr int pitch_x = 40, pitch_y = 30, margin = 40;
    WiringDiagram wd = wiring_diagram(seq);
    LinearOrder end = seq_end(seq);
    const int n = seq.start.size();
    const int cols = int(seq.swaps.size()) + 1;
    const int width = 2 * margin + pitch_x * cols;
    const int height = 2 * (pitch_y / 2) + pitch_y * n;
    auto x_of = [&](int c) { return margin + pitch_x / 2 + pitch_x * c; };
    auto y_of = [&](int r) { return pitch_y / 2 + pitch_y * r + pitch_y / 2; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"14\">\n";
    for (int i = 0; i < n; ++i) {
        Alt alt = seq.start.at(i);
        o << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
        const auto& tr = wd.tracks[alt];
        for (std::size_t k = 0; k < tr.size(); ++k) {
            if (k)
                o << ' ';
            o << x_of(tr[k].first) << ',' << y_of(tr[k].second);
        }
        o << "\"/>\n";
    }
    for (int r = 0; r < n; ++r) {
        o << "  <text x=\"" << margin - 4 << "\" y=\"" << y_of(r) + 5 << "\" text-anchor=\"end\">"
          << a.label(seq.start.at(r)) << "</text>\n";
        o << "  <text x=\"" << x_of(cols - 1) + pitch_x / 2 + 4 << "\" y=\"" << y_of(r) + 5 << "\">"
          << a.label(end.at(r)) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_wiring(const SwitchSeq& seq, WiringFormat f, const Alphabet& a)
{
    return f == WiringFormat::Ascii ? render_ascii(seq, a) : render_svg(seq, a);
}

} // namespace cdom
