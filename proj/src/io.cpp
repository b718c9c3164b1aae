#include "fvs/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fvs {

namespace {

// Splits one line into whitespace tokens after stripping comments.
std::vector<std::string_view> tokens_of(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Digraph parse_instance(std::string_view text) {
    int n = -1, m = -1;
    std::vector<Arc> arcs;
    std::vector<int> arc_line;  // source line of each arc, for error reports
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++line_no;
        auto toks = tokens_of(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (toks.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, "expected two fields");
        int a = parse_int(toks[0], line_no);
        int b = parse_int(toks[1], line_no);
        if (n < 0) {
            n = a;
            m = b;
            if (n < 0 || m < 0) throw ParseError(line_no, "negative header value");
        } else {
            arcs.emplace_back(a, b);
            arc_line.push_back(line_no);
        }
        if (pos > text.size()) break;
    }
    if (n < 0) throw ParseError(line_no, "missing header");
    if (static_cast<int>(arcs.size()) != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " arcs, got " +
                                      std::to_string(arcs.size()));
    for (size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(arc_line[i], "vertex id out of range");
        if (u == v) throw ParseError(arc_line[i], "self-loop");
    }
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) {
            auto it = std::find(arcs.begin(), arcs.end(), sorted[i]);
            size_t first = static_cast<size_t>(it - arcs.begin());
            auto again = std::find(arcs.begin() + first + 1, arcs.end(), sorted[i]);
            throw ParseError(arc_line[again - arcs.begin()],
                             "duplicate arc " + std::to_string(sorted[i].first) + " " +
                                 std::to_string(sorted[i].second));
        }
    return Digraph::from_arcs(n, arcs);
}

std::string emit_instance(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.size() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

Digraph read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const Digraph& d,
                         const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    if (!header_comment.empty()) out << "# " << header_comment << '\n';
    out << emit_instance(d);
}

}  // namespace fvs
