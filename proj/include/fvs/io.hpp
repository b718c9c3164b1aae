#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fvs/graph.hpp"

namespace fvs {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Text format: header "n m", then m lines "u v" with 0-based ids.
// '#' starts a comment that runs to the end of the line.
Digraph parse_instance(std::string_view text);

// Canonical emission: header plus arcs in sorted (u,v) order, one per line.
// parse_instance(emit_instance(d)) == d, and the output is byte-stable.
std::string emit_instance(const Digraph& d);

// DOT export for debugging; arc order matches emit_instance.
std::string to_dot(const Digraph& d);

Digraph read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Digraph& d,
                         const std::string& header_comment = "");

}  // namespace fvs
