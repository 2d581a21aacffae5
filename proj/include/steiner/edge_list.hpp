#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "steiner/tree.hpp"

namespace steiner {

/// Tree plus the original input labels: label_map[dense id] = input label.
struct ParsedTree {
    Tree tree;
    std::vector<long long> label_map;
};

/// Parses "u v" edge lines. '#' lines and blank lines are ignored, '\r'
/// stripped, trailing newline optional. Arbitrary nonnegative integer
/// labels are remapped to dense ids 0..n-1 in first-appearance order.
ParsedTree parse_edge_list(std::string_view text);

/// One "u v" line per edge, lexicographic, trailing newline.
std::string render_edge_list(const Tree& t);

} // namespace steiner
