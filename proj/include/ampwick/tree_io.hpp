#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ampwick/tree.hpp"

namespace ampwick {

enum class EdgeColor { Blue, Yellow };

// Nested parenthesis format, e.g. "(root i=1 (c=1 (c=1)(c=1)(c=1)))".
// Attributes: i= root label, l=/label= vertex label, c=/coeff= rational
// coefficient, r= radicand (coefficient c*sqrt(r)), color=b|y for the edge
// to the parent.  '#' starts a comment.
struct ParsedTree {
    UnlabeledTree tree;
    std::vector<std::optional<int>> labels;
    std::vector<EdgeColor> colors;
};

ParsedTree parse_tree(const std::string& text);
ParsedTree read_tree_file(const std::string& path);

// Requires a label on every vertex (the root label may come from i=).
LabeledTree to_labeled(const ParsedTree& p);

std::string format_tree(const UnlabeledTree& t, const std::vector<int>* labels = nullptr,
                        const std::vector<EdgeColor>* colors = nullptr);

}  // namespace ampwick
