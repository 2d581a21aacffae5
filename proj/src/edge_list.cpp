#include "steiner/edge_list.hpp"

#include <charconv>
#include <unordered_map>
#include <unordered_set>

namespace steiner {

namespace {

bool parse_label(std::string_view token, long long& out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && out >= 0;
}

} // namespace

ParsedTree parse_edge_list(std::string_view text) {
    std::unordered_map<long long, int> dense;
    std::vector<long long> labels;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen_pairs;

    auto intern = [&](long long label) {
        const auto [it, inserted] = dense.try_emplace(label, static_cast<int>(labels.size()));
        if (inserted)
            labels.push_back(label);
        return it->second;
    };

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            if (pos == text.size())
                break;
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        std::vector<std::string_view> tokens;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t')
                ++j;
            if (j > i)
                tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        if (tokens.size() != 2)
            throw Error(errc::parse_error, "line " + std::to_string(line_no) +
                                               ": expected two vertex labels, got " +
                                               std::to_string(tokens.size()) + " tokens");
        long long a, b;
        if (!parse_label(tokens[0], a) || !parse_label(tokens[1], b))
            throw Error(errc::parse_error, "line " + std::to_string(line_no) +
                                               ": labels must be nonnegative integers");
        if (a == b)
            throw Error(errc::self_loop, "line " + std::to_string(line_no) +
                                             ": self-loop at label " + std::to_string(a));
        const int u = intern(a), v = intern(b);
        const long long key = static_cast<long long>(std::min(u, v)) << 32 | std::max(u, v);
        if (!seen_pairs.insert(key).second)
            throw Error(errc::duplicate_edge, "line " + std::to_string(line_no) +
                                                  ": duplicate edge " + std::to_string(a) +
                                                  " " + std::to_string(b));
        edges.emplace_back(u, v);
    }

    // More labels than a tree on edges+1 vertices allows means the input
    // cannot be connected; report that instead of an id-range complaint.
    if (labels.size() > edges.size() + 1)
        throw Error(errc::disconnected,
                    "input names " + std::to_string(labels.size()) + " vertices but has " +
                        std::to_string(edges.size()) + " edges; a tree needs edges+1 vertices");

    // An edge list with no edges reads as the single-vertex tree, so that
    // generated output round-trips for every order.
    if (labels.empty())
        labels.push_back(0);

    return ParsedTree{Tree::from_edges(edges), std::move(labels)};
}

std::string render_edge_list(const Tree& t) {
    std::string out;
    for (const auto& [u, v] : t.edge_list()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

} // namespace steiner
