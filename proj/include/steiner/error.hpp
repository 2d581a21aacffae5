#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

enum class errc {
    id_out_of_range,
    self_loop,
    duplicate_edge,
    cycle_detected,
    disconnected,
    k_too_small,
    k_too_large,
    path_not_in_tree,
    invalid_path,
    degenerate_path,
    bad_params,
    parse_error,
    budget_exceeded,
};

/// All library failures carry a code (for dispatch) and a human-readable
/// message naming the offending edge/vertex/line.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

const char* errc_name(errc code);

} // namespace steiner
