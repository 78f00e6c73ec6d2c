#pragma once

#include <stdexcept>
#include <string>

namespace dyncut {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct duplicate_edge_error : error {
    using error::error;
};

struct self_loop_error : error {
    using error::error;
};

struct unknown_edge_error : error {
    using error::error;
};

struct stale_handle_error : error {
    using error::error;
};

struct empty_list_error : error {
    using error::error;
};

struct cycle_error : error {
    using error::error;
};

struct disconnected_error : error {
    using error::error;
};

struct size_limit_error : error {
    using error::error;
};

struct budget_error : error {
    using error::error;
};

struct degenerate_input_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& msg, long line) : error(msg + " (line " + std::to_string(line) + ")"), line_no(line) {}
    long line_no;
};

}  // namespace dyncut
