#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace solscope {

// Error taxonomy. Each class maps to a process exit code at the CLI
// boundary: config errors -> 2, numerical aborts -> 3, non-convergence
// -> 4, io failures -> 5.

struct invalid_parameter : std::runtime_error {
    explicit invalid_parameter(const std::string& msg) : std::runtime_error(msg) {}
};

struct grid_mismatch : std::runtime_error {
    explicit grid_mismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct window_mismatch : std::runtime_error {
    explicit window_mismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct nan_detected : std::runtime_error {
    explicit nan_detected(const std::string& msg) : std::runtime_error(msg) {}
};

struct h1_ceiling_exceeded : std::runtime_error {
    double last_safe_time;
    h1_ceiling_exceeded(const std::string& msg, double t)
        : std::runtime_error(msg), last_safe_time(t) {}
};

struct not_converged : std::runtime_error {
    explicit not_converged(const std::string& msg) : std::runtime_error(msg) {}
};

struct coverage_gap : std::runtime_error {
    explicit coverage_gap(const std::string& msg) : std::runtime_error(msg) {}
};

struct inadmissible_pair : std::runtime_error {
    explicit inadmissible_pair(const std::string& msg) : std::runtime_error(msg) {}
};

struct degenerate_input : std::runtime_error {
    explicit degenerate_input(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : std::runtime_error {
    int line, column;
    parse_error(const std::string& msg, int l, int c)
        : std::runtime_error(msg), line(l), column(c) {}
};

struct validation_error : std::runtime_error {
    std::vector<std::string> violations;
    explicit validation_error(std::vector<std::string> v)
        : std::runtime_error(join(v)), violations(std::move(v)) {}
  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "config validation failed:";
        for (const auto& x : v) { s += "\n  - "; s += x; }
        return s;
    }
};

} // namespace solscope
