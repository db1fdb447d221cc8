#ifndef PERMABOUND_ERRORS_HPP
#define PERMABOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permabound {

/// Input exceeds a size or work-budget cap (exact permanents, expansion budgets).
class size_error : public std::runtime_error {
public:
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed matrix file or other unreadable input.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace permabound

#endif
