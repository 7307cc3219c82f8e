#pragma once

#include <stdexcept>
#include <string>

namespace spc {

enum class ErrorKind {
    malformed_edge,
    not_subcubic,
    bad_sequence,
    incomplete_coloring,
    too_large,
    too_short,
    exceptional_graph,
    excluded_graph,
    out_of_class,
    precondition_violated,
    internal_structure,
    k4_component,
    no_rep_found,
    unknown_name,
    generation_exhausted,
    parse,
    timeout,
    not_colorable,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg)
{
    throw Error(kind, msg);
}

} // namespace spc
