#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hamtri {

enum class errc {
    non_simple,
    not_sphere,
    inconsistent,
    not_a_cycle,
    ambiguous_side,
    too_small,
    bad_face,
    empty_interior,
    not_an_edge,
    fixture_missing,
    degree_too_high,
    precondition_failed,
    contradictory_constraints,
    bad_endpoints,
    not_circuit_graph,
    search_exhausted,
    truncated,
    bad_header,
    invalid_rotation,
    too_large,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Raised when a hypothesis of a checked statement fails; carries the
// hypothesis name and the offending vertices.
class precondition_error : public error {
public:
    precondition_error(std::string hypothesis, std::vector<int> witness, const std::string& what)
        : error(errc::precondition_failed, what),
          hypothesis_(std::move(hypothesis)),
          witness_(std::move(witness)) {}
    const std::string& hypothesis() const { return hypothesis_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string hypothesis_;
    std::vector<int> witness_;
};

} // namespace hamtri
