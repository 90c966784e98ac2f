#pragma once

#include <stdexcept>
#include <string>

namespace tbk {

// A computed value contradicting a theorem the pipeline is entitled to rely
// on (squarefreeness mod 2, dihedral order constraints, oracle identity...).
// Never swallowed: analyze() converts it into a distinguished report status
// and the CLI exits with code 1.
struct ContradictionEvent : std::runtime_error {
    explicit ContradictionEvent(const std::string& what) : std::runtime_error(what) {}
};

// Convention guard tripped (relator identity, longitude shape). Indicates a
// wrong word convention rather than a mathematical surprise; fatal.
struct ConventionError : std::logic_error {
    explicit ConventionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tbk
