#pragma once

#include <stdexcept>
#include <string>

namespace twistforge {

// Malformed input data (bad indices, unparsable rationals, wrong file shape).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violation in library calls (degree mismatch, bad split, ...).
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// Element has no inverse; carries the rank defect of the regular-representation
// system when it was computed (0 if the failure was detected earlier).
struct not_invertible : std::runtime_error {
    int rank_defect;
    explicit not_invertible(const std::string& what, int defect = 0)
        : std::runtime_error(what), rank_defect(defect) {}
};

// Operation outside the supported envelope (e.g. dense inversion of a large
// non-unipotent element).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twistforge
