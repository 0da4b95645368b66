#pragma once

#include <stdexcept>
#include <string>

namespace ellhodge {

// Bad user input: unparsable config, malformed group table, degree bounds, ...
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside the supported hypotheses: non-minimal model,
// additive fiber under a branch point, unavailable Tjurina class, ...
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// A proven-in-math identity failed at runtime; always a bug or inconsistent
// "accepted on faith" input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace ellhodge
