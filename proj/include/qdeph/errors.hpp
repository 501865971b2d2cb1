// errors.hpp — Error types shared across the library and the CLI

#pragma once

#include <stdexcept>
#include <string>

namespace qdeph {

// Invalid argument or parameter outside its documented domain.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Measurement scheme whose D coefficient vanishes (no well-defined
// correlation factor; the initial coherence is zero as well).
class degenerate_scheme_error : public std::runtime_error {
public:
    explicit degenerate_scheme_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to reach its requested tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qdeph
