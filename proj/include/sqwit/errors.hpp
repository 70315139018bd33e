#pragma once

#include <stdexcept>
#include <string>

namespace sqwit {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedBackend : std::runtime_error {
    explicit UnsupportedBackend(const std::string& what) : std::runtime_error(what) {}
};

struct MixedBackend : std::runtime_error {
    explicit MixedBackend(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularInput : std::runtime_error {
    explicit SingularInput(const std::string& what) : std::runtime_error(what) {}
};

struct PositivityError : std::runtime_error {
    explicit PositivityError(const std::string& what) : std::runtime_error(what) {}
};

struct ContourError : std::runtime_error {
    explicit ContourError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sqwit
