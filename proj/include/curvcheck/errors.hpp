#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace curvcheck {

/// Base class for all curvcheck errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition failed at a specific input.
/// Suite runs record these as "inapplicable", never as pass or fail.
class PreconditionError : public Error {
public:
    PreconditionError(std::string kind, const std::string& what)
        : Error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class ShapeError : public PreconditionError {
public:
    explicit ShapeError(const std::string& what) : PreconditionError("shape", what) {}
};

class SingularMetricError : public PreconditionError {
public:
    explicit SingularMetricError(const std::string& what)
        : PreconditionError("singular-metric", what) {}
};

class AsymmetricMatrixError : public PreconditionError {
public:
    explicit AsymmetricMatrixError(const std::string& what)
        : PreconditionError("asymmetric-matrix", what) {}
};

class BoundaryMarginError : public PreconditionError {
public:
    explicit BoundaryMarginError(const std::string& what)
        : PreconditionError("boundary-margin", what) {}
};

class DegeneratePlaneError : public PreconditionError {
public:
    explicit DegeneratePlaneError(const std::string& what)
        : PreconditionError("degenerate-plane", what) {}
};

class DimensionError : public PreconditionError {
public:
    explicit DimensionError(const std::string& what) : PreconditionError("dimension", what) {}
};

class NonTracelessError : public PreconditionError {
public:
    explicit NonTracelessError(const std::string& what)
        : PreconditionError("non-traceless", what) {}
};

class NonCommutingError : public PreconditionError {
public:
    explicit NonCommutingError(const std::string& what)
        : PreconditionError("non-commuting", what) {}
};

class NotConformallyFlatError : public PreconditionError {
public:
    explicit NotConformallyFlatError(const std::string& what)
        : PreconditionError("not-conformally-flat", what) {}
};

class NotCodazziError : public PreconditionError {
public:
    explicit NotCodazziError(const std::string& what) : PreconditionError("not-codazzi", what) {}
};

class VanishingNormError : public PreconditionError {
public:
    explicit VanishingNormError(const std::string& what)
        : PreconditionError("vanishing-norm", what) {}
};

class NotMinimalError : public PreconditionError {
public:
    explicit NotMinimalError(const std::string& what) : PreconditionError("not-minimal", what) {}
};

class DegenerateImmersionError : public PreconditionError {
public:
    explicit DegenerateImmersionError(const std::string& what)
        : PreconditionError("degenerate-immersion", what) {}
};

class UnsupportedConstructionError : public PreconditionError {
public:
    explicit UnsupportedConstructionError(const std::string& what)
        : PreconditionError("unsupported-construction", what) {}
};

class PointMismatchError : public PreconditionError {
public:
    explicit PointMismatchError(const std::string& what)
        : PreconditionError("point-mismatch", what) {}
};

/// Configuration file problems; the CLI maps these to exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace curvcheck
