#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stickysim {

/// Nearest boundary point is not unique (query lies on the medial axis,
/// e.g. the disk center or the corridor center line).
struct DegenerateProjection : std::runtime_error {
    explicit DegenerateProjection(const std::string& what) : std::runtime_error(what) {}
};

/// A boundary-only operation was called with a point off the boundary.
struct NotOnBoundary : std::runtime_error {
    explicit NotOnBoundary(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid or inconsistent run configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-point iteration exhausted its iteration budget.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what, std::vector<double> dists = {})
        : std::runtime_error(what), distances(std::move(dists)) {}
    std::vector<double> distances;
};

/// A mean-field dependent control was evaluated without a moment value.
struct MissingMeanField : std::runtime_error {
    explicit MissingMeanField(const std::string& what) : std::runtime_error(what) {}
};

/// Operation undefined for this control kind.
struct UnsupportedControl : std::runtime_error {
    explicit UnsupportedControl(const std::string& what) : std::runtime_error(what) {}
};

/// Statistic requested over an empty ensemble.
struct EmptyEnsemble : std::runtime_error {
    explicit EmptyEnsemble(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stickysim
