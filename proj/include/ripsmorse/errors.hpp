#pragma once

#include <stdexcept>
#include <string>

namespace ripsmorse {

// All engine failures carry a stable kind tag so the CLI can map them to
// exit codes and reports without string-matching free-form messages.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline EngineError metric_violation(const std::string& m) { return {"MetricViolation", m}; }
inline EngineError disconnected_graph(const std::string& m) { return {"DisconnectedGraph", m}; }
inline EngineError invalid_offset(const std::string& m) { return {"InvalidOffset", m}; }
inline EngineError sides_not_a_triangle(const std::string& m) { return {"SidesNotATriangle", m}; }
inline EngineError empty_subset(const std::string& m) { return {"EmptySubset", m}; }
inline EngineError not_a_permutation(const std::string& m) { return {"NotAPermutation", m}; }
inline EngineError group_too_large(const std::string& m) { return {"GroupTooLarge", m}; }
inline EngineError too_large(const std::string& m) { return {"TooLarge", m}; }
inline EngineError cap_violation(const std::string& m) { return {"CapViolation", m}; }
inline EngineError no_geodesic_vertex(const std::string& m) { return {"NoGeodesicVertex", m}; }
inline EngineError dimension_too_high(const std::string& m) { return {"DimensionTooHigh", m}; }
inline EngineError apex_missing(const std::string& m) { return {"ApexMissing", m}; }
inline EngineError map_not_order_preserving(const std::string& m) { return {"MapNotOrderPreserving", m}; }
inline EngineError no_finite_threshold(const std::string& m) { return {"NoFiniteThreshold", m}; }
inline EngineError schema_error(const std::string& m) { return {"SchemaError", m}; }

} // namespace ripsmorse
