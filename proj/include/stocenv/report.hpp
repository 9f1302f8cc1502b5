#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "stocenv/classify.hpp"
#include "stocenv/graph_algebra.hpp"

namespace stocenv {

inline constexpr const char* kToolName = "stocenv";
inline constexpr const char* kToolVersion = "0.1.0";

/// Parse {"states": [...], "rows": [["p/q", ...], ...]} into a validated matrix.
StochasticMatrix parse_input(const nlohmann::json& doc);
StochasticMatrix parse_input_text(const std::string& text);

/// Full analysis report (decomposition, boundary, envelope, graph K-theory).
nlohmann::json analysis_report(const StochasticMatrix& p);

/// Classification verdicts plus the graph-algebra comparison for a pair.
nlohmann::json classify_report(const StochasticMatrix& p, const StochasticMatrix& q);

/// Cuntz-Krieger K-theory of Gr(P) only.
nlohmann::json graph_algebra_report(const StochasticMatrix& p);

/**
 * Fock verification suite for the given columns (default: boundary states):
 * relation suite, Fredholm indices, defect cokernel, eventually-projection.
 */
nlohmann::json fock_report(const StochasticMatrix& p, std::vector<int> columns,
                           unsigned long levels, double tolerance, int basepoint);

/// True when any verdict or trichotomy inside the report is Indeterminate.
bool report_has_indeterminate(const nlohmann::json& report);

}  // namespace stocenv
