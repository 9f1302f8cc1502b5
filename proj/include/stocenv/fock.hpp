#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "stocenv/boundary.hpp"
#include "stocenv/graph.hpp"

namespace stocenv {

/**
 * Truncated column Fock module: levels 0..N, level-n basis indexed by states
 * i with P^(n)_{ik} > 0 (supports decided exactly). Holds a pointer to the
 * Dynamics bundle, which must outlive the module.
 */
class TruncatedFockModule {
public:
    TruncatedFockModule(const Dynamics& dyn, int column, unsigned long max_level);

    const Dynamics& dynamics() const { return *dyn_; }
    int column() const { return column_; }
    unsigned long max_level() const { return max_level_; }
    std::size_t dim() const { return basis_states_.size(); }

    /// Basis position of e^(level)_{state,k}, or -1 when absent.
    long index_of(unsigned long level, int state) const;
    bool has(unsigned long level, int state) const { return index_of(level, state) >= 0; }

    int state_at(std::size_t index) const { return basis_states_[index]; }
    unsigned long level_at(std::size_t index) const { return basis_levels_[index]; }

    std::size_t level_begin(unsigned long level) const { return level_offset_[level]; }
    std::size_t level_end(unsigned long level) const { return level_offset_[level + 1]; }
    std::size_t level_size(unsigned long level) const {
        return level_end(level) - level_begin(level);
    }

    /// Diagonal projection onto levels [lo, hi] (inclusive, clamped to N).
    Eigen::MatrixXd level_projection(unsigned long lo, unsigned long hi) const;

private:
    const Dynamics* dyn_;
    int column_;
    unsigned long max_level_;
    std::vector<int> basis_states_;
    std::vector<unsigned long> basis_levels_;
    std::vector<std::size_t> level_offset_;  ///< size max_level + 2
};

/// Dense operator in the module basis. degree = uniform level shift, when any.
struct FockOperator {
    Eigen::MatrixXd mat;
    int degree = 0;

    FockOperator adjoint() const { return FockOperator{mat.transpose(), -degree}; }
};

TruncatedFockModule build_module(const Dynamics& dyn, int k, unsigned long max_level);

/// Creation-type operator T^(1)_{E_ij}; requires (i,j) in E(P).
FockOperator op_T1(const TruncatedFockModule& mod, int i, int j);

/// n-step T^(n)_{E_ij}: the closed form, cross-checked against a composed
/// chain of op_T1 along a length-n path (agreement to 1e-12).
FockOperator op_Tn(const TruncatedFockModule& mod, unsigned long n, int i, int j);

/// S^(n)_{E_ij} = sqrt(P^(n)_{ij}) T^(n)_{E_ij}; requires (i,j) in E(P^n).
FockOperator op_S(const TruncatedFockModule& mod, unsigned long n, int i, int j);

/// W^(n)_A for a 0/1 matrix A supported in E(P^n): plain left multiplication.
FockOperator op_W(const TruncatedFockModule& mod, unsigned long n, const BoolMatrix& a);

/**
 * True when some unmasked adjoint image of W^(n)_A escapes the level-m basis
 * (the masked and unmasked adjoints then differ on level m+n).
 */
bool unmasked_adjoint_escapes(const TruncatedFockModule& mod, unsigned long n, const BoolMatrix& a,
                              unsigned long m);

/// Degree-r shift U of the standard family.
FockOperator op_U(const TruncatedFockModule& mod);

/// Standard-family S_ij; for i after j in proper order this is S_ji adjoint.
FockOperator op_Sij(const TruncatedFockModule& mod, int i, int j);

/// V_s: identity off state s plus U-shift on state s rows.
FockOperator op_V(const TruncatedFockModule& mod, int s);

struct FredholmIndexReport {
    long analytic_kernel = 0;
    long analytic_cokernel = 0;
    long numeric_kernel = 0;
    long numeric_cokernel = 0;
    long index = 0;  ///< analytic kernel - cokernel
    bool numeric_agrees = false;
};

/**
 * Fredholm index of V_s on the column-k module: analytic value from the
 * arrival indicator sequence, cross-checked against truncated-matrix ranks
 * on the faithful window (relative singular value threshold 1e-8).
 */
FredholmIndexReport fredholm_index_V(const Dynamics& dyn, int k, int s, unsigned long max_level);

/// Largest singular value of the restriction to input levels [lo, hi].
double operator_norm(const FockOperator& op, const TruncatedFockModule& mod, unsigned long lo,
                     unsigned long hi);

struct EventuallyProjectionReport {
    unsigned long m = 0;            ///< smallest level with all exact ratios <= 1+eps
    double m_bound = 0.0;           ///< max over edges of ||Q_{[0,m]} T*T||
    Rational max_ratio = 0;         ///< largest exact ratio at level m
    double min_eigenvalue = 0.0;    ///< smallest eigenvalue of the operator inequality
};

/**
 * Level threshold for (1+eps) p_j >= T^(1)*T^(1) - M Q_{[0,m]}: exact
 * rational ratio scan for m, then a numerical eigenvalue check of the
 * inequality on every column module.
 */
EventuallyProjectionReport verify_eventually_projection(const Dynamics& dyn, double eps);

/**
 * Cokernel count of the projection p = sum_i Q_{[nr,inf)} S_{1i}* S_{1i} Q_{[nr,inf)}
 * within levels [0, nr-1], reduced mod d. Must equal the extension defect.
 */
unsigned long verify_defect_cokernel(const Dynamics& dyn, const BoundaryReport& report, int k,
                                     unsigned long max_level);

struct RelationSuiteReport {
    unsigned long window_lo = 0;   ///< first trusted level (global m0 + r)
    unsigned long window_hi = 0;   ///< N - r
    double max_in_window = 0.0;    ///< worst relation norm inside the window
    double max_below_window = 0.0; ///< worst violation recorded below it
};

/// Almost-universal relations for the standard family on the column-k module.
RelationSuiteReport verify_relation_suite(const Dynamics& dyn, int k, unsigned long max_level);

/// Default truncation depth: 4*m0 + 2r.
unsigned long default_levels(const Dynamics& dyn);

}  // namespace stocenv
