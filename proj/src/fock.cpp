#include "stocenv/fock.hpp"

#include <algorithm>
#include <cmath>

#include "stocenv/errors.hpp"

namespace stocenv {

namespace {

/// Exact powers P^0..P^top computed iteratively (module-local cache).
std::vector<RationalMatrix> exact_powers(const Dynamics& dyn, unsigned long top) {
    std::vector<RationalMatrix> out;
    out.reserve(top + 1);
    for (unsigned long n = 0; n <= top && n < dyn.powers.size(); ++n) out.push_back(dyn.powers[n]);
    while (out.size() <= top) out.push_back(out.back().multiply(dyn.matrix.entries));
    return out;
}

std::size_t numeric_rank(const Eigen::MatrixXd& m, double rel_threshold = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    qr.setThreshold(rel_threshold);  // relative to the largest pivot
    return static_cast<std::size_t>(qr.rank());
}

}  // namespace

TruncatedFockModule::TruncatedFockModule(const Dynamics& dyn, int column, unsigned long max_level)
    : dyn_(&dyn), column_(column), max_level_(max_level) {
    if (column < 0 || static_cast<std::size_t>(column) >= dyn.size())
        throw Error("column state out of range");
    level_offset_.push_back(0);
    for (unsigned long n = 0; n <= max_level; ++n) {
        for (std::size_t i = 0; i < dyn.size(); ++i)
            if (dyn.support_at(n, static_cast<int>(i), column)) {
                basis_states_.push_back(static_cast<int>(i));
                basis_levels_.push_back(n);
            }
        level_offset_.push_back(basis_states_.size());
    }
}

long TruncatedFockModule::index_of(unsigned long level, int state) const {
    if (level > max_level_) return -1;
    for (std::size_t idx = level_begin(level); idx < level_end(level); ++idx)
        if (basis_states_[idx] == state) return static_cast<long>(idx);
    return -1;
}

Eigen::MatrixXd TruncatedFockModule::level_projection(unsigned long lo, unsigned long hi) const {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(dim(), dim());
    hi = std::min(hi, max_level_);
    for (unsigned long n = lo; n <= hi; ++n)
        for (std::size_t idx = level_begin(n); idx < level_end(n); ++idx)
            q(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = 1.0;
    return q;
}

TruncatedFockModule build_module(const Dynamics& dyn, int k, unsigned long max_level) {
    return TruncatedFockModule(dyn, k, max_level);
}

namespace {

/// Shared closed-form builder for T^(n)_{E_ij}.
FockOperator direct_Tn(const TruncatedFockModule& mod, const std::vector<RationalMatrix>& pow,
                       unsigned long n, int i, int j) {
    const int k = mod.column();
    FockOperator op{Eigen::MatrixXd::Zero(mod.dim(), mod.dim()), static_cast<int>(n)};
    for (unsigned long m = 0; m + n <= mod.max_level(); ++m) {
        long src = mod.index_of(m, j);
        if (src < 0) continue;
        long dst = mod.index_of(m + n, i);
        if (dst < 0) throw Error("target basis vector missing for a supported transition");
        Rational ratio = pow[m].at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) /
                         pow[m + n].at(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
        op.mat(dst, src) = std::sqrt(ratio.get_d());
    }
    return op;
}

}  // namespace

FockOperator op_T1(const TruncatedFockModule& mod, int i, int j) {
    const Dynamics& dyn = mod.dynamics();
    if (!dyn.support_at(1, i, j)) throw EdgeNotInSupport("(i,j) not an edge of the support");
    std::vector<RationalMatrix> pow = exact_powers(dyn, mod.max_level() + 1);
    return direct_Tn(mod, pow, 1, i, j);
}

FockOperator op_Tn(const TruncatedFockModule& mod, unsigned long n, int i, int j) {
    const Dynamics& dyn = mod.dynamics();
    if (n == 0) throw Error("op_Tn requires n >= 1");
    if (!dyn.support_at(n, i, j)) throw EdgeNotInSupport("(i,j) not an edge of the n-step support");
    std::vector<RationalMatrix> pow = exact_powers(dyn, mod.max_level() + n);
    FockOperator direct = direct_Tn(mod, pow, n, i, j);

    // Cross-check: compose one-step operators along a length-n path i -> j.
    const std::size_t d = dyn.size();
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(d, 0));
    reach[0][static_cast<std::size_t>(i)] = 1;
    for (unsigned long t = 1; t <= n; ++t)
        for (std::size_t u = 0; u < d; ++u)
            if (reach[t - 1][u])
                for (std::size_t v = 0; v < d; ++v)
                    if (dyn.support_at(1, static_cast<int>(u), static_cast<int>(v)))
                        reach[t][v] = 1;
    std::vector<int> path(n + 1);
    path[n] = j;
    for (unsigned long t = n; t-- > 0;) {
        int chosen = -1;
        for (std::size_t u = 0; u < d && chosen < 0; ++u)
            if (reach[t][u] && dyn.support_at(1, static_cast<int>(u), path[t + 1]))
                chosen = static_cast<int>(u);
        if (chosen < 0) throw Error("path reconstruction failed despite supported n-step edge");
        path[t] = chosen;
    }
    Eigen::MatrixXd composed = Eigen::MatrixXd::Identity(mod.dim(), mod.dim());
    for (unsigned long t = 0; t < n; ++t)
        composed = composed * direct_Tn(mod, pow, 1, path[t], path[t + 1]).mat;
    if ((composed - direct.mat).cwiseAbs().maxCoeff() > 1e-12)
        throw Error("path-composed T^(n) disagrees with the closed form");
    return direct;
}

FockOperator op_S(const TruncatedFockModule& mod, unsigned long n, int i, int j) {
    const Dynamics& dyn = mod.dynamics();
    if (!dyn.support_at(n, i, j)) throw EdgeNotInSupport("(i,j) not an edge of the n-step support");
    std::vector<RationalMatrix> pow = exact_powers(dyn, std::max<unsigned long>(n, 1));
    double scale = std::sqrt(
        pow[n].at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d());
    FockOperator t = op_Tn(mod, n, i, j);
    t.mat *= scale;
    return t;
}

FockOperator op_W(const TruncatedFockModule& mod, unsigned long n, const BoolMatrix& a) {
    const Dynamics& dyn = mod.dynamics();
    const std::size_t d = dyn.size();
    if (a.size() != d) throw SupportViolation("coefficient matrix has the wrong size");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (a.at(i, j) && !dyn.support_at(n, static_cast<int>(i), static_cast<int>(j)))
                throw SupportViolation("coefficient outside E(P^n)");

    FockOperator op{Eigen::MatrixXd::Zero(mod.dim(), mod.dim()), static_cast<int>(n)};
    for (unsigned long m = 0; m + n <= mod.max_level(); ++m)
        for (std::size_t src = mod.level_begin(m); src < mod.level_end(m); ++src) {
            int j = mod.state_at(src);
            for (std::size_t i = 0; i < d; ++i) {
                if (!a.at(i, static_cast<std::size_t>(j))) continue;
                long dst = mod.index_of(m + n, static_cast<int>(i));
                if (dst < 0) throw Error("W image left the module basis");
                op.mat(dst, static_cast<Eigen::Index>(src)) += 1.0;
            }
        }
    return op;
}

bool unmasked_adjoint_escapes(const TruncatedFockModule& mod, unsigned long n, const BoolMatrix& a,
                              unsigned long m) {
    const std::size_t d = mod.dynamics().size();
    if (m + n > mod.max_level()) throw EmptyWindow("level beyond the truncation");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (a.at(i, j) && mod.has(m + n, static_cast<int>(i)) &&
                !mod.has(m, static_cast<int>(j)))
                return true;
    return false;
}

FockOperator op_U(const TruncatedFockModule& mod) {
    const unsigned long r = mod.dynamics().decomp.period;
    FockOperator op{Eigen::MatrixXd::Zero(mod.dim(), mod.dim()), static_cast<int>(r)};
    for (unsigned long m = 0; m + r <= mod.max_level(); ++m)
        for (std::size_t src = mod.level_begin(m); src < mod.level_end(m); ++src) {
            long dst = mod.index_of(m + r, mod.state_at(src));
            if (dst >= 0) op.mat(dst, static_cast<Eigen::Index>(src)) = 1.0;
        }
    return op;
}

FockOperator op_Sij(const TruncatedFockModule& mod, int i, int j) {
    const CyclicDecomposition& decomp = mod.dynamics().decomp;
    auto pos = [&](int s) {
        return std::find(decomp.proper_order.begin(), decomp.proper_order.end(), s) -
               decomp.proper_order.begin();
    };
    if (pos(i) > pos(j)) return op_Sij(mod, j, i).adjoint();

    const unsigned long l = decomp.sigma[static_cast<std::size_t>(j)] -
                            decomp.sigma[static_cast<std::size_t>(i)];
    FockOperator op{Eigen::MatrixXd::Zero(mod.dim(), mod.dim()), static_cast<int>(l)};
    for (unsigned long m = 0; m + l <= mod.max_level(); ++m) {
        long src = mod.index_of(m, j);
        if (src < 0) continue;
        long dst = mod.index_of(m + l, i);
        if (dst >= 0) op.mat(dst, src) = 1.0;
    }
    return op;
}

FockOperator op_V(const TruncatedFockModule& mod, int s) {
    const unsigned long r = mod.dynamics().decomp.period;
    FockOperator op{Eigen::MatrixXd::Zero(mod.dim(), mod.dim()), 0};
    for (std::size_t idx = 0; idx < mod.dim(); ++idx) {
        if (mod.state_at(idx) != s) {
            op.mat(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = 1.0;
        } else if (mod.level_at(idx) + r <= mod.max_level()) {
            long dst = mod.index_of(mod.level_at(idx) + r, s);
            if (dst >= 0) op.mat(dst, static_cast<Eigen::Index>(idx)) = 1.0;
        }
    }
    return op;
}

FredholmIndexReport fredholm_index_V(const Dynamics& dyn, int k, int s, unsigned long max_level) {
    const unsigned long r = dyn.decomp.period;
    const unsigned long m0k = dyn.profile.per_state[static_cast<std::size_t>(k)];
    if (max_level < m0k + 2 * r) throw TruncationTooShallow("need max_level >= m0(k) + 2r");

    // Arrival indicator b_n = [P^(nr+l)_{sk} > 0], constant 1 past stabilization.
    const unsigned long l =
        (dyn.decomp.sigma[static_cast<std::size_t>(k)] + r -
         dyn.decomp.sigma[static_cast<std::size_t>(s)]) % r;
    const unsigned long top = std::max(m0k + r, max_level) + r;
    const unsigned long n_max = (top - l) / r;
    std::vector<char> b(n_max + 1, 0);
    for (unsigned long n = 0; n <= n_max; ++n)
        b[n] = dyn.support_at(n * r + l, s, k) ? 1 : 0;
    if (!b[n_max]) throw Error("arrival indicator did not stabilize to 1");

    FredholmIndexReport rep;
    for (unsigned long n = 0; n < n_max; ++n)
        if (b[n] && !b[n + 1]) ++rep.analytic_kernel;
    if (b[0]) ++rep.analytic_cokernel;
    for (unsigned long n = 1; n <= n_max; ++n)
        if (b[n] && !b[n - 1]) ++rep.analytic_cokernel;
    rep.index = rep.analytic_kernel - rep.analytic_cokernel;

    // Numeric cross-check on the faithful window [0, max_level - r].
    TruncatedFockModule mod(dyn, k, max_level);
    FockOperator v = op_V(mod, s);
    const std::size_t win = mod.level_end(max_level - r);
    Eigen::MatrixXd cols = v.mat.leftCols(static_cast<Eigen::Index>(win));
    Eigen::MatrixXd rows = v.mat.topRows(static_cast<Eigen::Index>(win));
    rep.numeric_kernel = static_cast<long>(win - numeric_rank(cols));
    rep.numeric_cokernel = static_cast<long>(win - numeric_rank(rows));

    long ker_w = 0, coker_w = 0;
    for (unsigned long n = 0; n <= n_max && n * r + l + r <= max_level; ++n) {
        if (n * r + l > max_level - r) break;
        if (b[n] && !b[n + 1]) ++ker_w;
        if (b[n] && (n == 0 || !b[n - 1])) ++coker_w;
    }
    rep.numeric_agrees = (rep.numeric_kernel == ker_w) && (rep.numeric_cokernel == coker_w);
    return rep;
}

double operator_norm(const FockOperator& op, const TruncatedFockModule& mod, unsigned long lo,
                     unsigned long hi) {
    if (lo > mod.max_level()) throw EmptyWindow("window beyond the truncation");
    hi = std::min(hi, mod.max_level());
    if (hi < lo) throw EmptyWindow("empty level window");
    const std::size_t begin = mod.level_begin(lo), end = mod.level_end(hi);
    if (end == begin) throw EmptyWindow("window contains no basis vectors");
    Eigen::MatrixXd sub =
        op.mat.middleCols(static_cast<Eigen::Index>(begin), static_cast<Eigen::Index>(end - begin));
    if (sub.rows() < 2000 && sub.cols() < 2000) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub);
        return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    }
    // Power iteration on A^T A for large blocks.
    Eigen::VectorXd x = Eigen::VectorXd::Ones(sub.cols());
    x.normalize();
    double prev = 0.0;
    for (int it = 0; it < 100000; ++it) {
        Eigen::VectorXd y = sub.transpose() * (sub * x);
        double norm = y.norm();
        if (norm == 0.0) return 0.0;
        x = y / norm;
        double estimate = std::sqrt(norm);
        if (std::abs(estimate - prev) <= 1e-12 * std::max(1.0, estimate)) return estimate;
        prev = estimate;
    }
    return prev;
}

EventuallyProjectionReport verify_eventually_projection(const Dynamics& dyn, double eps) {
    if (!(eps > 0)) throw Error("eps must be positive");
    const std::size_t d = dyn.size();
    const unsigned long r = dyn.decomp.period;
    const unsigned long m0 = dyn.profile.global;
    const Rational bound = Rational(1) + rational_from_double(eps);

    // Exact scan: ok(m) = every ratio P^(m)_{jl} / P^(m+1)_{il} <= 1 + eps.
    // Returned m is the start of a run of good levels long enough to cover
    // the numerical verification window, so the bound persists there.
    const unsigned long cap = 8 * (m0 + 2 * r) + 8192;
    const unsigned long run_needed = 2 * (m0 + 2 * r) + 64;
    RationalMatrix cur = dyn.matrix.entries;  // P^1
    RationalMatrix next = cur.multiply(dyn.matrix.entries);
    unsigned long m_star = 0, run = 0;
    for (unsigned long m = 1; m <= cap; ++m) {
        bool good = true;
        for (std::size_t i = 0; i < d && good; ++i)
            for (std::size_t j = 0; j < d && good; ++j) {
                if (dyn.matrix.entries.at(i, j) == 0) continue;
                for (std::size_t l = 0; l < d && good; ++l) {
                    if (cur.at(j, l) == 0) continue;
                    if (cur.at(j, l) > bound * next.at(i, l)) good = false;
                }
            }
        if (good) {
            if (run == 0) m_star = m;
            if (++run >= run_needed) break;
        } else {
            run = 0;
        }
        if (m < cap) {
            cur = next;
            next = cur.multiply(dyn.matrix.entries);
        }
    }
    if (run < run_needed) throw CapExceeded("ratio bound did not persist below the scan cap");

    EventuallyProjectionReport rep;
    rep.m = m_star;

    // Largest ratio at m_star, for the report.
    RationalMatrix pm = power_at(dyn, m_star);
    RationalMatrix pm1 = power_at(dyn, m_star + 1);
    Rational max_ratio = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (dyn.matrix.entries.at(i, j) == 0) continue;
            for (std::size_t l = 0; l < d; ++l)
                if (pm.at(j, l) != 0) {
                    Rational ratio = pm.at(j, l) / pm1.at(i, l);
                    max_ratio = std::max(max_ratio, ratio);
                }
        }
    rep.max_ratio = max_ratio;

    // Numeric inequality (1+eps) p_j - T*T + M Q_{[0,m]} >= -1e-9 on every
    // column module. All three operators are diagonal in the module basis,
    // which the check asserts before reading eigenvalues off the diagonal.
    const unsigned long n_levels = m_star + m0 + 2 * r + 2;
    double global_m = 0.0, min_eig = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        TruncatedFockModule mod(dyn, static_cast<int>(k), n_levels);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (dyn.matrix.entries.at(i, j) == 0) continue;
                FockOperator t = op_T1(mod, static_cast<int>(i), static_cast<int>(j));
                Eigen::MatrixXd tt = t.mat.transpose() * t.mat;
                double m_edge = 0.0;
                for (std::size_t idx = 0; idx < mod.level_end(std::min(m_star, n_levels)); ++idx)
                    m_edge = std::max(m_edge, tt(static_cast<Eigen::Index>(idx),
                                                 static_cast<Eigen::Index>(idx)));
                global_m = std::max(global_m, m_edge);
            }
    }
    for (std::size_t k = 0; k < d; ++k) {
        TruncatedFockModule mod(dyn, static_cast<int>(k), n_levels);
        Eigen::MatrixXd q = mod.level_projection(0, m_star);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (dyn.matrix.entries.at(i, j) == 0) continue;
                FockOperator t = op_T1(mod, static_cast<int>(i), static_cast<int>(j));
                Eigen::MatrixXd expr = -(t.mat.transpose() * t.mat) + global_m * q;
                for (std::size_t idx = 0; idx < mod.dim(); ++idx)
                    if (mod.state_at(idx) == static_cast<int>(j))
                        expr(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) +=
                            1.0 + eps;
                // Trusted block: levels [0, n_levels - 1].
                const std::size_t win = mod.level_end(n_levels - 1);
                Eigen::MatrixXd block = expr.topLeftCorner(static_cast<Eigen::Index>(win),
                                                           static_cast<Eigen::Index>(win));
                Eigen::MatrixXd off = block;
                off.diagonal().setZero();
                if (off.cwiseAbs().maxCoeff() > 1e-15)
                    throw Error("operator inequality expression is not diagonal");
                min_eig = std::min(min_eig, block.diagonal().minCoeff());
            }
    }
    rep.m_bound = global_m;
    rep.min_eigenvalue = min_eig;
    return rep;
}

unsigned long verify_defect_cokernel(const Dynamics& dyn, const BoundaryReport& report, int k,
                                     unsigned long max_level) {
    if (!report.is_boundary(k))
        throw NotBoundaryState("defect cokernel requires a boundary state");
    const unsigned long r = dyn.decomp.period;
    const unsigned long m0k = dyn.profile.per_state[static_cast<std::size_t>(k)];
    const unsigned long n = (m0k + r - 1) / r;
    if (max_level < n * r + r) throw TruncationTooShallow("need max_level >= n*r + r");

    TruncatedFockModule mod(dyn, k, max_level);
    const int first = dyn.decomp.proper_order[0];
    Eigen::MatrixXd q = mod.level_projection(n * r, max_level);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(mod.dim(), mod.dim());
    for (std::size_t i = 0; i < dyn.size(); ++i) {
        FockOperator s = op_Sij(mod, first, static_cast<int>(i));
        p += q * (s.mat.transpose() * s.mat) * q;
    }
    // Cokernel of p inside levels [0, n*r - 1].
    const std::size_t block = mod.level_end(n * r - 1);
    Eigen::MatrixXd rows = p.topRows(static_cast<Eigen::Index>(block));
    unsigned long count = static_cast<unsigned long>(block - numeric_rank(rows));
    return count % dyn.size();
}

namespace {

/// Partial permutation on the module basis: each basis vector maps to one
/// basis vector or to zero. U, the standard S_ij, and their adjoints all
/// have this shape with 0/1 entries, so relation checking is exact.
struct PartialPerm {
    std::vector<long> target;  // -1 = annihilated

    static PartialPerm identity(std::size_t n) {
        PartialPerm p;
        p.target.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.target[i] = static_cast<long>(i);
        return p;
    }
    PartialPerm then(const PartialPerm& outer) const {
        PartialPerm p;
        p.target.resize(target.size(), -1);
        for (std::size_t i = 0; i < target.size(); ++i)
            if (target[i] >= 0) p.target[i] = outer.target[static_cast<std::size_t>(target[i])];
        return p;
    }
    PartialPerm adjoint() const {
        PartialPerm p;
        p.target.resize(target.size(), -1);
        for (std::size_t i = 0; i < target.size(); ++i)
            if (target[i] >= 0) p.target[static_cast<std::size_t>(target[i])] = static_cast<long>(i);
        return p;
    }
};

PartialPerm perm_from_op(const FockOperator& op) {
    PartialPerm p;
    const Eigen::Index n = op.mat.cols();
    p.target.resize(static_cast<std::size_t>(n), -1);
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < n; ++r)
            if (op.mat(r, c) != 0.0) {
                if (op.mat(r, c) != 1.0 || p.target[static_cast<std::size_t>(c)] >= 0)
                    throw Error("operator is not a 0/1 partial permutation");
                p.target[static_cast<std::size_t>(c)] = static_cast<long>(r);
            }
    return p;
}

/// Largest per-column deviation between two partial permutations, columns
/// restricted to [begin, end). Exact values in {0, 1, sqrt(2)}.
double perm_deviation(const PartialPerm& a, const PartialPerm& b, std::size_t begin,
                      std::size_t end) {
    double worst = 0.0;
    for (std::size_t c = begin; c < end; ++c) {
        if (a.target[c] == b.target[c]) continue;
        bool both = a.target[c] >= 0 && b.target[c] >= 0;
        worst = std::max(worst, both ? std::sqrt(2.0) : 1.0);
    }
    return worst;
}

}  // namespace

RelationSuiteReport verify_relation_suite(const Dynamics& dyn, int k, unsigned long max_level) {
    const std::size_t d = dyn.size();
    const unsigned long r = dyn.decomp.period;
    RelationSuiteReport rep;
    rep.window_lo = dyn.profile.global + r;
    rep.window_hi = max_level - r;
    if (rep.window_hi < rep.window_lo)
        throw TruncationTooShallow("truncation below the relation window");

    TruncatedFockModule mod(dyn, k, max_level);
    PartialPerm u = perm_from_op(op_U(mod));
    PartialPerm u_adj = u.adjoint();
    std::vector<std::vector<PartialPerm>> s(d, std::vector<PartialPerm>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            s[i][j] = perm_from_op(op_Sij(mod, static_cast<int>(i), static_cast<int>(j)));

    const std::size_t wb = mod.level_begin(rep.window_lo);
    const std::size_t we = mod.level_end(rep.window_hi);
    const PartialPerm ident = PartialPerm::identity(mod.dim());
    PartialPerm zero;
    zero.target.assign(mod.dim(), -1);

    auto record = [&](const PartialPerm& lhs, const PartialPerm& rhs) {
        rep.max_in_window = std::max(rep.max_in_window, perm_deviation(lhs, rhs, wb, we));
        rep.max_below_window = std::max(rep.max_below_window, perm_deviation(lhs, rhs, 0, wb));
    };

    record(u.then(u_adj), ident);   // U*U = I (U* applied after U)
    record(u_adj.then(u), ident);   // UU* = I
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            record(u.then(s[i][j]), s[i][j].then(u));  // S_ij U = U S_ij
            for (std::size_t t = 0; t < d; ++t)
                for (std::size_t m = 0; m < d; ++m)
                    record(s[t][m].then(s[i][j]), j == t ? s[i][m] : zero);
        }
    return rep;
}

unsigned long default_levels(const Dynamics& dyn) {
    return 4 * dyn.profile.global + 2 * dyn.decomp.period;
}

}  // namespace stocenv
