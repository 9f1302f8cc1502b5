#include "stocenv/classify.hpp"

#include <algorithm>

#include "stocenv/errors.hpp"

namespace stocenv {

namespace {

std::vector<unsigned long> boundary_nullity_residues(const ClassificationContext& ctx) {
    std::vector<unsigned long> out;
    for (int k : ctx.report.boundary)
        out.push_back(ctx.invariants.nullities[static_cast<std::size_t>(k)] % ctx.invariants.d);
    std::sort(out.begin(), out.end());
    return out;
}

std::string multiset_text(const std::vector<unsigned long>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

}  // namespace

ClassificationContext classification_context(const StochasticMatrix& p) {
    ClassificationContext ctx;
    ctx.dynamics = analyze_dynamics(p);
    ctx.report = boundary_states(ctx.dynamics);
    ctx.invariants = envelope_invariants(ctx.dynamics, ctx.report);
    return ctx;
}

ClassificationVerdict stably_isomorphic_envelopes(const ClassificationContext& p,
                                                  const ClassificationContext& q) {
    ClassificationVerdict v;
    v.question = Question::StablyIsomorphic;
    if (!p.report.determined() || !q.report.determined()) {
        v.answer = Answer::Indeterminate;
        v.reason = "boundary set undetermined for at least one matrix";
        return v;
    }
    const std::size_t bp = p.report.boundary.size(), bq = q.report.boundary.size();
    v.answer = (bp == bq) ? Answer::Yes : Answer::No;
    v.reason = "boundary sizes " + std::to_string(bp) + " vs " + std::to_string(bq);
    return v;
}

ClassificationVerdict isomorphic_envelopes(const ClassificationContext& p,
                                           const ClassificationContext& q) {
    ClassificationVerdict v;
    v.question = Question::StarIsomorphic;
    if (!p.report.determined() || !q.report.determined()) {
        v.answer = Answer::Indeterminate;
        v.reason = "boundary set undetermined for at least one matrix";
        return v;
    }
    if (p.invariants.d != q.invariants.d) {
        v.answer = Answer::No;
        v.reason = "sizes " + std::to_string(p.invariants.d) + " vs " +
                   std::to_string(q.invariants.d);
        return v;
    }
    if (p.report.boundary.size() != q.report.boundary.size()) {
        v.answer = Answer::No;
        v.reason = "boundary sizes " + std::to_string(p.report.boundary.size()) + " vs " +
                   std::to_string(q.report.boundary.size());
        return v;
    }
    std::vector<unsigned long> rp = boundary_nullity_residues(p);
    std::vector<unsigned long> rq = boundary_nullity_residues(q);
    v.reason = "nullity residues mod d: " + multiset_text(rp) + " vs " + multiset_text(rq);
    if (rp != rq) {
        v.answer = Answer::No;
        return v;
    }
    v.answer = Answer::Yes;
    // Witness: pair boundary states after sorting each side by (residue, index).
    auto sorted_by_residue = [](const ClassificationContext& ctx) {
        std::vector<std::pair<unsigned long, int>> keyed;
        for (int k : ctx.report.boundary)
            keyed.emplace_back(ctx.invariants.nullities[static_cast<std::size_t>(k)] %
                                   ctx.invariants.d,
                               k);
        std::sort(keyed.begin(), keyed.end());
        return keyed;
    };
    std::vector<std::pair<unsigned long, int>> sp = sorted_by_residue(p), sq = sorted_by_residue(q);
    std::vector<std::pair<int, int>> tau;
    for (std::size_t i = 0; i < sp.size(); ++i) tau.emplace_back(sp[i].second, sq[i].second);
    v.witness = std::move(tau);
    return v;
}

const char* to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "Yes";
        case Answer::No: return "No";
        default: return "Indeterminate";
    }
}

const char* to_string(Question q) {
    return q == Question::StarIsomorphic ? "StarIsomorphic" : "StablyIsomorphic";
}

}  // namespace stocenv
