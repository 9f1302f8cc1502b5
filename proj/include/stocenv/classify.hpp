#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stocenv/envelope.hpp"

namespace stocenv {

enum class Question { StarIsomorphic, StablyIsomorphic };
enum class Answer { Yes, No, Indeterminate };

struct ClassificationVerdict {
    Question question = Question::StarIsomorphic;
    Answer answer = Answer::Indeterminate;
    /// For Yes on StarIsomorphic: pairs (boundary state of P, boundary state of Q).
    std::optional<std::vector<std::pair<int, int>>> witness;
    std::string reason;
};

/// Precomputed inputs for classification queries over one matrix.
struct ClassificationContext {
    Dynamics dynamics;
    BoundaryReport report;
    EnvelopeInvariants invariants;
};

ClassificationContext classification_context(const StochasticMatrix& p);

ClassificationVerdict stably_isomorphic_envelopes(const ClassificationContext& p,
                                                  const ClassificationContext& q);

ClassificationVerdict isomorphic_envelopes(const ClassificationContext& p,
                                           const ClassificationContext& q);

const char* to_string(Answer a);
const char* to_string(Question q);

}  // namespace stocenv
