#pragma once

#include "spclass/projection.hpp"
#include "spclass/solver.hpp"
#include "spclass/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spc {

enum class Outcome {
    FANO_CASE,
    R_LE_3_RESIDUAL,
    NO_NULL_VERTEX_POSSIBLE,
    SUPERPOTENTIAL_FOUND,
    CANDIDATE_SURVIVES,
    UNDECIDED,
};

std::string outcome_name(Outcome o);

struct EvidenceRecord {
    std::string candidate;
    std::string anchor;
    std::string detail;
};

struct Verdict {
    Outcome outcome = Outcome::UNDECIDED;
    std::vector<EvidenceRecord> evidence;   // eliminated candidates
    std::vector<std::string> survivors;     // surviving candidate descriptions
    std::optional<CoefficientAssignment> solution;
    std::optional<SupportSet> support;
    double verify_defect = 0.0;
};

struct standing_assumption_error : math_error {
    using math_error::math_error;
};

struct ClassifyOptions {
    unsigned seed = 1;
    double tol = 1e-10;
    bool attempt_solve = true;  // when numeric coefficients are present
};

// The full pipeline: candidate enumeration, per-candidate filters, and the
// circle-bundle solve when coefficients are supplied.
Verdict classify_instance(const WeightSystem& ws, const ClassifyOptions& opt = {});

// Fano support set: the type I apex plus the repeated-slot family.
SupportSet fano_support(const WeightSystem& ws, int pivot);

std::string verdict_to_json(const Verdict& v);
std::string verdict_to_text(const Verdict& v);

}  // namespace spc
