#pragma once

#include "spclass/catalog.hpp"
#include "spclass/polytope.hpp"
#include "spclass/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spc {

// Closed registry of elimination-evidence anchors; reports may only cite these.
const std::vector<std::string>& anchor_registry();
bool known_anchor(const std::string& id);

struct NullCandidate {
    enum class Origin { TypeI, TwoVMinusW, FourThirds, LambdaFamily, FaceDerived, SolvedOneB };
    QVector c;
    Origin origin;
    std::string note;  // generating data, informational only
    std::string str() const;
};

// Candidate with an irrational collinearity parameter; handled by the
// bounding filters only.
struct SurdCandidate {
    std::vector<Quad> c;
    Weight v, w;
    Quad lambda;
};

struct CandidateSet {
    std::vector<NullCandidate> rational;
    std::vector<SurdCandidate> surd;
};

CandidateSet enumerate_null_candidates(const WeightSystem& ws, bool with_face_derived = true);

// Indices into ws.weights of the u with bar u in bar c-perp.
std::vector<int> enumerate_1A(const WeightSystem& ws, const QVector& c);

// Hull vertices x with the doubled-point relation; returns (index, a = 2x - c).
std::vector<std::pair<int, QVector>> enumerate_1B(const WeightSystem& ws, const QVector& c);

struct SHatSets {
    std::vector<int> s1;
    std::vector<int> s_ge2;
    bool consistent = true;  // d_i = 4 holds on s_ge2
};
SHatSets s_hat(const WeightSystem& ws, const QVector& c);

// Largest admissible r under the vertex-count bounds.
int counting_bound(int one_a, int two, int adjacent_1b, bool has_1b);

struct Class1AMatch {
    std::string tag;  // "1", "2", "3i", "3ii", "4", "5i", "5ii", "5iii", "6i", "6ii", "6iii", "empty"
    int m = 0;
};
std::optional<Class1AMatch> class1a_match(const WeightSystem& ws, const QVector& c,
                                          const std::vector<int>& one_a);

struct VertexClass {
    enum class Tag { OneA, OneB, Two } tag;
    std::vector<int> fiber;      // weight indices on the viewing line
    std::optional<QVector> partner;  // 1B: the mirrored null vector a
    std::optional<Rat> lambda;       // 2: c = lambda v + (1 - lambda) w
};

struct Elimination {
    std::string anchor;
    std::string detail;
};

struct ClassifyOutcome {
    bool eliminated = false;
    bool fano = false;  // candidate realizes the circle-bundle case
    Elimination why;
    std::vector<VertexClass> vertices;
    std::vector<int> one_a;
    std::vector<std::pair<int, QVector>> one_b;
    int two_count = 0;
};

// Runs the full filter chain on one rational candidate.  `depth` guards the
// partner recursion; `all_nulls`, when supplied, lists every enumerated null
// vector so the support-closure check can account for alternative partners.
ClassifyOutcome classify_candidate(const WeightSystem& ws, const QVector& c, int depth = 0,
                                   const std::vector<QVector>* all_nulls = nullptr);

// Bounding-filter chain for irrational-parameter candidates.
ClassifyOutcome classify_surd_candidate(const WeightSystem& ws, const SurdCandidate& cand);

// Candidate c vectors arising from catalog 2-faces matched inside the hull.
std::vector<NullCandidate> face_derived_candidates(const WeightSystem& ws);

}  // namespace spc
