#include "spclass/driver.hpp"

#include "spclass/io.hpp"
#include "spclass/polytope.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace spc {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::FANO_CASE: return "FANO_CASE";
        case Outcome::R_LE_3_RESIDUAL: return "R_LE_3_RESIDUAL";
        case Outcome::NO_NULL_VERTEX_POSSIBLE: return "NO_NULL_VERTEX_POSSIBLE";
        case Outcome::SUPERPOTENTIAL_FOUND: return "SUPERPOTENTIAL_FOUND";
        case Outcome::CANDIDATE_SURVIVES: return "CANDIDATE_SURVIVES";
        case Outcome::UNDECIDED: return "UNDECIDED";
    }
    return "UNDECIDED";
}

SupportSet fano_support(const WeightSystem& ws, int pivot) {
    SupportSet C;
    C.points.push_back(type_i(pivot, ws.r()).qvec());
    for (const Weight& w : ws.weights)
        if (w.type == WType::III) C.points.push_back(w.qvec());
    return C;
}

Verdict classify_instance(const WeightSystem& ws, const ClassifyOptions& opt) {
    Verdict v;
    auto violations = validate(ws);
    if (!violations.empty()) {
        std::string all;
        for (auto& viol : violations) all += viol.code + ": " + viol.message + "; ";
        throw input_error("invalid weight system: " + all);
    }
    AffineConfig cfg(ws.points(), ws.d);
    if (hull_dim(cfg) != ws.r() - 1)
        throw standing_assumption_error("weight hull has dimension " +
                                        std::to_string(hull_dim(cfg)) + ", expected " +
                                        std::to_string(ws.r() - 1));

    CandidateSet cands = enumerate_null_candidates(ws);
    std::sort(cands.rational.begin(), cands.rational.end(),
              [](const NullCandidate& a, const NullCandidate& b) { return a.c < b.c; });
    std::vector<QVector> all_nulls;
    for (const NullCandidate& cand : cands.rational) all_nulls.push_back(cand.c);

    bool fano_hit = false;
    for (const NullCandidate& cand : cands.rational) {
        ClassifyOutcome res = classify_candidate(ws, cand.c, 0, &all_nulls);
        if (res.eliminated) {
            v.evidence.push_back({cand.str(), res.why.anchor, res.why.detail});
        } else if (res.fano) {
            fano_hit = true;
            v.survivors.push_back(cand.str());
        } else {
            v.survivors.push_back(cand.str());
        }
    }
    for (const SurdCandidate& sc : cands.surd) {
        ClassifyOutcome res = classify_surd_candidate(ws, sc);
        std::string desc = "irrational parameter " + sc.lambda.str() + " on " + sc.v.str() +
                           sc.w.str();
        if (res.eliminated)
            v.evidence.push_back({desc, res.why.anchor, res.why.detail});
        else
            v.survivors.push_back(desc);
    }

    if (fano_hit) {
        v.outcome = Outcome::FANO_CASE;
        auto pivot = fano_pivot(ws);
        SupportSet C = fano_support(ws, *pivot);
        v.support = C;
        if (ws.a_values && opt.attempt_solve) {
            EqnSystem sys = build_eqnF(C, ws);
            CoefficientAssignment sol = solve(sys, opt.seed, opt.tol);
            if (sol.status == CoefficientAssignment::Status::SOLVED) {
                VerifyReport rep = verify(C, sol.values, ws, opt.tol, opt.seed);
                v.verify_defect = std::max(rep.max_equation_residual, rep.max_spot_defect);
                if (rep.pass) v.outcome = Outcome::SUPERPOTENTIAL_FOUND;
            }
            v.solution = std::move(sol);
        }
        return v;
    }
    if (v.survivors.empty()) {
        v.outcome = Outcome::NO_NULL_VERTEX_POSSIBLE;
        return v;
    }
    v.outcome = ws.r() <= 3 ? Outcome::R_LE_3_RESIDUAL : Outcome::CANDIDATE_SURVIVES;
    return v;
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["verdict"] = outcome_name(v.outcome);
    nlohmann::json ev = nlohmann::json::array();
    for (const EvidenceRecord& e : v.evidence)
        ev.push_back({{"candidate", e.candidate}, {"anchor", e.anchor}, {"detail", e.detail}});
    j["evidence"] = ev;
    j["survivors"] = v.survivors;
    if (v.solution) {
        nlohmann::json s;
        s["status"] = v.solution->status == CoefficientAssignment::Status::SOLVED ? "SOLVED"
                      : v.solution->status == CoefficientAssignment::Status::INFEASIBLE
                          ? "INFEASIBLE"
                          : "UNDECIDED";
        s["values"] = v.solution->values;
        s["residual"] = v.solution->residual;
        if (v.support) {
            nlohmann::json pts = nlohmann::json::array();
            for (const QVector& p : v.support->points) {
                nlohmann::json row = nlohmann::json::array();
                for (int i = 0; i < p.size(); ++i) row.push_back(to_string(p[i]));
                pts.push_back(row);
            }
            s["support"] = pts;
        }
        j["solution"] = s;
    }
    return j.dump(2);
}

std::string verdict_to_text(const Verdict& v) {
    std::ostringstream os;
    os << "verdict: " << outcome_name(v.outcome) << "\n";
    for (const EvidenceRecord& e : v.evidence)
        os << "  eliminated " << e.candidate << "  [" << e.anchor << "] " << e.detail << "\n";
    for (const std::string& s : v.survivors) os << "  survives " << s << "\n";
    if (v.solution) {
        os << "  solve: residual " << v.solution->residual << "\n";
        os << "  coefficients:";
        for (double f : v.solution->values) os << " " << f;
        os << "\n";
    }
    return os.str();
}

}  // namespace spc
