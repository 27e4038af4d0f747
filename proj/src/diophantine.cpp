#include "spclass/diophantine.hpp"

#include "spclass/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spc {

std::string FracSystem::str() const {
    std::ostringstream os;
    for (const FracEquation& eq : equations) {
        bool first = true;
        for (int i = 0; i < nvars; ++i) {
            const Rat& c = eq.coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (c != Rat(1)) os << to_string(c) << "*";
            os << "1/d" << (i + 1);
        }
        if (first) os << "0";
        os << " = " << to_string(eq.rhs) << "; ";
    }
    return os.str();
}

namespace {

struct Row {
    std::vector<Rat> coeffs;
    Rat rhs;
};

// Reduced row echelon form over the reciprocal variables.
std::vector<Row> rref(const FracSystem& sys) {
    std::vector<Row> rows;
    for (const auto& eq : sys.equations) rows.push_back({eq.coeffs, eq.rhs});
    std::size_t r = 0;
    for (int c = 0; c < sys.nvars && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv].coeffs[static_cast<std::size_t>(c)].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Rat inv = Rat(1) / rows[r].coeffs[static_cast<std::size_t>(c)];
        for (auto& x : rows[r].coeffs) x *= inv;
        rows[r].rhs *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Rat f = rows[i].coeffs[static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = 0; j < sys.nvars; ++j)
                rows[i].coeffs[static_cast<std::size_t>(j)] -=
                    f * rows[r].coeffs[static_cast<std::size_t>(j)];
            rows[i].rhs -= f * rows[r].rhs;
        }
        ++r;
    }
    std::vector<Row> out;
    for (auto& row : rows) {
        bool all0 = std::all_of(row.coeffs.begin(), row.coeffs.end(),
                                [](const Rat& x) { return x.is_zero(); });
        if (all0 && row.rhs.is_zero()) continue;
        out.push_back(std::move(row));
    }
    return out;
}

struct Search {
    int nvars = 0;
    long bound = 1;
    std::size_t cap = 0;
    std::vector<Row> rows;
    std::vector<int> order;
    std::vector<long> assign;
    std::vector<std::vector<long>>* out = nullptr;
    bool truncated = false;

    bool prune() const {
        for (const Row& row : rows) {
            Rat lo(0), hi(0), fixed(0);
            for (int i = 0; i < nvars; ++i) {
                const Rat& c = row.coeffs[static_cast<std::size_t>(i)];
                if (c.is_zero()) continue;
                long a = assign[static_cast<std::size_t>(i)];
                if (a > 0) {
                    fixed += c / Rat(a);
                } else if (c.sign() > 0) {
                    lo += c / Rat(bound);
                    hi += c;
                } else {
                    lo += c;
                    hi += c / Rat(bound);
                }
            }
            Rat need = row.rhs - fixed;
            if (need < lo || need > hi) return true;
        }
        return false;
    }

    void dfs(std::size_t k) {
        if (truncated) return;
        if (k == order.size()) {
            if (out->size() >= cap) {
                truncated = true;
                return;
            }
            out->push_back(assign);
            return;
        }
        int var = order[k];
        for (long v = 1; v <= bound; ++v) {
            assign[static_cast<std::size_t>(var)] = v;
            if (!prune()) dfs(k + 1);
            if (truncated) break;
        }
        assign[static_cast<std::size_t>(var)] = 0;
    }
};

}  // namespace

std::vector<std::vector<long>> unit_fraction_tuples(const Rat& target, int k) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, const Rat& rem, int terms, long dmin) -> void {
        if (terms == 0) {
            if (rem.is_zero()) out.push_back(cur);
            return;
        }
        if (rem.sign() <= 0) return;
        long start = dmin;
        while (Rat(1, start) > rem) ++start;  // need 1/d <= rem
        Rat hi_r = Rat(terms) / rem;          // need terms/d >= rem
        long hi = (numerator(hi_r) / denominator(hi_r)).convert_to<long>();
        for (long d = start; d <= hi; ++d) {
            cur.push_back(d);
            self(self, rem - Rat(1, d), terms - 1, d);
            cur.pop_back();
        }
    };
    if (target.sign() > 0) rec(rec, target, k, 1);
    return out;
}

DimSolveResult solve_fracsystem(const FracSystem& sys, long bound, std::size_t max_solutions) {
    DimSolveResult res;
    for (int i = 0; i < sys.nvars; ++i) {
        bool used = false;
        for (const auto& eq : sys.equations)
            if (!eq.coeffs[static_cast<std::size_t>(i)].is_zero()) used = true;
        if (!used) res.unconstrained.push_back(i);
    }
    std::vector<Row> rows = rref(sys);
    for (const Row& row : rows) {
        bool all0 = std::all_of(row.coeffs.begin(), row.coeffs.end(),
                                [](const Rat& x) { return x.is_zero(); });
        if (all0 && !row.rhs.is_zero()) return res;  // inconsistent
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<int> support;
        Rat c0;
        bool equal = true;
        for (int v = 0; v < sys.nvars; ++v) {
            const Rat& c = rows[i].coeffs[static_cast<std::size_t>(v)];
            if (c.is_zero()) continue;
            if (support.empty())
                c0 = c;
            else if (c != c0)
                equal = false;
            support.push_back(v);
        }
        if (support.size() < 2 || !equal) continue;
        bool isolated = true;
        for (std::size_t j = 0; j < rows.size() && isolated; ++j) {
            if (j == i) continue;
            for (int v : support)
                if (!rows[j].coeffs[static_cast<std::size_t>(v)].is_zero()) isolated = false;
        }
        if (isolated) {
            Rat target = rows[i].rhs / c0;
            // single-solution relations (e.g. all-ones) are constraints, not families
            if (unit_fraction_tuples(target, static_cast<int>(support.size())).size() > 1)
                res.families.push_back({support, target});
        }
    }
    Search s;
    s.nvars = sys.nvars;
    s.bound = bound;
    s.cap = max_solutions;
    s.rows = rows;
    for (const auto& eq : sys.equations) s.rows.push_back({eq.coeffs, eq.rhs});
    s.assign.assign(static_cast<std::size_t>(sys.nvars), 0);
    std::vector<std::pair<int, int>> weight;
    for (int v = 0; v < sys.nvars; ++v) {
        int uses = 0;
        for (const Row& row : rows)
            if (!row.coeffs[static_cast<std::size_t>(v)].is_zero()) ++uses;
        if (uses) weight.push_back({-uses, v});
    }
    std::sort(weight.begin(), weight.end());
    for (auto& [w, v] : weight) s.order.push_back(v);
    s.out = &res.solutions;
    s.dfs(0);
    res.truncated = s.truncated;
    for (auto& sol : res.solutions)
        for (long& v : sol)
            if (v == 0) v = 1;  // unconstrained slots default to 1
    std::sort(res.solutions.begin(), res.solutions.end());
    res.solutions.erase(std::unique(res.solutions.begin(), res.solutions.end()),
                        res.solutions.end());
    return res;
}

}  // namespace spc
