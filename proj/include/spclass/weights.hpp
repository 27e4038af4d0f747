#pragma once

#include "spclass/jform.hpp"
#include "spclass/numbers.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spc {

enum class WType { I, II, III };

// Integer weight vector on the sum = -1 plane with its structural type:
//   I: one entry -1; II: one +1, two -1; III: one +1, one -2.
struct Weight {
    std::vector<int> entries;
    WType type;

    QVector qvec() const;
    std::string str() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.entries == b.entries; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.entries < b.entries; }
};

Weight classify_weight(const std::vector<int>& entries);
std::optional<Weight> try_classify_weight(const std::vector<int>& entries);

Weight type_i(int i, int r);
Weight type_ii(int plus, int minus_a, int minus_b, int r);
Weight type_iii(int minus2, int plus, int r);

struct Violation {
    std::string code;
    std::string message;
};

struct WeightSystem {
    DimVector d;
    std::vector<Weight> weights;                    // kept sorted and distinct
    std::optional<std::map<std::vector<int>, Rat>> a_values;
    bool k_connected = true;

    WeightSystem(DimVector dims, std::vector<Weight> ws, bool connected = true);

    int r() const { return d.r(); }
    bool contains(const std::vector<int>& entries) const;
    const Weight* find(const std::vector<int>& entries) const;
    std::vector<QVector> points() const;

    void set_a(const std::vector<int>& w, Rat value);
    std::optional<Rat> a_of(const std::vector<int>& w) const;
};

// Structural checks: permutation closure of type II triples, dim-1 exclusions,
// and the sign pattern of any supplied coefficients.
std::vector<Violation> validate(const WeightSystem& ws);

// The circle-bundle system: d = (1, d_rest), weights (-1^i) and (1^1, -2^i).
WeightSystem fano_system(const std::vector<long>& d_rest);

// True iff the weight set matches the fano pattern with pivot index p (0-based)
// after some permutation; returns the pivot when it does.
std::optional<int> fano_pivot(const WeightSystem& ws);

}  // namespace spc
