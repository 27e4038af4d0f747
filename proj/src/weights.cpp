#include "spclass/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spc {

QVector Weight::qvec() const { return QVector::from_ints(entries); }

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << entries[i];
    }
    os << ")";
    return os.str();
}

std::optional<Weight> try_classify_weight(const std::vector<int>& entries) {
    int n_m1 = 0, n_m2 = 0, n_p1 = 0, sum = 0;
    for (int e : entries) {
        sum += e;
        if (e == -1)
            ++n_m1;
        else if (e == -2)
            ++n_m2;
        else if (e == 1)
            ++n_p1;
        else if (e != 0)
            return std::nullopt;
    }
    if (sum != -1) return std::nullopt;
    if (n_m1 == 1 && n_m2 == 0 && n_p1 == 0) return Weight{entries, WType::I};
    if (n_m1 == 2 && n_m2 == 0 && n_p1 == 1) return Weight{entries, WType::II};
    if (n_m1 == 0 && n_m2 == 1 && n_p1 == 1) return Weight{entries, WType::III};
    return std::nullopt;
}

Weight classify_weight(const std::vector<int>& entries) {
    auto w = try_classify_weight(entries);
    if (!w) {
        Weight tmp{entries, WType::I};
        throw not_a_weight_error("not a weight vector: " + tmp.str());
    }
    return *w;
}

Weight type_i(int i, int r) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = -1;
    return Weight{e, WType::I};
}

Weight type_ii(int plus, int minus_a, int minus_b, int r) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(plus)] = 1;
    e[static_cast<std::size_t>(minus_a)] = -1;
    e[static_cast<std::size_t>(minus_b)] = -1;
    return Weight{e, WType::II};
}

Weight type_iii(int minus2, int plus, int r) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(minus2)] = -2;
    e[static_cast<std::size_t>(plus)] = 1;
    return Weight{e, WType::III};
}

WeightSystem::WeightSystem(DimVector dims, std::vector<Weight> ws, bool connected)
    : d(std::move(dims)), weights(std::move(ws)), k_connected(connected) {
    for (const Weight& w : weights)
        if (static_cast<int>(w.entries.size()) != d.r())
            throw dimension_error("weight length does not match r");
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
}

bool WeightSystem::contains(const std::vector<int>& entries) const {
    return find(entries) != nullptr;
}

const Weight* WeightSystem::find(const std::vector<int>& entries) const {
    Weight probe{entries, WType::I};
    auto it = std::lower_bound(weights.begin(), weights.end(), probe);
    if (it != weights.end() && it->entries == entries) return &*it;
    return nullptr;
}

std::vector<QVector> WeightSystem::points() const {
    std::vector<QVector> out;
    out.reserve(weights.size());
    for (const Weight& w : weights) out.push_back(w.qvec());
    return out;
}

void WeightSystem::set_a(const std::vector<int>& w, Rat value) {
    if (!a_values) a_values.emplace();
    (*a_values)[w] = std::move(value);
}

std::optional<Rat> WeightSystem::a_of(const std::vector<int>& w) const {
    if (!a_values) return std::nullopt;
    auto it = a_values->find(w);
    if (it == a_values->end()) return std::nullopt;
    return it->second;
}

std::vector<Violation> validate(const WeightSystem& ws) {
    std::vector<Violation> out;
    const int r = ws.r();
    for (const Weight& w : ws.weights) {
        if (w.type != WType::II) continue;
        int p = -1, ma = -1, mb = -1;
        for (int i = 0; i < r; ++i) {
            int e = w.entries[static_cast<std::size_t>(i)];
            if (e == 1) p = i;
            if (e == -1) (ma < 0 ? ma : mb) = i;
        }
        // closure: the +1 entry must also occur in each of the two -1 slots
        for (int q : {ma, mb}) {
            std::vector<int> e(static_cast<std::size_t>(r), 0);
            e[static_cast<std::size_t>(q)] = 1;
            for (int t : {p, ma, mb})
                if (t != q) e[static_cast<std::size_t>(t)] = -1;
            if (!ws.contains(e)) {
                Weight miss{e, WType::II};
                out.push_back({"type2-closure",
                               "missing permutation " + miss.str() + " of " + w.str()});
            }
        }
    }
    for (int i = 0; i < r; ++i) {
        if (ws.d[i] != 1) continue;
        for (const Weight& w : ws.weights) {
            int e = w.entries[static_cast<std::size_t>(i)];
            if (w.type == WType::III && e == -2)
                out.push_back({"dim1-type3", "dimension-1 place " + std::to_string(i + 1) +
                                                 " carries -2 in " + w.str()});
            if (ws.k_connected && w.type == WType::II && e != 0)
                out.push_back({"dim1-type2", "dimension-1 place " + std::to_string(i + 1) +
                                                 " touched by type II " + w.str()});
        }
    }
    if (ws.a_values) {
        for (const auto& [entries, value] : *ws.a_values) {
            const Weight* w = ws.find(entries);
            if (!w) {
                Weight tmp{entries, WType::I};
                out.push_back({"coeff-unknown-weight",
                               "coefficient given for absent weight " + tmp.str()});
                continue;
            }
            int want = w->type == WType::I ? 1 : -1;
            if (value.sign() != want)
                out.push_back({"coeff-sign", "coefficient sign wrong for " + w->str()});
        }
    }
    return out;
}

WeightSystem fano_system(const std::vector<long>& d_rest) {
    if (d_rest.empty()) throw dimension_error("fano system needs at least one fiber summand");
    std::vector<long> dims{1};
    dims.insert(dims.end(), d_rest.begin(), d_rest.end());
    const int r = static_cast<int>(dims.size());
    std::vector<Weight> w;
    for (int i = 1; i < r; ++i) {
        w.push_back(type_i(i, r));
        w.push_back(type_iii(i, 0, r));
    }
    return WeightSystem(DimVector(std::move(dims)), std::move(w));
}

std::optional<int> fano_pivot(const WeightSystem& ws) {
    const int r = ws.r();
    if (static_cast<int>(ws.weights.size()) != 2 * (r - 1)) return std::nullopt;
    for (int p = 0; p < r; ++p) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            if (i == p) continue;
            if (!ws.contains(type_i(i, r).entries)) ok = false;
            if (ok && !ws.contains(type_iii(i, p, r).entries)) ok = false;
        }
        if (ok) return p;
    }
    return std::nullopt;
}

}  // namespace spc
