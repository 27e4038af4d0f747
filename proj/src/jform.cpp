#include "spclass/jform.hpp"

#include <sstream>

namespace spc {

DimVector::DimVector(std::vector<long> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) throw dimension_error("need at least two summands");
    for (long di : dims_) {
        if (di < 1) throw dimension_error("summand dimensions must be positive");
        n_ += di;
    }
    if (n_ <= 1) throw degenerate_form_error("total dimension n must exceed 1");
}

QVector::QVector(std::vector<Rat> entries) : entries_(std::move(entries)), level_(0) {
    for (const Rat& e : entries_) level_ += e;
}

QVector QVector::level_minus_one(std::vector<Rat> entries) {
    QVector v(std::move(entries));
    if (v.level_ != Rat(-1)) throw level_error("entries must sum to -1, got " + to_string(v.level_));
    return v;
}

QVector QVector::from_ints(const std::vector<int>& entries) {
    std::vector<Rat> e;
    e.reserve(entries.size());
    for (int x : entries) e.emplace_back(x);
    return QVector(std::move(e));
}

std::string QVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << to_string(entries_[i]);
    }
    os << ")";
    return os.str();
}

BarPoint::BarPoint(QVector base, const DimVector& d) : base_(std::move(base)), d_(d) {
    if (base_.size() != d.r()) throw dimension_error("bar point length mismatch");
    if (base_.level() != Rat(-1)) throw level_error("bar points come from the sum = -1 plane");
}

std::vector<Rat> BarPoint::barred() const {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(base_.size()));
    for (int i = 0; i < base_.size(); ++i) out.push_back(Rat(Rat(d_[i]) + base_[i]) / 2);
    return out;
}

static void check_lengths(const QVector& p, const QVector& q, const DimVector& d) {
    if (p.size() != d.r() || q.size() != d.r())
        throw dimension_error("vector length does not match the dimension vector");
}

Rat wdw_form(const QVector& p, const QVector& q, const DimVector& d) {
    check_lengths(p, q, d);
    Rat acc = p.level() * q.level() / Rat(d.n() - 1);
    for (int i = 0; i < d.r(); ++i) acc -= p[i] * q[i] / Rat(d[i]);
    return acc;
}

Rat j_shifted(const QVector& v, const QVector& w, const DimVector& d) {
    check_lengths(v, w, d);
    if (v.level() != Rat(-1) || w.level() != Rat(-1))
        throw level_error("j_shifted needs vectors on the sum = -1 plane");
    Rat acc(1);
    for (int i = 0; i < d.r(); ++i) acc -= v[i] * w[i] / Rat(d[i]);
    return acc;
}

Rat j_bar(const BarPoint& x, const BarPoint& y) {
    if (!(x.ambient() == y.ambient())) throw dimension_error("bar points from different ambients");
    return j_shifted(x.base(), y.base(), x.ambient()) / 4;
}

bool is_null(const QVector& c, const DimVector& d) {
    return j_shifted(c, c, d).is_zero();
}

bool is_orthogonal_bar(const QVector& u, const QVector& c, const DimVector& d) {
    return j_shifted(u, c, d).is_zero();
}

bool overlap(const QVector& x, const QVector& c) {
    if (x.size() != c.size()) throw dimension_error("overlap length mismatch");
    for (int i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !c[i].is_zero()) return true;
    return false;
}

std::vector<std::vector<Rat>> wdw_gram(const DimVector& d) {
    const int r = d.r();
    std::vector<std::vector<Rat>> g(static_cast<std::size_t>(r),
                                    std::vector<Rat>(static_cast<std::size_t>(r)));
    Rat off(1, d.n() - 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = off;
            if (i == j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= Rat(1, d[i]);
        }
    return g;
}

}  // namespace spc
