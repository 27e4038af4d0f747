#pragma once

#include "spclass/numbers.hpp"

#include <numeric>
#include <vector>

namespace spc {

// Dimension vector d = (d_1, ..., d_r), n = sum d_i.
class DimVector {
public:
    explicit DimVector(std::vector<long> dims);

    int r() const { return static_cast<int>(dims_.size()); }
    long n() const { return n_; }
    long operator[](int i) const { return dims_[static_cast<std::size_t>(i)]; }
    const std::vector<long>& dims() const { return dims_; }

    friend bool operator==(const DimVector& a, const DimVector& b) { return a.dims_ == b.dims_; }

private:
    std::vector<long> dims_;
    long n_ = 0;
};

// Exact rational vector together with its coordinate sum.  Constructors for
// the sum = -1 hyperplane reject anything else rather than normalizing.
class QVector {
public:
    QVector(std::vector<Rat> entries);  // NOLINT(google-explicit-constructor)
    static QVector level_minus_one(std::vector<Rat> entries);
    static QVector from_ints(const std::vector<int>& entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const Rat& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Rat>& entries() const { return entries_; }
    const Rat& level() const { return level_; }

    friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const QVector& a, const QVector& b) { return a.entries_ < b.entries_; }

    std::string str() const;

private:
    std::vector<Rat> entries_;
    Rat level_;
};

// Barred image x -> (d + x)/2, living on the sum = (n-1)/2 hyperplane.
class BarPoint {
public:
    BarPoint(QVector base, const DimVector& d);

    const QVector& base() const { return base_; }
    const DimVector& ambient() const { return d_; }
    std::vector<Rat> barred() const;
    Rat barred_level() const { return Rat(d_.n() - 1, 2); }

    friend bool operator==(const BarPoint& a, const BarPoint& b) {
        return a.base_ == b.base_ && a.d_ == b.d_;
    }

private:
    QVector base_;
    DimVector d_;
};

// The Lorentz-signature kinetic form: (sum p)(sum q)/(n-1) - sum p_i q_i / d_i.
Rat wdw_form(const QVector& p, const QVector& q, const DimVector& d);

// J((d+v)/1, (d+w)/1) for v, w on the sum = -1 hyperplane: 1 - sum v_i w_i / d_i.
Rat j_shifted(const QVector& v, const QVector& w, const DimVector& d);

// Same value on barred points, carrying the 1/4 scaling.
Rat j_bar(const BarPoint& x, const BarPoint& y);

// sum c_i^2 / d_i == 1, i.e. the barred point lies on the null ellipsoid.
bool is_null(const QVector& c, const DimVector& d);

// sum u_i c_i / d_i == 1, i.e. j_shifted(u, c, d) == 0.
bool is_orthogonal_bar(const QVector& u, const QVector& c, const DimVector& d);

// Some index carries a nonzero entry in both vectors.
bool overlap(const QVector& x, const QVector& c);

// Gram matrix of the form in the standard basis; rational and symmetric.
std::vector<std::vector<Rat>> wdw_gram(const DimVector& d);

// Generic-scalar versions used by the classifier on surd-valued vectors.
template <class T>
T j_shifted_t(const std::vector<T>& v, const std::vector<T>& w, const DimVector& d) {
    T acc(Rat(1));
    for (int i = 0; i < d.r(); ++i)
        acc -= v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)] / T(Rat(d[i]));
    return acc;
}

template <class T>
bool is_null_t(const std::vector<T>& c, const DimVector& d) {
    T acc(Rat(-1));
    for (int i = 0; i < d.r(); ++i) {
        const T& x = c[static_cast<std::size_t>(i)];
        acc += x * x / T(Rat(d[i]));
    }
    return acc.is_zero();
}

}  // namespace spc
