// Subspaces of k^n in canonical reduced row echelon form. Two subspaces are
// equal as sets iff their stored bases compare equal, which makes equality a
// syntactic check throughout the engine.
#ifndef ARTIN_SUBSPACE_HPP
#define ARTIN_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "artin/matrix.hpp"
#include "artin/sparse.hpp"

namespace artin {

template <class K>
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<SparseVec<K>>& gens) {
        Echelon<K> ech;
        for (const auto& g : gens) {
            check_range(g, ambient_dim);
            ech.insert(g);
        }
        return from_echelon(ambient_dim, ech);
    }

    static Subspace full(std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        for (std::uint32_t i = 0; i < ambient_dim; ++i) {
            s.rows_.push_back(SparseVec<K>::unit(i));
            s.pivots_.push_back(i);
        }
        return s;
    }

    static Subspace from_echelon(std::size_t ambient_dim, const Echelon<K>& ech) {
        Subspace s(ambient_dim);
        s.rows_ = ech.reduced_rows();
        for (const auto& r : s.rows_) s.pivots_.push_back(r.lead_index());
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseVec<K>>& basis() const { return rows_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    bool contains_vector(const SparseVec<K>& v) const {
        check_range(v, ambient_);
        SparseVec<K> w = v;
        std::size_t r = 0;
        while (!w.empty()) {
            // rows are sorted by pivot; advance to the matching one
            while (r < rows_.size() && pivots_[r] < w.lead_index()) ++r;
            if (r == rows_.size() || pivots_[r] != w.lead_index()) return false;
            w = linear_combine(K(1), w, -w.lead_coeff(), rows_[r]);
        }
        return true;
    }

    bool contains_subspace(const Subspace& sub) const {
        if (sub.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        for (const auto& r : sub.rows_)
            if (!contains_vector(r)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    static void check_range(const SparseVec<K>& v, std::size_t ambient) {
        if (!v.empty() && v.terms.back().first >= ambient)
            throw std::invalid_argument("Subspace: vector exceeds ambient dimension");
    }

    std::size_t ambient_;
    std::vector<SparseVec<K>> rows_;      // canonical rref rows, sorted by pivot
    std::vector<std::uint32_t> pivots_;
};

// Kernel {v : m v = 0}, canonicalized. dim = cols - rank.
template <class K>
Subspace<K> kernel_basis(const Matrix<K>& m) {
    Echelon<K> ech;
    for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
    std::vector<SparseVec<K>> rows = ech.reduced_rows();

    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& r : rows) is_pivot[r.lead_index()] = true;

    Echelon<K> ker;
    for (std::uint32_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVec<K> v;
        for (const auto& r : rows) {
            K c = r.coeff(f);
            if (!c.is_zero()) v.push(r.lead_index(), -c);
        }
        v.push(f, K(1));
        // entries were appended pivot-block first, then f; keep sorted
        std::sort(v.terms.begin(), v.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ker.insert(std::move(v));
    }
    return Subspace<K>::from_echelon(m.cols(), ker);
}

template <class K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    Echelon<K> ech;
    for (const auto& r : a.basis()) ech.insert(r);
    for (const auto& r : b.basis()) ech.insert(r);
    return Subspace<K>::from_echelon(a.ambient_dim(), ech);
}

// Zassenhaus: echelonize rows (x|x) for x in a and (y|0) for y in b; rows with
// vanishing left half carry a basis of the intersection in the right half.
template <class K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    std::uint32_t n = static_cast<std::uint32_t>(a.ambient_dim());
    Echelon<K> ech;
    for (const auto& r : a.basis()) ech.insert(sparse_add(r, r.shifted(n)));
    for (const auto& r : b.basis()) ech.insert(r);
    Echelon<K> inter;
    for (const auto& [lead, row] : ech.raw_rows()) {
        if (lead < n) continue;
        SparseVec<K> right;
        for (const auto& [i, c] : row.terms) right.push(i - n, c);
        inter.insert(std::move(right));
    }
    return Subspace<K>::from_echelon(n, inter);
}

template <class K>
bool contains(const Subspace<K>& s, const SparseVec<K>& v) {
    return s.contains_vector(v);
}

// Vectors of `ambient` completing `sub` to all of `ambient`: the rows of
// ambient's canonical basis whose pivots are not pivots of sub, in increasing
// pivot order. Requires sub to be contained in ambient.
template <class K>
std::vector<SparseVec<K>> complement_basis(const Subspace<K>& sub, const Subspace<K>& ambient) {
    if (sub.ambient_dim() != ambient.ambient_dim())
        throw std::invalid_argument("complement_basis: ambient mismatch");
    if (!ambient.contains_subspace(sub))
        throw std::invalid_argument("complement_basis: sub is not contained in ambient");
    std::vector<bool> sub_pivot(sub.ambient_dim(), false);
    for (std::uint32_t p : sub.pivots()) sub_pivot[p] = true;
    std::vector<SparseVec<K>> out;
    for (const auto& row : ambient.basis())
        if (!sub_pivot[row.lead_index()]) out.push_back(row);
    return out;
}

}  // namespace artin

#endif
