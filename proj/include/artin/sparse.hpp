// Sparse vectors over an exact field and an incremental row-echelon
// accumulator. This is the elimination core behind rref, kernels, subspace
// arithmetic and the resolution engine. Everything is deterministic: rows are
// keyed by leading column and all iteration is in column order.
#ifndef ARTIN_SPARSE_HPP
#define ARTIN_SPARSE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

template <class K>
struct SparseVec {
    // strictly increasing indices, nonzero coefficients
    std::vector<std::pair<std::uint32_t, K>> terms;

    SparseVec() = default;

    bool empty() const { return terms.empty(); }
    std::size_t nnz() const { return terms.size(); }
    std::uint32_t lead_index() const { return terms.front().first; }
    const K& lead_coeff() const { return terms.front().second; }

    void push(std::uint32_t i, K c) {
        if (!c.is_zero()) terms.emplace_back(i, std::move(c));
    }

    K coeff(std::uint32_t i) const {
        for (const auto& [j, c] : terms) {
            if (j == i) return c;
            if (j > i) break;
        }
        return K();
    }

    SparseVec scaled(const K& c) const {
        SparseVec r;
        if (c.is_zero()) return r;
        r.terms.reserve(terms.size());
        for (const auto& [i, v] : terms) r.terms.emplace_back(i, v * c);
        return r;
    }

    SparseVec shifted(std::uint32_t offset) const {
        SparseVec r;
        r.terms.reserve(terms.size());
        for (const auto& [i, v] : terms) r.terms.emplace_back(i + offset, v);
        return r;
    }

    static SparseVec from_dense(const std::vector<K>& v) {
        SparseVec r;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) r.terms.emplace_back(static_cast<std::uint32_t>(i), v[i]);
        return r;
    }

    std::vector<K> to_dense(std::size_t n) const {
        std::vector<K> v(n, K());
        for (const auto& [i, c] : terms) v.at(i) = c;
        return v;
    }

    static SparseVec unit(std::uint32_t i) {
        SparseVec r;
        r.terms.emplace_back(i, K(1));
        return r;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms == b.terms; }
};

// a*v + b*r, merging sorted supports
template <class K>
SparseVec<K> linear_combine(const K& a, const SparseVec<K>& v, const K& b, const SparseVec<K>& r) {
    SparseVec<K> out;
    out.terms.reserve(v.terms.size() + r.terms.size());
    std::size_t i = 0, j = 0;
    while (i < v.terms.size() && j < r.terms.size()) {
        if (v.terms[i].first < r.terms[j].first) {
            out.push(v.terms[i].first, a * v.terms[i].second);
            ++i;
        } else if (v.terms[i].first > r.terms[j].first) {
            out.push(r.terms[j].first, b * r.terms[j].second);
            ++j;
        } else {
            out.push(v.terms[i].first, a * v.terms[i].second + b * r.terms[j].second);
            ++i; ++j;
        }
    }
    for (; i < v.terms.size(); ++i) out.push(v.terms[i].first, a * v.terms[i].second);
    for (; j < r.terms.size(); ++j) out.push(r.terms[j].first, b * r.terms[j].second);
    return out;
}

template <class K>
SparseVec<K> sparse_add(const SparseVec<K>& v, const SparseVec<K>& r) {
    return linear_combine(K(1), v, K(1), r);
}

namespace detail {

// Storage normalization of an echelon row. Rationals are rescaled to a
// primitive integer vector with positive lead, which keeps the fraction-free
// elimination below in small integers.
inline void normalize_row(SparseVec<Rational>& v) {
    if (v.empty()) return;
    mpz_class lcm_den = 1;
    for (const auto& [i, c] : v.terms)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class g = 0;
    for (const auto& [i, c] : v.terms) {
        mpz_class num = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (v.lead_coeff().sign() < 0) g = -g;
    Rational scale(lcm_den, g);
    for (auto& [i, c] : v.terms) c *= scale;
}

inline void normalize_row(SparseVec<GFp>& v) {
    if (v.empty()) return;
    GFp inv = v.lead_coeff().inverse();
    for (auto& [i, c] : v.terms) c *= inv;
}

inline bool lead_is_unit(const Rational& c) { return c.is_one() || (-c).is_one(); }
inline bool lead_is_unit(const GFp&) { return true; }

}  // namespace detail

// Incremental row echelon form. Rows are stored normalized and keyed by their
// leading column, so the result of a sequence of inserts is independent of
// everything but the span.
template <class K>
class Echelon {
public:
    // Reduce v against the stored rows; if a nonzero remainder is left, store
    // it and report rank growth.
    bool insert(SparseVec<K> v) {
        reduce(v);
        if (v.empty()) return false;
        detail::normalize_row(v);
        std::uint32_t lead = v.lead_index();
        rows_.emplace(lead, std::move(v));
        return true;
    }

    // Reduce v to its normal form against the current rows (no insertion).
    void reduce(SparseVec<K>& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.lead_index());
            if (it == rows_.end()) return;
            const SparseVec<K>& r = it->second;
            // fraction-free step: lead(r)*v - lead(v)*r kills the lead of v
            if (detail::lead_is_unit(r.lead_coeff())) {
                K c = -(v.lead_coeff() / r.lead_coeff());
                v = linear_combine(K(1), v, c, r);
            } else {
                v = linear_combine(r.lead_coeff(), v, -v.lead_coeff(), r);
                detail::normalize_row(v);
            }
        }
    }

    bool reduces_to_zero(SparseVec<K> v) const {
        reduce(v);
        return v.empty();
    }

    std::size_t rank() const { return rows_.size(); }

    std::vector<std::uint32_t> pivots() const {
        std::vector<std::uint32_t> p;
        p.reserve(rows_.size());
        for (const auto& [lead, row] : rows_) p.push_back(lead);
        return p;
    }

    // Canonical reduced rows: every pivot column is cleared in the other rows
    // and every lead coefficient is 1. Sorted by pivot.
    std::vector<SparseVec<K>> reduced_rows() const {
        std::vector<SparseVec<K>> rows;
        rows.reserve(rows_.size());
        for (const auto& [lead, row] : rows_) rows.push_back(row);
        // back-substitute from the last pivot upwards
        for (std::size_t i = rows.size(); i-- > 0;) {
            K inv_lead = K(1) / rows[i].lead_coeff();
            if (!inv_lead.is_one()) rows[i] = rows[i].scaled(inv_lead);
            for (std::size_t j = 0; j < i; ++j) {
                K c = rows[j].coeff(rows[i].lead_index());
                if (!c.is_zero()) rows[j] = linear_combine(K(1), rows[j], -c, rows[i]);
            }
        }
        return rows;
    }

    const std::map<std::uint32_t, SparseVec<K>>& raw_rows() const { return rows_; }

private:
    std::map<std::uint32_t, SparseVec<K>> rows_;
};

}  // namespace artin

#endif
