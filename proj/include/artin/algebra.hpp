// Finite-dimensional commutative local k-algebras presented by a monomial
// labeled basis and a multiplication table. Construction validates the full
// ring axioms (commutativity, associativity, unit) together with locality:
// the span of the non-unit basis elements must be a nilpotent ideal.
#ifndef ARTIN_ALGEBRA_HPP
#define ARTIN_ALGEBRA_HPP

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/hilbert.hpp"
#include "artin/subspace.hpp"

namespace artin {

// Monomial in x1, x2 and at most one extra variable x_j (j >= 3, exponent 1).
struct MonomialLabel {
    long e1 = 0;
    long e2 = 0;
    long xj = 0;  // 0 = none

    static MonomialLabel unit() { return {}; }

    bool is_unit() const { return e1 == 0 && e2 == 0 && xj == 0; }

    friend bool operator==(const MonomialLabel& a, const MonomialLabel& b) {
        return a.e1 == b.e1 && a.e2 == b.e2 && a.xj == b.xj;
    }
    friend bool operator<(const MonomialLabel& a, const MonomialLabel& b) {
        if (a.e1 != b.e1) return a.e1 < b.e1;
        if (a.e2 != b.e2) return a.e2 < b.e2;
        return a.xj < b.xj;
    }

    std::string str() const {
        if (is_unit()) return "1";
        std::string s;
        auto factor = [&s](const std::string& var, long e) {
            if (e == 0) return;
            if (!s.empty()) s += "*";
            s += var;
            if (e > 1) s += "^" + std::to_string(e);
        };
        factor("x1", e1);
        factor("x2", e2);
        if (xj != 0) factor("x" + std::to_string(xj), 1);
        return s;
    }

    // Parses "1", "x1^2", "x1*x2", "x3", ... Returns nullopt on malformed input.
    static std::optional<MonomialLabel> parse(const std::string& s) {
        if (s == "1") return MonomialLabel{};
        MonomialLabel m;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find('*', pos);
            std::string f = s.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next == std::string::npos ? s.size() : next + 1;
            if (f.size() < 2 || f[0] != 'x') return std::nullopt;
            std::size_t caret = f.find('^');
            std::string var = f.substr(1, caret == std::string::npos ? caret : caret - 1);
            long exp = 1;
            try {
                if (caret != std::string::npos) exp = std::stol(f.substr(caret + 1));
                long idx = std::stol(var);
                if (exp < 1 || idx < 1) return std::nullopt;
                if (idx == 1) m.e1 += exp;
                else if (idx == 2) m.e2 += exp;
                else {
                    if (m.xj != 0 || exp != 1) return std::nullopt;
                    m.xj = idx;
                }
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        if (m.is_unit()) return std::nullopt;  // bare "" or repeated garbage
        return m;
    }
};

template <class K>
class FiniteLocalAlgebra;

template <class K>
struct AlgebraElement {
    const FiniteLocalAlgebra<K>* owner = nullptr;
    std::vector<K> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    K unit_coordinate() const { return coords.empty() ? K() : coords[0]; }
    SparseVec<K> sparse() const { return SparseVec<K>::from_dense(coords); }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_owner(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_owner(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    AlgebraElement operator*(const K& c) const {
        AlgebraElement r = *this;
        for (auto& x : r.coords) x *= c;
        return r;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.owner == b.owner && a.coords == b.coords;
    }

    void check_owner(const AlgebraElement& o) const {
        if (owner != o.owner) throw std::invalid_argument("AlgebraElement: algebra mismatch");
    }
};

template <class K>
class FiniteLocalAlgebra {
public:
    using Vec = std::vector<K>;

    FiniteLocalAlgebra(std::vector<MonomialLabel> basis, std::vector<std::vector<Vec>> table)
        : basis_(std::move(basis)), table_(std::move(table)), maximal_ideal_(0) {
        validate_shape();
        build_sparse();
        validate_ring_axioms();
        maximal_ideal_ = coordinate_subspace(1);
        validate_nilpotency();
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<MonomialLabel>& basis() const { return basis_; }
    const Vec& table(std::size_t i, std::size_t j) const { return table_[i][j]; }
    const SparseVec<K>& table_sparse(std::size_t i, std::size_t j) const { return table_sp_[i][j]; }
    const Subspace<K>& maximal_ideal() const { return maximal_ideal_; }

    std::optional<std::size_t> index_of(const MonomialLabel& label) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == label) return i;
        return std::nullopt;
    }

    AlgebraElement<K> zero() const { return {this, Vec(dim(), K())}; }
    AlgebraElement<K> unit() const { return basis_element(0); }
    AlgebraElement<K> basis_element(std::size_t i) const {
        AlgebraElement<K> e = zero();
        e.coords.at(i) = K(1);
        return e;
    }
    AlgebraElement<K> element(Vec coords) const {
        if (coords.size() != dim()) throw std::invalid_argument("element: coordinate length mismatch");
        return {this, std::move(coords)};
    }
    AlgebraElement<K> element_by_label(const std::string& label) const {
        auto m = MonomialLabel::parse(label);
        if (!m) throw std::invalid_argument("element_by_label: cannot parse '" + label + "'");
        auto idx = index_of(*m);
        if (!idx) throw std::invalid_argument("element_by_label: '" + label + "' is not a basis monomial");
        return basis_element(*idx);
    }

    // b_g * v for a coordinate vector v, as sparse data
    SparseVec<K> mult_basis(std::size_t g, const SparseVec<K>& v) const {
        std::map<std::uint32_t, K> acc;
        for (const auto& [j, c] : v.terms)
            for (const auto& [l, t] : table_sp_[g][j].terms) acc[l] += c * t;
        SparseVec<K> out;
        for (auto& [i, c] : acc) out.push(i, std::move(c));
        return out;
    }

    // re-runs the construction-time checks (commutativity, associativity,
    // unit law, nilpotency of the non-unit span) on demand
    void revalidate() const {
        validate_ring_axioms();
        validate_nilpotency();
    }

    AlgebraElement<K> multiply(const AlgebraElement<K>& u, const AlgebraElement<K>& v) const {
        if (u.owner != this || v.owner != this)
            throw std::invalid_argument("multiply: algebra mismatch");
        AlgebraElement<K> out = zero();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (u.coords[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (v.coords[j].is_zero()) continue;
                K c = u.coords[i] * v.coords[j];
                for (const auto& [l, t] : table_sp_[i][j].terms) out.coords[l] += c * t;
            }
        }
        return out;
    }

private:
    void validate_shape() const {
        const std::size_t d = basis_.size();
        if (d == 0) throw std::invalid_argument("algebra: empty basis");
        if (!basis_[0].is_unit()) throw std::invalid_argument("algebra: basis[0] must be the unit");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (basis_[i] == basis_[j]) throw std::invalid_argument("algebra: duplicate basis label");
        if (table_.size() != d) throw std::invalid_argument("algebra: table row count mismatch");
        for (const auto& row : table_) {
            if (row.size() != d) throw std::invalid_argument("algebra: table column count mismatch");
            for (const auto& v : row)
                if (v.size() != d) throw std::invalid_argument("algebra: table entry length mismatch");
        }
    }

    void build_sparse() {
        const std::size_t d = dim();
        table_sp_.assign(d, std::vector<SparseVec<K>>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                table_sp_[i][j] = SparseVec<K>::from_dense(table_[i][j]);
    }

    Vec mult_vec_basis(const Vec& v, std::size_t l) const {
        Vec out(dim(), K());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (v[i].is_zero()) continue;
            for (const auto& [t, c] : table_sp_[i][l].terms) out[t] += v[i] * c;
        }
        return out;
    }

    void validate_ring_axioms() const {
        const std::size_t d = dim();
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t l = 0; l < d; ++l) {
                bool ok = table_[0][j][l] == ((l == j) ? K(1) : K());
                if (!ok) throw std::invalid_argument("algebra: basis[0] is not a unit");
            }
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (table_[i][j] != table_[j][i])
                    throw std::invalid_argument("algebra: multiplication not commutative at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i; j < d; ++j) {
                for (std::size_t l = j; l < d; ++l) {
                    // all three association patterns of the multiset {i,j,l};
                    // with commutativity this exhausts every ordered triple
                    Vec p1 = mult_vec_basis(table_[i][j], l);
                    Vec p2 = mult_vec_basis(table_[i][l], j);
                    Vec p3 = mult_vec_basis(table_[j][l], i);
                    if (p1 != p2 || p1 != p3)
                        throw std::invalid_argument("algebra: multiplication not associative at (" +
                                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                                    std::to_string(l) + ")");
                }
            }
        }
    }

    Subspace<K> coordinate_subspace(std::size_t from) const {
        std::vector<SparseVec<K>> rows;
        for (std::size_t i = from; i < dim(); ++i)
            rows.push_back(SparseVec<K>::unit(static_cast<std::uint32_t>(i)));
        return Subspace<K>::span(dim(), rows);
    }

    void validate_nilpotency() const;

    std::vector<MonomialLabel> basis_;
    std::vector<std::vector<Vec>> table_;
    std::vector<std::vector<SparseVec<K>>> table_sp_;
    Subspace<K> maximal_ideal_;
};

template <class K>
AlgebraElement<K> multiply(const AlgebraElement<K>& u, const AlgebraElement<K>& v) {
    if (u.owner == nullptr || u.owner != v.owner)
        throw std::invalid_argument("multiply: algebra mismatch");
    return u.owner->multiply(u, v);
}

template <class K>
AlgebraElement<K> operator*(const AlgebraElement<K>& u, const AlgebraElement<K>& v) {
    return multiply(u, v);
}

// span{ b_g * w : g in basis(m), w in basis(W) } -- the subspace m * W
template <class K>
Subspace<K> maximal_ideal_times(const FiniteLocalAlgebra<K>& A, const Subspace<K>& w) {
    Echelon<K> ech;
    for (std::size_t g = 1; g < A.dim(); ++g)
        for (const auto& row : w.basis()) ech.insert(A.mult_basis(g, row));
    return Subspace<K>::from_echelon(A.dim(), ech);
}

template <class K>
void FiniteLocalAlgebra<K>::validate_nilpotency() const {
    Subspace<K> cur = maximal_ideal_;
    for (std::size_t n = 0; n <= dim(); ++n) {
        if (cur.dim() == 0) return;
        Subspace<K> next = maximal_ideal_times(*this, cur);
        if (next.dim() >= cur.dim())
            throw std::invalid_argument("algebra: span of non-unit basis is not nilpotent (not local)");
        cur = next;
    }
    throw std::invalid_argument("algebra: span of non-unit basis is not nilpotent (not local)");
}

// Smallest multiplication-closed subspace containing gens, i.e. the ideal
// they generate. Closure by the worklist of newly stored echelon rows.
template <class K>
Subspace<K> ideal_subspace(const FiniteLocalAlgebra<K>& A, const std::vector<AlgebraElement<K>>& gens) {
    Echelon<K> ech;
    std::deque<SparseVec<K>> work;
    auto push = [&](SparseVec<K> v) {
        SparseVec<K> reduced = std::move(v);
        ech.reduce(reduced);
        if (reduced.empty()) return;
        detail::normalize_row(reduced);
        work.push_back(reduced);
        ech.insert(std::move(reduced));
    };
    for (const auto& g : gens) {
        if (g.owner != &A) throw std::invalid_argument("ideal_subspace: algebra mismatch");
        push(g.sparse());
    }
    while (!work.empty()) {
        SparseVec<K> row = std::move(work.front());
        work.pop_front();
        for (std::size_t g = 1; g < A.dim(); ++g) push(A.mult_basis(g, row));
    }
    return Subspace<K>::from_echelon(A.dim(), ech);
}

// Socle (0 : m) = { v : v * b = 0 for every non-unit basis element b },
// the kernel of the stacked multiplication maps.
template <class K>
Subspace<K> socle(const FiniteLocalAlgebra<K>& A) {
    const std::size_t d = A.dim();
    if (d == 1) return Subspace<K>::full(1);  // a field: socle is everything
    Matrix<K> stacked((d - 1) * d, d);
    for (std::size_t g = 1; g < d; ++g)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [l, c] : A.table_sparse(g, j).terms)
                stacked.at((g - 1) * d + l, j) = c;
    return kernel_basis(stacked);
}

// Quotient algebra A / ideal. The ideal must be multiplication closed and must
// not contain a unit; the surviving standard coordinates (the non-pivots of
// the ideal) index the quotient basis, keeping their monomial labels.
template <class K>
FiniteLocalAlgebra<K> quotient(const FiniteLocalAlgebra<K>& A, const Subspace<K>& ideal) {
    const std::size_t d = A.dim();
    if (ideal.ambient_dim() != d) throw std::invalid_argument("quotient: ambient mismatch");
    for (const auto& row : ideal.basis())
        for (std::size_t g = 1; g < d; ++g)
            if (!ideal.contains_vector(A.mult_basis(g, row)))
                throw std::invalid_argument("quotient: subspace is not multiplication closed");
    if (ideal.contains_vector(SparseVec<K>::unit(0)))
        throw std::invalid_argument("quotient: ideal contains the unit");

    std::vector<bool> is_pivot(d, false);
    for (auto p : ideal.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> survivors;
    std::vector<std::size_t> new_index(d, SIZE_MAX);
    for (std::size_t i = 0; i < d; ++i) {
        if (!is_pivot[i]) {
            new_index[i] = survivors.size();
            survivors.push_back(i);
        }
    }

    const std::size_t q = survivors.size();
    auto reduce_to_quotient = [&](SparseVec<K> v) {
        std::vector<K> out(q, K());
        std::size_t r = 0;
        const auto& rows = ideal.basis();
        while (!v.empty()) {
            std::uint32_t lead = v.lead_index();
            if (is_pivot[lead]) {
                while (r < rows.size() && rows[r].lead_index() < lead) ++r;
                v = linear_combine(K(1), v, -v.lead_coeff(), rows[r]);
            } else {
                out[new_index[lead]] = v.lead_coeff();
                v.terms.erase(v.terms.begin());
            }
        }
        return out;
    };

    std::vector<MonomialLabel> labels;
    labels.reserve(q);
    for (std::size_t i : survivors) labels.push_back(A.basis()[i]);
    std::vector<std::vector<std::vector<K>>> table(q, std::vector<std::vector<K>>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            table[i][j] = reduce_to_quotient(A.table_sparse(survivors[i], survivors[j]));
    return FiniteLocalAlgebra<K>(std::move(labels), std::move(table));
}

template <class K>
HilbertFunction hilbert_function(const FiniteLocalAlgebra<K>& A) {
    std::vector<long> dims;  // dim m^n for n = 0, 1, ...
    dims.push_back(static_cast<long>(A.dim()));
    Subspace<K> cur = A.maximal_ideal();
    while (cur.dim() > 0) {
        dims.push_back(static_cast<long>(cur.dim()));
        cur = maximal_ideal_times(A, cur);
    }
    std::vector<long> h;
    for (std::size_t n = 0; n + 1 < dims.size(); ++n) h.push_back(dims[n] - dims[n + 1]);
    h.push_back(dims.back());
    return HilbertFunction(std::move(h));
}

template <class K>
long multiplicity(const FiniteLocalAlgebra<K>& A) {
    return static_cast<long>(A.dim());
}

template <class K>
long embedding_dimension(const FiniteLocalAlgebra<K>& A) {
    const auto hf = hilbert_function(A);
    return hf[1];
}

template <class K>
bool is_gorenstein(const FiniteLocalAlgebra<K>& A) {
    return socle(A).dim() == 1;
}

// Minimal generators of m: a complement of m^2 in m (Nakayama lift).
template <class K>
std::vector<SparseVec<K>> minimal_generators_of_maximal_ideal(const FiniteLocalAlgebra<K>& A) {
    Subspace<K> msq = maximal_ideal_times(A, A.maximal_ideal());
    return complement_basis(msq, A.maximal_ideal());
}

// Table isomorphism under the label-matching relabeling.
template <class K>
bool tables_isomorphic_by_labels(const FiniteLocalAlgebra<K>& A, const FiniteLocalAlgebra<K>& B) {
    if (A.dim() != B.dim()) return false;
    std::vector<std::size_t> perm(A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i) {
        auto j = B.index_of(A.basis()[i]);
        if (!j) return false;
        perm[i] = *j;
    }
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t l = 0; l < A.dim(); ++l)
                if (!(A.table(i, j)[l] == B.table(perm[i], perm[j])[perm[l]])) return false;
    return true;
}

}  // namespace artin

#endif
