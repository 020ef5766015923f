// Constructors for the almost stretched Gorenstein algebra family and its
// companion quotients. Products of basis monomials are computed by exhaustive
// rewriting; the ring-axiom validation in FiniteLocalAlgebra doubles as an
// operational confluence check for the rule set (a failure aborts the build).
#ifndef ARTIN_BUILDERS_HPP
#define ARTIN_BUILDERS_HPP

#include <stdexcept>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/rational.hpp"

namespace artin {

struct AlmostStretchedParams {
    long h = 2;           // embedding dimension
    long s = 3, t = 2;    // socle-degree parameters, s >= t+1 >= 3
    Rational a = Rational(0);
    bool stretched_t1 = false;  // admit t = 1, producing the stretched structure

    void validate() const {
        if (h < 2) throw std::invalid_argument("params: h must be >= 2");
        long t_min = stretched_t1 ? 1 : 2;
        if (t < t_min)
            throw std::invalid_argument(stretched_t1 ? "params: t must be >= 1"
                                                     : "params: t must be >= 2 (use the stretched flag for t = 1)");
        if (s < t + 1) throw std::invalid_argument("params: s must be >= t + 1");
    }
};

namespace detail {

// The two table flavours share one rewriting engine. Gorenstein flavour:
//   x1*xj -> 0, x2*xj -> 0, xj*xl -> 0 (j != l), xj^2 -> x1^s,
//   x2^2 -> a*x1*x2 + x1^(s-t+1), x1^t*x2 -> 0, x1^(s+1) -> 0.
// Socle-quotient flavour replaces xj^2 -> 0 and cuts x1^s -> 0.
template <class K>
class AlmostStretchedTable {
public:
    AlmostStretchedTable(long h, long s, long t, K a, bool gorenstein)
        : h_(h), s_(s), t_(t), a_(std::move(a)), gorenstein_(gorenstein) {
        // canonical basis order: 1, ascending x1 powers, ascending x1^i*x2, x3..xh
        labels_.push_back(MonomialLabel::unit());
        for (long i = 1; i <= x1_top(); ++i) labels_.push_back({i, 0, 0});
        for (long i = 0; i <= t_ - 1; ++i) labels_.push_back({i, 1, 0});
        for (long j = 3; j <= h_; ++j) labels_.push_back({0, 0, j});
    }

    const std::vector<MonomialLabel>& labels() const { return labels_; }

    std::vector<std::vector<std::vector<K>>> table() const {
        const std::size_t d = labels_.size();
        std::vector<std::vector<std::vector<K>>> t(d, std::vector<std::vector<K>>(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<K> prod(d, K());
                const MonomialLabel &a = labels_[i], &b = labels_[j];
                std::vector<long> js;
                if (a.xj) js.push_back(a.xj);
                if (b.xj) js.push_back(b.xj);
                normal_form(a.e1 + b.e1, a.e2 + b.e2, js, K(1), prod);
                t[i][j] = std::move(prod);
            }
        }
        return t;
    }

private:
    long x1_top() const { return gorenstein_ ? s_ : s_ - 1; }

    std::size_t index_of(long e1, long e2, long xj) const {
        MonomialLabel m{e1, e2, xj};
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == m) return i;
        throw std::logic_error("rewriting reached a non-basis monomial");
    }

    // accumulate coeff * NF(x1^e1 x2^e2 * prod js) into out
    void normal_form(long e1, long e2, std::vector<long> js, K coeff, std::vector<K>& out) const {
        if (coeff.is_zero()) return;
        if (!js.empty()) {
            if (e1 > 0 || e2 > 0) return;                       // x1*xj = x2*xj = 0
            if (js.size() >= 2) {
                if (js[0] != js[1] || js.size() > 2) return;    // xj*xl = 0
                if (!gorenstein_) return;                       // xj^2 = 0 in the socle quotient
                normal_form(s_, 0, {}, std::move(coeff), out);  // xj^2 = x1^s
                return;
            }
            out[index_of(0, 0, js[0])] += coeff;
            return;
        }
        if (e2 >= 2) {  // x2^2 = a*x1*x2 + x1^(s-t+1)
            normal_form(e1 + 1, e2 - 1, {}, coeff * a_, out);
            normal_form(e1 + s_ - t_ + 1, e2 - 2, {}, std::move(coeff), out);
            return;
        }
        if (e2 == 1 && e1 >= t_) return;  // x1^t*x2 = 0
        if (e1 > x1_top()) return;        // x1^(s+1) = 0, resp. x1^s = 0
        out[index_of(e1, e2, 0)] += coeff;
    }

    long h_, s_, t_;
    K a_;
    bool gorenstein_;
    std::vector<MonomialLabel> labels_;
};

template <class K>
FiniteLocalAlgebra<K> build_from_table(const AlmostStretchedParams& p, bool gorenstein) {
    p.validate();
    detail::AlmostStretchedTable<K> t(p.h, p.s, p.t, K::from_rational(p.a), gorenstein);
    return FiniteLocalAlgebra<K>(t.labels(), t.table());
}

}  // namespace detail

// The almost stretched Gorenstein algebra of embedding dimension h with
// parameters (s, t, a); basis 1, x1..x1^s, x2..x1^(t-1)*x2, x3..xh,
// dimension h + s + t - 1.
template <class K = Rational>
FiniteLocalAlgebra<K> build_almost_stretched(const AlmostStretchedParams& p) {
    return detail::build_from_table<K>(p, true);
}

// The same algebra modulo its socle span{x1^s}; dimension h + s + t - 2.
template <class K = Rational>
FiniteLocalAlgebra<K> build_socle_quotient(const AlmostStretchedParams& p) {
    return detail::build_from_table<K>(p, false);
}

// Embedding-dimension-two members of the family (no extra variables).
template <class K = Rational>
FiniteLocalAlgebra<K> build_embdim2_gorenstein(long s, long t, const Rational& a,
                                               bool stretched_t1 = false) {
    return build_almost_stretched<K>({2, s, t, a, stretched_t1});
}

template <class K = Rational>
FiniteLocalAlgebra<K> build_embdim2_socle_quotient(long s, long t, const Rational& a,
                                                   bool stretched_t1 = false) {
    return build_socle_quotient<K>({2, s, t, a, stretched_t1});
}

}  // namespace artin

#endif
