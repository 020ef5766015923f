// Hilbert-function shape recognition for stretched / almost stretched
// Artinian Gorenstein algebras, the low-multiplicity shape enumerations, and
// the resulting Poincare-series rationality guarantees.
#ifndef ARTIN_CLASSIFICATION_HPP
#define ARTIN_CLASSIFICATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/hilbert.hpp"

namespace artin {

enum class GorensteinKind { stretched, almost_stretched, other };

std::string kind_name(GorensteinKind k);

struct GorensteinClass {
    GorensteinKind kind;
    HilbertFunction witness;
};

// m^2 is minimally generated by H(2) elements: H(2) <= 1 -> stretched
// (m^2 = 0 counts as principal by convention), H(2) = 2 -> almost stretched.
GorensteinKind kind_from_hilbert(const HilbertFunction& hf);

template <class K>
GorensteinClass classify(const FiniteLocalAlgebra<K>& A) {
    HilbertFunction hf = hilbert_function(A);
    return {kind_from_hilbert(hf), std::move(hf)};
}

// Recognizes the shape 1, h, 2 (t-1 times), 1 (s-t times) with h >= 2 and
// s >= t+1 >= 3, returning (s, t).
std::optional<std::pair<long, long>> almost_stretched_shape_params(const HilbertFunction& hf);

// The stretched shape 1, h, 1^k with h >= 2 and k >= 1.
bool is_stretched_shape(const HilbertFunction& hf);

// All stretched or almost stretched Hilbert functions with H(1) = h and total
// sum e, with the codimension-two exclusion (h = 2 forbids H(2) = 3). Empty
// for e = h + 1: that is the minimal-multiplicity case, handled separately by
// the rationality guarantee.
std::vector<HilbertFunction> possible_gorenstein_hilbert_functions(long e, long h);

struct RationalityGuarantee {
    bool guaranteed = false;
    std::string rule;    // "minimal_multiplicity" | "codim_gap_le_4" | "multiplicity_le_7" | "none"
    std::string reason;
};

RationalityGuarantee poincare_rationality_guarantee(long e, long h);

}  // namespace artin

#endif
