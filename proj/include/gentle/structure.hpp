#pragma once

#include <map>
#include <string>
#include <vector>

#include "gentle/complex.hpp"
#include "gentle/hochschild.hpp"

namespace gentle {

/// Finite linear combination of basis classes; all summands share the total
/// degree (mixed bidegrees are fine).
class HHExpression {
public:
    HHExpression() = default;
    explicit HHExpression(const HHClass& c) { terms_[c] = Scalar(1); }

    bool zero() const { return terms_.empty(); }
    const std::map<HHClass, Scalar>& terms() const { return terms_; }
    void add(const Field& F, const HHClass& c, const Scalar& coeff);
    bool equal(const Field& F, const HHExpression& other) const;
    HHExpression scaled(const Field& F, const Scalar& c) const;
    static HHExpression sum(const Field& F, const HHExpression& a, const HHExpression& b);

private:
    std::map<HHClass, Scalar> terms_;
};

/// Chain-level cup product (bilinear extension of
/// (p1,q1) ∪ (p2,q2) = (-1)^{(|q2|-|p2|)|p1|} (p1p2, q1q2), zero when the
/// concatenations leave the complex).
Cochain chain_cup(const GentleAlgebra& A, const Field& F, const Cochain& f,
                  const Cochain& g);

/// Chain-level composition product f ∘ g = sum_i (-1)^{(i-1)(n-1)} f ∘_i g
/// and the Gerstenhaber bracket
/// [f,g] = f∘g - (-1)^{(m+r-1)(n+s-1)} g∘f (shifted total degrees).
Cochain chain_circle(const GentleAlgebra& A, const Field& F, const Cochain& f,
                     const Cochain& g);
Cochain chain_bracket(const GentleAlgebra& A, const Field& F, const Cochain& f,
                      const Cochain& g);

/// Closed-form structure constants on basis classes.  Shapes follow the
/// product/bracket tables (same-cycle powers multiply, H^1 acts by signed
/// occurrence counts, everything else vanishes); coefficients that the
/// tables leave open up to sign are fixed once per algebra by chain-level
/// evaluation plus identify and cached here.
class StructureCache {
public:
    StructureCache(const GentleAlgebra& A, const Field& F) : A_(A), F_(F) {}

    HHExpression cup(const HHExpression& x, const HHExpression& y);
    HHExpression bracket(const HHExpression& x, const HHExpression& y);

    const GentleAlgebra& algebra() const { return A_; }
    const Field& field() const { return F_; }

private:
    HHExpression cup_classes(const HHClass& x, const HHClass& y);
    HHExpression bracket_classes(const HHClass& x, const HHClass& y);
    Scalar chain_coefficient(const HHClass& x, const HHClass& y, const HHClass& target,
                             bool cup_product);

    const GentleAlgebra& A_;
    Field F_;
    std::map<std::tuple<bool, HHClass, HHClass>, HHExpression> cache_;
};

/// Generators-and-relations presentation of HH as a graded-commutative
/// algebra: arrow generators x_e (degree 1), cycle generators x_B with the
/// doubling rule for odd winding, single-stop generators y_C.
struct Presentation {
    struct Generator {
        std::string name;
        int degree;
        std::string description;
    };
    std::vector<Generator> generators;
    std::vector<std::string> relations;
};
Presentation hh_presentation(const GentleAlgebra& A, const Field& F);

}  // namespace gentle
