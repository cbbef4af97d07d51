#pragma once

#include "anderson/extrat.hpp"
#include "anderson/newton.hpp"

#include <optional>
#include <set>
#include <vector>

namespace anderson {

/// Matrix shape of the defining equation. Form34 is the antidiagonal matrix
/// (zero diagonal); Form35 is lower-triangular-plus-a11 with ord a11 = -1.
enum class Form { Form34, Form35, General };

/// Valuations of the 2x2 matrix entries. w21 (= v = ord a21) must be finite
/// since all coefficient formulas divide by a21. t_override pins ord a2
/// directly; it models choosing a12 so that the a2 sum has that valuation
/// (a12 enters no other coefficient), which is how the (v,t)-parameterized
/// and jump cases are driven.
struct MatrixOrds {
    int q = 2;
    Form form = Form::General;
    ExtRat w11;        // ord a11
    ExtRat w12;        // ord a12 (= u)
    ExtRat w21;        // ord a21 (= v), finite
    ExtRat w22;        // ord a22
    std::optional<ExtRat> t_override;

    const ExtRat& u() const { return w12; }
    const ExtRat& v() const { return w21; }

    void validate() const;
};

MatrixOrds make_form34_uv(int q, ExtRat u, ExtRat v);
MatrixOrds make_form34_vt(int q, ExtRat v, ExtRat t);
MatrixOrds make_form35_uv(int q, ExtRat u, ExtRat v);
MatrixOrds make_form35_vt(int q, ExtRat v, ExtRat t);
MatrixOrds make_general(int q, ExtRat w11, ExtRat w12, ExtRat w21, ExtRat w22);

enum class Coef { A0, A1, A2, A3, A4, B12, B13, B14, B24 };

const char* coef_name(Coef c);

/// Valuations of the affine-equation coefficients, computed as the minimum
/// over each formula's term valuations. `ties` lists coefficients where that
/// minimum was achieved more than once (a jump of valuation could raise the
/// true ord there, so the stored value is only a lower bound).
/// At v = 0 the two b12 terms coincide at 0; b12 then carries value 0 with
/// b12_lower_bound set, and consumers must treat it as "ord b12 >= 0".
struct CoeffVals {
    ExtRat a0, a1, a2, a3, a4;
    ExtRat b12, b13, b14, b24;
    std::set<Coef> ties;
    bool b12_lower_bound = false;

    const ExtRat& head(int k) const;
    bool head_tied() const;  // tie among a1/a2/a3 term minima
    bool tail_uncertain() const;
};

CoeffVals coeff_valuations(const MatrixOrds& m);

/// The five head Newton points (q^0, ord a0) .. (q^4, ord a4); infinite
/// ordinates included (lower_hull drops them).
std::vector<NewtonPoint> head_points(const CoeffVals& c, int q);

/// Position of (u,v) relative to the three terms of a2 = theta^q/a21 +
/// theta^{q^2}/a21^{q^2} - a12^q. The open domains D12/D13/D23 are where one
/// term is strictly minimal; the rays R1/R2/R3 are the pairwise-tie loci
/// meeting at (-q/(q+1), -q/(q+1)).
enum class UvDomain { D12, D13, D23, R1, R2, R3, Vertex };

const char* uv_domain_name(UvDomain d);

UvDomain uv_domain(int q, const Rat& u, const Rat& v);

/// The induced t = ord a2 at (u,v): min of the three term valuations.
Rat induced_t(int q, const Rat& u, const Rat& v);

}  // namespace anderson
