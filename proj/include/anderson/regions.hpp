#pragma once

#include "anderson/chains.hpp"
#include "anderson/coeffs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace anderson {

/// Antidiagonal family, (v,t)-plane. h1 = 0 on the union of the closed
/// angles A- = {t >= -v, v <= -q^2/(q-1)} and A+ = {t >= -q^2 v,
/// v >= 1/(q-1)} (borders included); h1 = 4 everywhere else. The boundary
/// flag marks points on an angle border.
RegionVerdict classify_34(int q, const Rat& v, const Rat& t);

/// Angle vertices: V- = (-q^2/(q-1), q^2/(q-1)), V+ = (1/(q-1), -q^2/(q-1)).
std::pair<Rat, Rat> angle_vertex_minus(int q);
std::pair<Rat, Rat> angle_vertex_plus(int q);

/// Antidiagonal family on the (u,v)-plane. Off the a2-tie rays the induced
/// t = ord a2 is exact and Theorem 5.1 applies (always h1 = 4 there). On the
/// rays, t can jump; the only loci where h1 = 0 can occur are the subrays
///   Rbar3 = {v = -q u - q, v <= -q^2/(q-1)}  (initial point (1/(q-1), -q^2/(q-1)))
///   Rbar2 = {v = -u/q - 1, v >=  1/(q-1)}    (initial point (-q^2/(q-1), 1/(q-1)))
/// which return Indeterminate; the rest of the rays sits in the middle band
/// -q^2/(q-1) < v < 1/(q-1) where h1 = 4 for every t.
RegionVerdict classify_uv_34(int q, const Rat& u, const Rat& v);

/// Duality map (v,t) -> (v', t') = (-q v - q, 2 q v + t/q + q), valid on the
/// closed chart U = A+ cut with {t <= -v - q}; the image lands in A-.
std::pair<Rat, Rat> dual_params(int q, const Rat& v, const Rat& t);

bool in_angle_minus(int q, const Rat& v, const Rat& t);
bool in_angle_plus(int q, const Rat& v, const Rat& t);
bool in_dual_chart(int q, const Rat& v, const Rat& t);

/// Lower-triangular-plus-a11 family at q = 2. Proved regions:
///   h1 = 4: all of D13 and D12, the D23 subcase 1.1.2, and the jump regions
///           {0 <= v < 2, t >= -16v/7 - 24/7} and {-4/3 < v < -1/3, t >= -4v - 6};
///   h1 = 0: the jump region {v >= 2, t >= -16v/7 - 24/7}.
/// Everything else is Unknown (open in the case catalogue). Jump regions are
/// reachable only with an explicit t (u may be absent for those).
RegionVerdict classify_35_q2(const std::optional<Rat>& u, const Rat& v,
                             const std::optional<Rat>& t_override);

/// Affine form c0 + cu*u + cv*v + ct*t with exact rational coefficients.
struct AffineUVT {
    Rat c0, cu, cv, ct;

    Rat eval(const Rat& u, const Rat& v, const Rat& t) const {
        return c0 + cu * u + cv * v + ct * t;
    }
    std::string str() const;
};

/// One linear constraint "expr >= 0" (or "> 0" when strict).
struct LinCond {
    AffineUVT expr;
    bool strict = false;
};

/// One row of the case catalogue: a region predicate plus the symbolic hull
/// vertex list and initial root valuations it promises there.
struct CaseRow {
    std::string id;
    bool uses_u = false;  // predicate/vertices in (u,v); else in (v,t)
    std::optional<UvDomain> domain;  // required uv_domain for (u,v) rows
    std::vector<LinCond> conds;
    std::vector<long long> vertex_x;
    std::vector<AffineUVT> vertex_y;
    std::vector<std::pair<AffineUVT, int>> ords;  // (value, multiplicity)

    bool matches(const std::optional<Rat>& u, const Rat& v, const Rat& t) const;
};

/// The full catalogue at q = 2 (D23 cases 1.1-1.3, 2.1, 2a.2, 2b.2, 2.3,
/// 2.5, 3.1-3.3 plus the D12/D13 rows).
const std::vector<CaseRow>& case_catalogue_q2();

struct CaseEval {
    std::string id;
    std::vector<NewtonPoint> vertices;
    std::vector<RootOrd> ords;  // sorted by decreasing ord
};

/// Looks up the catalogued case containing the point and instantiates its
/// row. t comes from t_override if given, else from min-of-terms at (u,v).
/// Throws if the point lies in no catalogued region.
CaseEval case_table_35_q2(const std::optional<Rat>& u, const Rat& v,
                          const std::optional<Rat>& t_override);

/// JSON rendering of the catalogue (one object per row).
std::string case_catalogue_json();

}  // namespace anderson
