#include "omega/centers.hpp"
#include "omega/errors.hpp"

#include <cmath>

namespace omega {

std::string center_name(CenterId id) {
    switch (id) {
    case CenterId::Omega: return "omega";
    case CenterId::OmegaPrime: return "omega_prime";
    case CenterId::Centroid: return "centroid";
    case CenterId::Orthocenter: return "orthocenter";
    case CenterId::Circumcenter: return "circumcenter";
    case CenterId::Symmedian: return "symmedian";
    case CenterId::AH: return "aH";
    case CenterId::BH: return "bH";
    case CenterId::CH: return "cH";
    }
    throw GeomError("unknown center id");
}

CenterId center_from_name(const std::string& name) {
    for (CenterId id : {CenterId::Omega, CenterId::OmegaPrime, CenterId::Centroid,
                        CenterId::Orthocenter, CenterId::Circumcenter, CenterId::Symmedian,
                        CenterId::AH, CenterId::BH, CenterId::CH})
        if (center_name(id) == name) return id;
    throw UsageError("unknown center: '" + name + "'");
}

static PtR median_second_hit(const Metric& M, const PtR& vertex) {
    // the centroid lies on the orthocentroidal circle, so the other end of its
    // chord along a median comes out of the radical-free second intersection
    Circle oc = named_circle(NamedCircleKind::Orthocentroidal, M);
    PtR G = center(CenterId::Centroid, M);
    return reduce(second_intersection(oc, G, join(vertex, G)));
}

PtR center(CenterId id, const Metric& M) {
    const Rat &a2 = M.a2, &b2 = M.b2, &c2 = M.c2;
    switch (id) {
    case CenterId::Omega:
        // first Brocard point (1/b2 : 1/c2 : 1/a2), denominators cleared
        return reduce(PtR{a2 * c2, a2 * b2, b2 * c2});
    case CenterId::OmegaPrime:
        // second Brocard point (1/c2 : 1/a2 : 1/b2)
        return reduce(PtR{a2 * b2, b2 * c2, c2 * a2});
    case CenterId::Centroid: return PtR{Rat(1), Rat(1), Rat(1)};
    case CenterId::Orthocenter: {
        // (1/x : 1/y : 1/z) with x = b2+c2-a2 etc., cleared to the product form
        // (yz : zx : xy) so right triangles stay finite (the point is a vertex)
        Rat x = b2 + c2 - a2, y = c2 + a2 - b2, z = a2 + b2 - c2;
        return reduce(PtR{y * z, z * x, x * y});
    }
    case CenterId::Circumcenter:
        return reduce(PtR{a2 * (b2 + c2 - a2), b2 * (c2 + a2 - b2), c2 * (a2 + b2 - c2)});
    case CenterId::Symmedian: return reduce(PtR{a2, b2, c2});
    case CenterId::AH: return median_second_hit(M, vertex_A());
    case CenterId::BH: return median_second_hit(M, vertex_B());
    case CenterId::CH: return median_second_hit(M, vertex_C());
    }
    throw GeomError("unknown center id");
}

std::string named_circle_name(NamedCircleKind kind) {
    switch (kind) {
    case NamedCircleKind::Circumcircle: return "circumcircle";
    case NamedCircleKind::SevenPoint: return "seven-point";
    case NamedCircleKind::Orthocentroidal: return "orthocentroidal";
    }
    throw GeomError("unknown circle kind");
}

NamedCircleKind named_circle_from_name(const std::string& name) {
    for (NamedCircleKind k : {NamedCircleKind::Circumcircle, NamedCircleKind::SevenPoint,
                              NamedCircleKind::Orthocentroidal})
        if (named_circle_name(k) == name) return k;
    throw UsageError("unknown named circle: '" + name + "'");
}

Circle named_circle(NamedCircleKind kind, const Metric& M) {
    switch (kind) {
    case NamedCircleKind::Circumcircle: return circumcircle_of(M);
    case NamedCircleKind::SevenPoint: {
        PtR O = center(CenterId::Circumcenter, M), K = center(CenterId::Symmedian, M);
        if (proj_eq(O, K)) throw DataError("seven-point circle degenerates for an equilateral metric");
        return circle_on_diameter(O, K, M);
    }
    case NamedCircleKind::Orthocentroidal: {
        PtR G = center(CenterId::Centroid, M), H = center(CenterId::Orthocenter, M);
        if (proj_eq(G, H))
            throw DataError("orthocentroidal circle degenerates for an equilateral metric");
        return circle_on_diameter(G, H, M);
    }
    }
    throw GeomError("unknown circle kind");
}

Approx brocard_angle(const Metric& M) {
    double four_area = std::sqrt(to_double(M.sixteen_area_sq()));
    double cot = to_double(M.a2 + M.b2 + M.c2) / four_area;
    return Approx{std::atan2(1.0, cot), global_tol()};
}

} // namespace omega
