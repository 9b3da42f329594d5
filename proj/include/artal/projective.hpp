#pragma once

#include <array>

#include "artal/cyclotomic.hpp"

namespace artal {

using Triple = std::array<Cyclotomic, 3>;

/// A point of P^2 over Q(omega); coordinates not all zero, equality up to scale.
struct ProjectivePoint {
    Triple coords;
};

/// A line of P^2, stored by its coefficient triple.
struct ProjectiveLine {
    Triple coeffs;
};

/// Scale so the first nonzero entry is 1.  Throws std::domain_error on (0,0,0).
Triple normalized(const Triple& t);
ProjectivePoint normalized(const ProjectivePoint& p);
ProjectiveLine normalized(const ProjectiveLine& l);

Triple cross(const Triple& u, const Triple& v);
Cyclotomic dot(const Triple& u, const Triple& v);

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q);
bool same_line(const ProjectiveLine& l, const ProjectiveLine& m);

/// Exact incidence: sum of coordinate*coefficient vanishes.
bool incident(const ProjectivePoint& p, const ProjectiveLine& l);

/// Throws std::invalid_argument when the inputs coincide.
ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q);
ProjectivePoint meet(const ProjectiveLine& l, const ProjectiveLine& m);

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);

/// Deterministic total order on normalized representatives.
bool point_repr_less(const ProjectivePoint& p, const ProjectivePoint& q);

std::string to_string(const ProjectivePoint& p);  // "(x : y : z)"
std::string to_string(const ProjectiveLine& l);   // "<a : b : c>"

}  // namespace artal
