#include "artal/projective.hpp"

#include <stdexcept>

namespace artal {

Triple normalized(const Triple& t) {
    for (const auto& c : t) {
        if (c.is_zero()) continue;
        Cyclotomic inv = c.inverse();
        return {t[0] * inv, t[1] * inv, t[2] * inv};
    }
    throw std::domain_error("projective triple is identically zero");
}

ProjectivePoint normalized(const ProjectivePoint& p) { return {normalized(p.coords)}; }
ProjectiveLine normalized(const ProjectiveLine& l) { return {normalized(l.coeffs)}; }

Triple cross(const Triple& u, const Triple& v) {
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

Cyclotomic dot(const Triple& u, const Triple& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

namespace {

bool proportional(const Triple& u, const Triple& v) {
    Triple c = cross(u, v);
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

}  // namespace

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q) {
    return proportional(p.coords, q.coords);
}

bool same_line(const ProjectiveLine& l, const ProjectiveLine& m) {
    return proportional(l.coeffs, m.coeffs);
}

bool incident(const ProjectivePoint& p, const ProjectiveLine& l) {
    return dot(p.coords, l.coeffs).is_zero();
}

ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (same_point(p, q)) throw std::invalid_argument("line_through: points coincide");
    return {cross(p.coords, q.coords)};
}

ProjectivePoint meet(const ProjectiveLine& l, const ProjectiveLine& m) {
    if (same_line(l, m)) throw std::invalid_argument("meet: lines coincide");
    return {cross(l.coeffs, m.coeffs)};
}

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
    return dot(cross(p.coords, q.coords), r.coords).is_zero();
}

bool point_repr_less(const ProjectivePoint& p, const ProjectivePoint& q) {
    Triple a = normalized(p.coords);
    Triple b = normalized(q.coords);
    for (int i = 0; i < 3; ++i) {
        if (a[i] == b[i]) continue;
        return repr_less(a[i], b[i]);
    }
    return false;
}

std::string to_string(const ProjectivePoint& p) {
    Triple t = normalized(p.coords);
    return "(" + t[0].to_string() + " : " + t[1].to_string() + " : " + t[2].to_string() + ")";
}

std::string to_string(const ProjectiveLine& l) {
    Triple t = normalized(l.coeffs);
    return "<" + t[0].to_string() + " : " + t[1].to_string() + " : " + t[2].to_string() + ">";
}

}  // namespace artal
