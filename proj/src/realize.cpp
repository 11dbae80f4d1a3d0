#include "cayley/realize.hpp"

#include "cayley/error.hpp"

#include <algorithm>
#include <cmath>

namespace cayley {

OrientationSeq OrientationSeq::from_index(std::size_t n, std::uint64_t index)
{
    OrientationSeq s(n);
    for (std::size_t k = 0; k < n && k < 64; ++k) {
        s.bits_[k] = ((index >> k) & 1U) == 0;
    }
    return s;
}

OrientationSeq OrientationSeq::parse(std::string_view text)
{
    OrientationSeq s(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '+') {
            s.bits_[k] = true;
        } else if (text[k] == '-') {
            s.bits_[k] = false;
        } else {
            throw Error(ErrorCode::ParseError, "orientation must consist of '+' and '-'");
        }
    }
    return s;
}

OrientationSeq OrientationSeq::flipped() const
{
    OrientationSeq s = *this;
    s.bits_.flip();
    return s;
}

std::string OrientationSeq::str() const
{
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_) {
        out.push_back(b ? '+' : '-');
    }
    return out;
}

namespace {

struct Hit {
    Point point;
    bool collinear = false;
    bool tangent = false; // both branches coincide
};

std::optional<Hit> intersect(Point ca, double ra, Point cb, double rb, bool plus, const Tolerance& tol)
{
    const double dx = cb.x - ca.x;
    const double dy = cb.y - ca.y;
    const double r3 = std::hypot(dx, dy);
    if (!(r3 > 1e-14 * std::max(1.0, ra + rb))) {
        throw Error(ErrorCode::CoincidentCenters, "circle centres coincide");
    }
    double s1 = ra + rb - r3;
    double s2 = ra - rb + r3;
    double s3 = -ra + rb + r3;
    const double smin = std::min({s1, s2, s3});
    if (smin < -tol.abs_tol) {
        return std::nullopt;
    }
    s1 = std::max(s1, 0.0);
    s2 = std::max(s2, 0.0);
    s3 = std::max(s3, 0.0);
    const double x = (ra * ra + r3 * r3 - rb * rb) / (2.0 * r3);
    const double y = std::sqrt((ra + rb + r3) * s1 * s2 * s3) / (2.0 * r3);
    const double ux = dx / r3;
    const double uy = dy / r3;
    const double side = plus ? y : -y;
    Hit h;
    h.point = {ca.x + x * ux - side * uy, ca.y + x * uy + side * ux};
    h.collinear = smin <= tol.collinearity_tol;
    h.tangent = y == 0.0;
    return h;
}

std::optional<Hit> place(const HennebergLinkage& h, const std::vector<Point>& pts, std::size_t k, bool plus,
    const Tolerance& tol)
{
    const auto& s = h.construction.steps[k];
    try {
        return intersect(pts[static_cast<std::size_t>(s.base_pair.a)], h.step_lengths[k][0],
            pts[static_cast<std::size_t>(s.base_pair.b)], h.step_lengths[k][1], plus, tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CoincidentCenters) {
            throw Error(ErrorCode::DegenerateStep, "step " + std::to_string(k) + ": base pair vertices coincide");
        }
        throw;
    }
}

Realization pinned(const HennebergLinkage& h)
{
    Realization r;
    r.points.assign(h.construction.vertex_count, Point{});
    r.collinear.assign(h.construction.steps.size(), false);
    r.points[static_cast<std::size_t>(h.construction.base_edge.b)] = {h.base_length, 0.0};
    return r;
}

bool same_points(const Realization& a, const Realization& b, double eps)
{
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (std::abs(a.points[i].x - b.points[i].x) > eps || std::abs(a.points[i].y - b.points[i].y) > eps) {
            return false;
        }
    }
    return true;
}

void check_cap(const HennebergLinkage& h, std::size_t step_cap)
{
    if (h.construction.steps.size() > step_cap) {
        throw Error(ErrorCode::TooManyOrientations,
            std::to_string(h.construction.steps.size()) + " steps exceed the cap of " + std::to_string(step_cap));
    }
}

class Explorer {
public:
    Explorer(const HennebergLinkage& h, const Tolerance& tol, bool stop_at_first)
        : h_(h)
        , tol_(tol)
        , first_(stop_at_first)
        , current_(pinned(h))
        , sigma_(h.construction.steps.size())
    {
    }

    bool run() { return descend(0); }
    std::vector<std::pair<OrientationSeq, Realization>>& found() { return found_; }

private:
    bool descend(std::size_t k)
    {
        if (k == h_.construction.steps.size()) {
            found_.emplace_back(sigma_, current_);
            return first_;
        }
        const auto v = static_cast<std::size_t>(h_.construction.steps[k].new_vertex);
        for (bool plus : {true, false}) {
            auto hit = place(h_, current_.points, k, plus, tol_);
            if (!hit) {
                return false;
            }
            current_.points[v] = hit->point;
            current_.collinear[k] = hit->collinear;
            sigma_.set(k, plus);
            if (descend(k + 1)) {
                return true;
            }
            if (hit->tangent) {
                break;
            }
        }
        sigma_.set(k, true);
        return false;
    }

    const HennebergLinkage& h_;
    const Tolerance& tol_;
    bool first_;
    Realization current_;
    OrientationSeq sigma_;
    std::vector<std::pair<OrientationSeq, Realization>> found_;
};

} // namespace

std::optional<Intersection> circle_intersect(
    Point center_a, double r_a, Point center_b, double r_b, bool plus, const Tolerance& tol)
{
    auto h = intersect(center_a, r_a, center_b, r_b, plus, tol);
    if (!h) {
        return std::nullopt;
    }
    return Intersection{h->point, h->collinear};
}

HennebergLinkage completed(const Linkage& l, double dstar)
{
    const Edge f = l.base_nonedge();
    return with_lengths(l.construction(), [&](VertexId u, VertexId v) {
        return Edge(u, v) == f ? dstar : l.length(u, v);
    });
}

std::optional<Realization> rc_realize_prefix(
    const HennebergLinkage& h, const OrientationSeq& sigma, std::size_t steps, const Tolerance& tol)
{
    if (sigma.size() != h.construction.steps.size()) {
        throw Error(ErrorCode::PreconditionViolated, "orientation length does not match the step count");
    }
    Realization r = pinned(h);
    for (std::size_t k = 0; k < steps && k < h.construction.steps.size(); ++k) {
        auto hit = place(h, r.points, k, sigma.plus(k), tol);
        if (!hit) {
            return std::nullopt;
        }
        r.points[static_cast<std::size_t>(h.construction.steps[k].new_vertex)] = hit->point;
        r.collinear[k] = hit->collinear;
    }
    return r;
}

std::optional<Realization> rc_realize(const HennebergLinkage& h, const OrientationSeq& sigma, const Tolerance& tol)
{
    return rc_realize_prefix(h, sigma, h.construction.steps.size(), tol);
}

std::vector<std::pair<OrientationSeq, Realization>> realize_all_orientations(
    const HennebergLinkage& h, const Tolerance& tol, std::size_t step_cap)
{
    check_cap(h, step_cap);
    Explorer ex(h, tol, false);
    ex.run();
    auto& all = ex.found();
    const double eps = tol.abs_tol * std::max(1.0, h.base_length);
    std::vector<std::pair<OrientationSeq, Realization>> out;
    for (auto& item : all) {
        const bool dup = std::any_of(out.begin(), out.end(),
            [&](const auto& kept) { return same_points(kept.second, item.second, eps); });
        if (!dup) {
            out.push_back(std::move(item));
        }
    }
    return out;
}

bool any_orientation_realizes(const HennebergLinkage& h, const Tolerance& tol, std::size_t step_cap)
{
    check_cap(h, step_cap);
    Explorer ex(h, tol, true);
    return ex.run();
}

double measured_distance(const Realization& p, VertexId u, VertexId w)
{
    const Point a = p.points[static_cast<std::size_t>(u)];
    const Point b = p.points[static_cast<std::size_t>(w)];
    return std::hypot(a.x - b.x, a.y - b.y);
}

double collinearity_defect(const HennebergLinkage& h, const Realization& p, std::size_t k)
{
    const auto& s = h.construction.steps[k];
    const double d = measured_distance(p, s.base_pair.a, s.base_pair.b);
    const double r0 = h.step_lengths[k][0];
    const double r1 = h.step_lengths[k][1];
    return std::min(std::abs(d - (r0 + r1)), std::abs(d - std::abs(r0 - r1)));
}

} // namespace cayley
