#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "bicomb/verify.hpp"

namespace bicomb {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t i)
    {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

struct Residuals {
    SpaceId space;
    Point2 p, q;
    double rp, rq;

    std::pair<double, double> at(Point2 z) const
    {
        return {std::abs(norm(space, z - p) - rp), std::abs(norm(space, z - q) - rq)};
    }
    double max_at(Point2 z) const
    {
        const auto [a, b] = at(z);
        return std::max(a, b);
    }
    double objective(Point2 z) const
    {
        const auto [a, b] = at(z);
        return a * a + b * b;
    }
};

// Step-halving pattern search on the squared residuals. Besides the axes and
// diagonals it polls along q - p and its normal: where the two spheres are
// tangent the minimum sits in a thin valley along the normal.
Point2 refine(const Residuals& res, Point2 z, double step, double min_step)
{
    const Point2 pq = res.q - res.p;
    const double len = std::hypot(pq.x, pq.y);
    const Point2 u = len > 0.0 ? Point2{pq.x / len, pq.y / len} : Point2{1, 0};
    const std::array<Point2, 12> dirs{
        u, Point2{-u.x, -u.y}, Point2{-u.y, u.x}, Point2{u.y, -u.x},
        Point2{1, 0}, Point2{-1, 0}, Point2{0, 1}, Point2{0, -1},
        Point2{1, 1}, Point2{-1, -1}, Point2{1, -1}, Point2{-1, 1}};
    double best = res.objective(z);
    int budget = 20000;
    while (step >= min_step && best > 0.0 && budget-- > 0) {
        bool moved = false;
        for (const Point2& d : dirs) {
            const Point2 trial = z + step * d;
            const double v = res.objective(trial);
            if (v < best) {
                best = v;
                z = trial;
                moved = true;
                break;
            }
        }
        if (!moved) step *= 0.5;
    }
    return z;
}

}  // namespace

std::vector<MidsetCluster> mt_set(SpaceId space, Point2 p, Point2 q, double t, std::size_t resolution, double tol)
{
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("mt_set: t must lie in [0, 1]");
    if (resolution < 2) throw std::invalid_argument("mt_set: resolution must be >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("mt_set: tol must be > 0");

    if (p == q) return {MidsetCluster{p, 0.0, p, p, {p}}};

    const double d = dist(space, p, q);
    const Residuals res{space, p, q, t * d, (1.0 - t) * d};

    // Bounding box of both spheres.
    const Point2 ext = unit_ball_extent(space);
    const Point2 lo{std::min(p.x - res.rp * ext.x, q.x - res.rq * ext.x),
                    std::min(p.y - res.rp * ext.y, q.y - res.rq * ext.y)};
    const Point2 hi{std::max(p.x + res.rp * ext.x, q.x + res.rq * ext.x),
                    std::max(p.y + res.rp * ext.y, q.y + res.rq * ext.y)};
    const double n = static_cast<double>(resolution - 1);
    const double hx = (hi.x - lo.x) / n;
    const double hy = (hi.y - lo.y) / n;
    auto node = [&](std::size_t i, std::size_t j) {
        return Point2{lo.x + (hi.x - lo.x) * (static_cast<double>(i) / n),
                      lo.y + (hi.y - lo.y) * (static_cast<double>(j) / n)};
    };

    // Any point of the set is within half a cell of a node, so its node's
    // residuals are below norm((hx, hy)) / 2.
    const double threshold = tol + norm(space, {hx, hy});
    const double step0 = std::max(hx, hy);

    std::vector<Point2> members;
    std::vector<double> residuals;
    for (std::size_t i = 0; i < resolution; ++i) {
        for (std::size_t j = 0; j < resolution; ++j) {
            const Point2 z = node(i, j);
            if (res.max_at(z) > threshold) continue;
            const Point2 refined = refine(res, z, step0, tol / 10.0);
            const double r = res.max_at(refined);
            if (r > tol) continue;
            members.push_back(refined);
            residuals.push_back(r);
        }
    }
    if (members.empty()) return {};

    // Components by 8-adjacency of the cells that the refined points fall in.
    auto cell_of = [&](Point2 z) {
        const long cx = hx > 0.0 ? std::lround((z.x - lo.x) / hx) : 0;
        const long cy = hy > 0.0 ? std::lround((z.y - lo.y) / hy) : 0;
        return std::pair{cx, cy};
    };
    std::map<std::pair<long, long>, std::size_t> first_in_cell;
    DisjointSets sets(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
        const auto [it, inserted] = first_in_cell.emplace(cell_of(members[k]), k);
        if (!inserted) sets.unite(k, it->second);
    }
    for (const auto& [cell, k] : first_in_cell) {
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                const auto it = first_in_cell.find({cell.first + dx, cell.second + dy});
                if (it != first_in_cell.end()) sets.unite(k, it->second);
            }
        }
    }

    std::map<std::size_t, MidsetCluster> by_root;
    for (std::size_t k = 0; k < members.size(); ++k) {
        const Point2 z = members[k];
        auto [it, inserted] = by_root.try_emplace(sets.find(k), MidsetCluster{z, residuals[k], z, z, {}});
        MidsetCluster& c = it->second;
        if (residuals[k] < c.residual) {
            c.residual = residuals[k];
            c.representative = z;
        }
        c.lo = {std::min(c.lo.x, z.x), std::min(c.lo.y, z.y)};
        c.hi = {std::max(c.hi.x, z.x), std::max(c.hi.y, z.y)};
        c.members.push_back(z);
    }

    std::vector<MidsetCluster> out;
    out.reserve(by_root.size());
    for (auto& [root, c] : by_root) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const MidsetCluster& a, const MidsetCluster& b) {
        return std::pair{a.representative.x, a.representative.y} < std::pair{b.representative.x, b.representative.y};
    });
    return out;
}

}  // namespace bicomb
