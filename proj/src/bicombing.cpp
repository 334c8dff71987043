#include "bicomb/bicombing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bicomb {

namespace {

void require_unit(double t, const char* who)
{
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument(std::string(who) + ": t must lie in [0, 1]");
}

void require_in(const Region& region, Point2 p, const char* who)
{
    if (!contains(region, p, kMembershipTol)) {
        std::ostringstream os;
        os << who << ": point " << p << " is outside " << describe(region);
        throw std::domain_error(os.str());
    }
}

const Region& region_X() { static const Region r = Region::of(RegionTag::X); return r; }
const Region& region_X1() { static const Region r = Region::of(RegionTag::X1); return r; }
const Region& region_X2() { static const Region r = Region::of(RegionTag::X2); return r; }

bool in_Y12(Point2 p)
{
    static const Region y1 = Region::of(RegionTag::Y1);
    static const Region y2 = Region::of(RegionTag::Y2);
    return contains(y1, p, kMembershipTol) || contains(y2, p, kMembershipTol);
}

double mix(double a, double b, double t) { return (1.0 - t) * a + t * b; }

// Pieces of X; x = -1 and x = 1 belong to the antennas.
enum class Piece { minus, zero, plus };

Piece piece_of(Point2 p)
{
    if (p.x <= -1.0) return Piece::minus;
    if (p.x >= 1.0) return Piece::plus;
    return Piece::zero;
}

// The case table for p.x <= q.x.
Point2 sigma_delta_ordered(double delta, Point2 p, Point2 q, double t)
{
    const double x = mix(p.x, q.x, t);
    const Piece from = piece_of(p);
    const Piece to = piece_of(q);

    double y = 0.0;
    if (from == Piece::minus && to == Piece::plus) {
        y = delta * std::max(q.x - p.x - 4.0, 0.0) * std::max(0.0, 1.0 - x * x);
    } else if (from == Piece::minus && to == Piece::zero) {
        y = std::max(0.0, q.y / (q.x + 1.0) * (x + 1.0));
    } else if (from == Piece::zero && to == Piece::plus) {
        y = std::max(0.0, p.y / (p.x - 1.0) * (x - 1.0));
    } else if (from == Piece::zero && to == Piece::zero) {
        y = mix(p.y, q.y, t);
    }
    return {x, y};
}

// Lexicographic order on (x, y) so that vertical pairs reverse exactly too.
bool ordered(Point2 p, Point2 q) { return p.x < q.x || (p.x == q.x && p.y <= q.y); }

Point2 sigma_delta_unchecked(double delta, Point2 p, Point2 q, double t)
{
    if (ordered(p, q)) return sigma_delta_ordered(delta, p, q, t);
    return sigma_delta_ordered(delta, q, p, 1.0 - t);
}

Point2 fold_unchecked(Point2 p) { return p.x < -1.0 ? fold_s(p) : p; }

Point2 retract_unchecked(Point2 p)
{
    const double cap = std::abs(std::abs(p.x) - 1.0);
    const double h = std::min(std::abs(p.y), cap);
    return {p.x, p.y == 0.0 ? 0.0 : std::copysign(h, p.y)};
}

Point2 sigma_X1_unchecked(Point2 p, Point2 q, double t)
{
    if (p.x <= q.x) return retract_unchecked(lerp(p, q, t));
    return fold_unchecked(retract_unchecked(lerp(fold_unchecked(p), fold_unchecked(q), t)));
}

}  // namespace

Bicombing::Bicombing(std::string name, Region domain, SpaceId space, Eval eval)
    : name_(std::move(name)), domain_(domain), space_(space), eval_(std::move(eval))
{
    if (!eval_) throw std::invalid_argument("Bicombing: empty evaluator");
}

Delta::Delta(double value) : value_(value)
{
    if (!(value >= 0.0 && value <= kMax))
        throw std::invalid_argument("delta must lie in [0, 1/64]");
}

Point2 linear(Point2 p, Point2 q, double t)
{
    require_unit(t, "linear");
    return lerp(p, q, t);
}

Point2 sigma_delta(Delta delta, Point2 p, Point2 q, double t)
{
    require_unit(t, "sigma_delta");
    require_in(region_X(), p, "sigma_delta");
    require_in(region_X(), q, "sigma_delta");
    return sigma_delta_unchecked(delta.value(), p, q, t);
}

Point2 sigma_tilde_delta(Delta delta, Point2 p, Point2 q, double t)
{
    require_unit(t, "sigma_tilde_delta");
    require_in(region_X(), p, "sigma_tilde_delta");
    require_in(region_X(), q, "sigma_tilde_delta");
    if (piece_of(p) == Piece::plus && piece_of(q) == Piece::minus) return {mix(p.x, q.x, t), 0.0};
    return sigma_delta_unchecked(delta.value(), p, q, t);
}

Point2 fold_s(Point2 p) { return {p.x, -p.y}; }

Point2 fold_f(Point2 p, FoldDirection direction)
{
    if (direction == FoldDirection::forward)
        require_in(region_X2(), p, "fold_f(forward)");
    else
        require_in(region_X1(), p, "fold_f(inverse)");
    return fold_unchecked(p);
}

Point2 retraction_pi(Point2 p)
{
    if (!in_Y12(p)) {
        std::ostringstream os;
        os << "retraction_pi: point " << p << " is outside Y1 u Y2";
        throw std::domain_error(os.str());
    }
    return retract_unchecked(p);
}

Point2 sigma_X1(Point2 p, Point2 q, double t)
{
    require_unit(t, "sigma_X1");
    require_in(region_X1(), p, "sigma_X1");
    require_in(region_X1(), q, "sigma_X1");
    return sigma_X1_unchecked(p, q, t);
}

Point2 tau_X1(Point2 p, Point2 q, double t)
{
    require_unit(t, "tau_X1");
    require_in(region_X1(), p, "tau_X1");
    require_in(region_X1(), q, "tau_X1");

    const Point2 m = 0.5 * (sigma_X1_unchecked(p, q, 0.5) + sigma_X1_unchecked(q, p, 0.5));
    if (!contains(region_X1(), m, kMembershipTol)) {
        std::ostringstream os;
        os << "tau_X1: averaged midpoint " << m << " of " << p << ", " << q << " left X1";
        throw std::logic_error(os.str());
    }
    if (t <= 0.5) return sigma_X1_unchecked(p, m, 2.0 * t);
    return sigma_X1_unchecked(m, q, 2.0 * t - 1.0);
}

Point2 pushforward(Point2 shift, const Bicombing& base, Point2 p, Point2 q, double t)
{
    require_unit(t, "pushforward");
    const Point2 bp = p - shift;
    const Point2 bq = q - shift;
    require_in(base.domain(), bp, "pushforward");
    require_in(base.domain(), bq, "pushforward");
    return base(bp, bq, t) + shift;
}

Bicombing make_linear(SpaceId space)
{
    return Bicombing("linear[" + std::string(to_string(space)) + "]", Region::of(RegionTag::plane), space,
                     linear);
}

Bicombing make_sigma_delta(Delta delta)
{
    std::ostringstream name;
    name << "sigma_delta[" << delta.value() << "]";
    return Bicombing(name.str(), Region::of(RegionTag::X), SpaceId::hybrid,
                     [delta](Point2 p, Point2 q, double t) { return sigma_delta(delta, p, q, t); });
}

Bicombing make_sigma_tilde_delta(Delta delta)
{
    std::ostringstream name;
    name << "sigma_tilde_delta[" << delta.value() << "]";
    return Bicombing(name.str(), Region::of(RegionTag::X), SpaceId::hybrid,
                     [delta](Point2 p, Point2 q, double t) { return sigma_tilde_delta(delta, p, q, t); });
}

Bicombing make_sigma_X1()
{
    return Bicombing("sigma_X1", Region::of(RegionTag::X1), SpaceId::linf, sigma_X1);
}

Bicombing make_tau_X1()
{
    return Bicombing("tau_X1", Region::of(RegionTag::X1), SpaceId::linf, tau_X1);
}

Bicombing make_pushforward(Point2 shift, Bicombing base)
{
    std::ostringstream name;
    name << "shift" << shift << "_*" << base.name();
    const Region domain = base.domain().translated(shift);
    const SpaceId space = base.space();
    return Bicombing(name.str(), domain, space,
                     [shift, base = std::move(base)](Point2 p, Point2 q, double t) {
                         return pushforward(shift, base, p, q, t);
                     });
}

}  // namespace bicomb
