#include "bicomb/midpoint.hpp"

namespace bicomb {

Bicombing reversibilize(const Bicombing& base, MidpointConfig cfg)
{
    cfg.validate();
    return Bicombing("rev(" + base.name() + ")", base.domain(), base.space(),
                     [base, cfg](Point2 x, Point2 y, double t) {
                         return midpoint(base, base(x, y, t), base(y, x, 1.0 - t), cfg);
                     });
}

}  // namespace bicomb
