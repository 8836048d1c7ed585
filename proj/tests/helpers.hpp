#pragma once

#include "orbifold/orbicore.hpp"
#include "orbifold/orbdiv.hpp"

namespace th {

using namespace orbifold;

inline CurveTag X0(int characteristic = 0)
{
    return CurveTag{"X", 0, characteristic};
}

inline TameBranchData bd(std::map<PointLabel, int> orders, CurveTag c = X0())
{
    return TameBranchData(std::move(c), std::move(orders));
}

/// z -> z^m over genus 0.
inline RamificationProfile zpow(int m)
{
    return RamificationProfile::create(X0(), m, {{"0", {m}}, {"inf", {m}}}, true);
}

inline OrbifoldCurve orb(std::map<PointLabel, int> orders)
{
    return OrbifoldCurve(bd(std::move(orders)));
}

inline OrbDivisor div(const OrbifoldCurve& c, std::map<PointLabel, std::int64_t> coeffs)
{
    return OrbDivisor(c, std::move(coeffs));
}

} // namespace th
