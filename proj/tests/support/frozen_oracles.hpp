#pragma once

// Generated by tests/oracles/generate_oracles.py. Do not edit.

namespace sqzcav::oracle {

// r_p = 0, 1, 2, 3 with g2 = 1.5, delta_1 = 200, delta_s = 10 cosh(r_p)
inline constexpr double kResonanceDelta2[] = {199.99342064254662, 199.9758549525705, 199.82153433559128, 198.26191793852269};
inline constexpr double kResonanceGEff[] = {0.007894873537090565, 0.00973569096596867, 0.04775624751580773, 1.042240883747568};
// avoided crossing at r_p = 2, n_max = 10
inline constexpr double kCrossingMinGap = 0.09509329654698633;
inline constexpr double kCrossingLocation = 199.82221854569147;
// exact P(g1e2) at r_p = 2 (resonant), times in units of 1/g1
inline constexpr double kFig2cTimes[] = {16.445977317155723, 32.891954634311446, 49.33793195146717, 65.78390926862289, 98.67586390293434};
inline constexpr double kFig2cPge[] = {0.49592101745794587, 0.9961644951917958, 0.5096993178121297, 0.0001888117877917116, 0.995093266074747};
// noise coefficients at r_p = 1.1, theta_p = 0.4, n_th = 0.7, r_e = 1.3, theta_e = 2.0
inline constexpr double kNoise[] = {1.7839541644491141, 2.0526328593745946, -0.8678392535027015, 7.622806967929614, -3.343189966051477, 7.305003346278401, 10.200417142202888, -10.535331750011176, -1.437258478616795};
// P(g1e2) from a small master-equation run (n_max = 3); see generator for parameters
inline constexpr double kMasterTimes[] = {0.5, 1.0, 2.0, 4.0};
inline constexpr double kMasterSqueezedFrameThermal[] = {0.07651313521620222, 0.39489383877187223, 0.2801500195853886, 0.22248453888239994};
inline constexpr double kMasterMatched[] = {0.07285943532913745, 0.3857898067661121, 0.3254899920121848, 0.19534512672830293};
inline constexpr double kMasterSqueezedReservoir[] = {0.07112168054566875, 0.4079645783448385, 0.2791479155650468, 0.22719752517097339};

}  // namespace sqzcav::oracle

