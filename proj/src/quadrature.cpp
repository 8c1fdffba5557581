#include "cab/quadrature.hpp"

namespace cab {

namespace {

// Abramowitz & Stegun table 25.4, symmetric pairs expanded.
constexpr double kNodes8[] = {
    -0.9602898564975362316835609, -0.7966664774136267395915539,
    -0.5255324099163289858177390, -0.1834346424956498049394761,
    0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609,
};
constexpr double kWeights8[] = {
    0.1012285362903762591525314, 0.2223810344533744705443560,
    0.3137066458778872873379622, 0.3626837833783619829651504,
    0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314,
};

constexpr double kNodes16[] = {
    -0.9894009349916499325961542, -0.9445750230732325760779884,
    -0.8656312023878317438804679, -0.7554044083550030338951012,
    -0.6178762444026437484466718, -0.4580167776572273863424194,
    -0.2816035507792589132304605, -0.0950125098376374401853193,
    0.0950125098376374401853193,  0.2816035507792589132304605,
    0.4580167776572273863424194,  0.6178762444026437484466718,
    0.7554044083550030338951012,  0.8656312023878317438804679,
    0.9445750230732325760779884,  0.9894009349916499325961542,
};
constexpr double kWeights16[] = {
    0.0271524594117540948517806, 0.0622535239386478928628438,
    0.0951585116824927848099251, 0.1246289712555338720524763,
    0.1495959888165767320815017, 0.1691565193950025381893121,
    0.1826034150449235888667637, 0.1894506104550684962853967,
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

}  // namespace

GaussRule gauss_legendre(int order) {
    switch (order) {
        case 8:
            return {std::span(kNodes8), std::span(kWeights8)};
        case 16:
            return {std::span(kNodes16), std::span(kWeights16)};
        default:
            throw DomainError("gauss_legendre: only orders 8 and 16 are tabulated");
    }
}

}  // namespace cab
