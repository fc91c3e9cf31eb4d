#pragma once

// First 100 ordinates of the nontrivial zeros of the Riemann zeta function
// (imaginary parts of the zeros on the critical line, 15 decimal places).
// Embedded so the CLI and the test suite work without an external table.

#include <array>

namespace goldbach {

inline constexpr std::array<double, 100> kBuiltinZeroOrdinates = {
    14.134725141734695, 21.022039638771556, 25.010857580145689, 30.424876125859512,
    32.935061587739192, 37.586178158825675, 40.918719012147498, 43.327073280915002,
    48.005150881167161, 49.773832477672300, 52.970321477714464, 56.446247697063392,
    59.347044002602352, 60.831778524609810, 65.112544048081602, 67.079810529494168,
    69.546401711173985, 72.067157674481905, 75.704690699083926, 77.144840068874799,
    79.337375020249368, 82.910380854086029, 84.735492980517051, 87.425274613125225,
    88.809111207634459, 92.491899270558491, 94.651344040519888, 95.870634228245308,
    98.831194218193687, 101.317851005731384, 103.725538040478341, 105.446623052326089,
    107.168611184276401, 111.029535543169672, 111.874659176992637, 114.320220915452708,
    116.226680320857554, 118.790782865976212, 121.370125002420650, 122.946829293552582,
    124.256818554345770, 127.516683879596499, 129.578704199956064, 131.087688530932667,
    133.497737202997598, 134.756509753373876, 138.116042054533438, 139.736208952121387,
    141.123707404021133, 143.111845807620625, 146.000982486765508, 147.422765342559615,
    150.053520420784878, 150.925257612241467, 153.024693811198887, 156.112909294237880,
    157.597591817594065, 158.849988171420506, 161.188964137596031, 163.030709687181997,
    165.537069187900414, 167.184439978174510, 169.094515415568821, 169.911976479411692,
    173.411536519591550, 174.754191523365733, 176.441434297710430, 178.377407776099972,
    179.916484020257002, 182.207078484366463, 184.874467848387496, 185.598783677707473,
    187.228922583501856, 189.416158656016933, 192.026656360713787, 193.079726603845700,
    195.265396679529232, 196.876481840958320, 198.015309676251917, 201.264751943703800,
    202.493594514140540, 204.189671803104545, 205.394697202163286, 207.906258887806217,
    209.576509716856265, 211.690862595365303, 213.347919359712677, 214.547044783491430,
    216.169538508263713, 219.067596349021386, 220.714918839314009, 221.430705554693333,
    224.007000254604321, 224.983324669582288, 227.421444279679292, 229.337413305525359,
    231.250188700499166, 231.987235253180245, 233.693404178908310, 236.524229665816193
};

} // namespace goldbach
