#pragma once

// Shared 4-variable worked example: the expansion of
//   x1^8 x2^12 x3^12 * (q x1 x3 + x2^2 x3 + x2^2 x4)
//     * P1(x1^2 x2^-4 x3^3 x4^5) * P2(x1^-4 x2^8 x3^-6 x4^7)
// with P1(y) = 3q^2 y^3 + q y + 1 and P2(y) = 7q y^2 - 2 y + 2q,
// a 27-term polynomial whose decomposition is known exactly.

namespace qil::testdata {

inline constexpr const char* kBig4Input =
    "2*q^2*x1^9*x2^12*x3^13 + 2*q*x1^8*x2^14*x3^13"
    " + 2*q*x1^8*x2^14*x3^12*x4 + 2*q^3*x1^11*x2^8*x3^16*x4^5"
    " + 2*q^2*x1^10*x2^10*x3^16*x4^5"
    " + 2*q^2*x1^10*x2^10*x3^15*x4^6 - 2*q*x1^5*x2^20*x3^7*x4^7"
    " - 2*x1^4*x2^22*x3^7*x4^7 - 2*x1^4*x2^22*x3^6*x4^8"
    " - 2*q^2*x1^7*x2^16*x3^10*x4^12"
    " - 2*q*x1^6*x2^18*x3^10*x4^12 - 2*q*x1^6*x2^18*x3^9*x4^13"
    " + 7*q^2*x1*x2^28*x3*x4^14 + 7*q*x2^30*x3*x4^14"
    " + 7*q*x2^30*x4^15"
    " + 6*q^4*x1^15*x3^22*x4^15 + 6*q^3*x1^14*x2^2*x3^22*x4^15"
    " + 6*q^3*x1^14*x2^2*x3^21*x4^16 + 7*q^3*x1^3*x2^24*x3^4*x4^19"
    " + 7*q^2*x1^2*x2^26*x3^4*x4^19 + 7*q^2*x1^2*x2^26*x3^3*x4^20"
    " - 6*q^3*x1^11*x2^8*x3^16*x4^22 - 6*q^2*x1^10*x2^10*x3^16*x4^22"
    " - 6*q^2*x1^10*x2^10*x3^15*x4^23 + 21*q^4*x1^7*x2^16*x3^10*x4^29"
    " + 21*q^3*x1^6*x2^18*x3^10*x4^29 + 21*q^3*x1^6*x2^18*x3^9*x4^30";

// Expected decomposition:
//   content  = 1
//   monomial = x1^8 x2^12 x3^12
//   p0       = q x1 x3 + x2^2 x3 + x2^2 x4
//   factors  = ((2,-4,3,5),  3q^2 y^3 + q y + 1)
//              ((-4,8,-6,7), 7q y^2 - 2 y + 2q)
inline constexpr const char* kBig4P0 = "q*x1*x3 + x2^2*x3 + x2^2*x4";
inline constexpr const char* kBig4Factor1 = "3*q^2*y^3 + q*y + 1";
inline constexpr const char* kBig4Factor2 = "7*q*y^2 - 2*y + 2*q";

}  // namespace qil::testdata
