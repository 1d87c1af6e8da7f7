#include "catalog_data.hpp"

#include <algorithm>
#include <functional>

#include "eulersums/harmonic.hpp"

namespace eulersums::detail {

namespace {

// id | weight | lhs | rhs | source | attrs
constexpr std::string_view kRecords = R"CATALOG(
# order three
II.5 | 3 | sum( H(2) / (k^1*(2k-1)^1) ) | -5/2*z3 + 2*ln2*z2 - 2*z2 + 8*ln2 | II (5) | family=linear
II.6 | 3 | sum( h(2) / (k^1*(2k-1)^1) ) | 21/8*z3 - 3/2*ln2*z2 | II (6) | family=linear
II.8 | 3 | sum( H(1)*H(1) / (k^1*(2k-1)^1) ) | -1/2*z3 - 2*ln2*z2 + 2*z2 + 8*ln2 - 8*ln2^2 + 8/3*ln2^3 | II (8) | family=3
II.10 | 3 | sum( H(1)*h(1) / (k^1*(2k-1)^1) ) | 5/4*z3 - 2*ln2*z2 + 2*z2 | II (10) | family=5
II.11 | 3 | sum( P[ h(1) / i^1 ] / (k^1*(2k-1)^1) ) | 2*z2 - z3 | II (11) | family=helper
II.13 | 3 | sum( h(1)*h(1) / (k^1*(2k-1)^1) ) | 3/8*z3 + 3/2*ln2*z2 | II (13) | family=6

# order five
III.15 | 5 | sum( H(1)*h(1) / k^3 ) | 279/16*z5 - 7*ln2^2*z3 + 8/3*ln2^3*z2 - 8/15*ln2^5 - 16*ln2*li4 - 16*li5 | III first family (15) | family=1
III.16 | 5 | sum( H(2)*h(1) / k^2 ) | 93/16*z5 - 7/4*z2*z3 | III first family (16) | family=1
III.17 | 5 | sum( H(1)*h(2) / k^2 ) | -589/32*z5 + 21/8*z2*z3 + 7*ln2^2*z3 - 8/3*ln2^3*z2 + 8/15*ln2^5 + 16*ln2*li4 + 16*li5 | III first family (17) | family=1
III.19 | 5 | sum( H(1)*H(1) / (2k-1)^3 ) | 31/8*z5 - 7/8*z2*z3 - 45/8*ln2*z4 + 45/8*z4 + 7/2*ln2^2*z3 - 7*ln2*z3 - 7/2*z3 + 6*ln2*z2 - 5*z2 + 12*ln2 - 4*ln2^2 | III second family (19) | family=2
III.20 | 5 | sum( H(1)*H(2) / (2k-1)^2 ) | -589/32*z5 + 121/8*ln2*z4 - 121/8*z4 + 7/4*z2*z3 - 7*ln2^2*z3 + 14*ln2*z3 + 21/2*z3 + 4/3*ln2^3*z2 - 4*ln2^2*z2 - 8*ln2*z2 + 6*z2 - 24*ln2 + 8*ln2^2 + 2/3*ln2^4 - 2/15*ln2^5 + 16*li4 + 16*li5 | III second family (20) | family=2
III.22 | 5 | sum( H(1)*H(3) / (k^1*(2k-1)^1) ) | 251/8*z5 - 53/2*ln2*z4 + 53/2*z4 - 3/2*z2*z3 + 12*ln2^2*z3 - 24*ln2*z3 - 8*z3 - 8/3*ln2^3*z2 + 8*ln2^2*z2 + 32*ln2 - 16*ln2^2 - 4/3*ln2^4 + 4/15*ln2^5 - 32*li4 - 32*li5 | III third family (22) | family=3
III.23 | 5 | sum( H(2)*H(2) / (k^1*(2k-1)^1) ) | 5/4*z5 + 5*ln2*z4 - 5*z4 - 3*z2*z3 - 16*z3 + 16*ln2*z2 - 8*z2 + 32*ln2 | III third family (23) | family=3
III.25 | 5 | sum( h(1)*h(1) / (2k-1)^3 ) | -217/128*z5 + 83/32*ln2*z4 - 3/32*z2*z3 + 1/6*ln2^3*z2 - 1/60*ln2^5 + 2*li5 | III fourth family (25) | family=4
III.26 | 5 | sum( h(1)*h(2) / (2k-1)^2 ) | 93/256*z5 + 75/64*ln2*z4 + 3/32*z2*z3 | III fourth family (26) | family=4
III.28 | 5 | sum( H(2)*h(1) / (2k-1)^2 ) | 279/32*z5 - 121/16*ln2*z4 + 63/16*z2*z3 + 7/2*z3 + 2/3*ln2^3*z2 + 3*ln2*z2 - 4*z2 - 1/5*ln2^5 - 8*ln2*li4 - 16*li5 | III fifth family (28) | family=5
III.29 | 5 | sum( H(1)*h(1) / (2k-1)^3 ) | 279/128*z5 - 19/16*ln2*z4 + 83/32*z4 - 7/8*z2*z3 - 7/8*z3 - 1/2*ln2^3*z2 + 1/2*ln2^2*z2 - 3/2*ln2*z2 + z2 - 1/12*ln2^4 + 1/12*ln2^5 - 2*li4 + 2*ln2*li4 | III fifth family (29) | family=5
III.30 | 5 | sum( H(1)*h(2) / (2k-1)^2 ) | 217/64*z5 - 75/32*ln2*z4 + 75/32*z4 - 21/32*z2*z3 - 21/8*z3 + 3/2*ln2*z2 | III fifth family (30) | family=5
III.32 | 5 | sum( h(1)*h(3) / (k^1*(2k-1)^1) ) | 341/128*z5 - 23/32*ln2*z4 + 9/32*z2*z3 - 1/6*ln2^3*z2 + 1/60*ln2^5 - 2*li5 | III sixth family (32) | family=6
III.33 | 5 | sum( h(2)*h(2) / (k^1*(2k-1)^1) ) | 155/64*z5 - 45/16*ln2*z4 + 9/16*z2*z3 | III sixth family (33) | family=6
III.35 | 5 | sum( H(3)*h(1) / (k^1*(2k-1)^1) ) | 713/16*z5 - 53/4*ln2*z4 + 53/4*z4 - 31/4*z2*z3 - 14*ln2*z3 - 7*z3 + 4/3*ln2^3*z2 + 4*ln2^2*z2 + 8*z2 - 2/3*ln2^4 - 2/5*ln2^5 - 16*ln2*li4 - 16*li4 - 32*li5 | III seventh family (35) | family=7
III.36 | 5 | sum( H(2)*h(2) / (k^1*(2k-1)^1) ) | -279/4*z5 + 34*ln2*z4 - 151/8*z4 + 7/4*z2*z3 - 14*ln2*z3 + 21/2*z3 - 8/3*ln2^3*z2 - 4*ln2^2*z2 - 6*ln2*z2 + 2/3*ln2^4 + 4/5*ln2^5 + 32*ln2*li4 + 16*li4 + 64*li5 | III seventh family (36) | family=7
III.37 | 5 | sum( H(1)*h(3) / (k^1*(2k-1)^1) ) | 31/64*z5 - 67/16*ln2*z4 + 11/8*z4 + 21/16*z2*z3 + ln2^3*z2 - ln2^2*z2 + 1/6*ln2^4 - 1/6*ln2^5 - 4*ln2*li4 + 4*li4 | III seventh family (37) | family=7
III.39 | 5 | sum( h(1)*h(2) / k^2 ) | 31/8*z5 - 7/8*z2*z3 | III eighth family (39) | family=8
III.40 | 5 | sum( h(1)*h(1) / k^3 ) | -31/16*z5 + 7/4*z2*z3 | III eighth family (40) | family=8

# order seven
IV.42 | 7 | sum( H(3)*h(1) / k^3 ) | 5715/64*z7 - 279/8*z2*z5 - 329/16*z3*z4 + z3*R1 - 7/2*R4 | IV first family (42) | family=1
IV.43 | 7 | sum( H(4)*h(1) / k^2 ) | 635/16*z7 - 31/2*z2*z5 - 63/8*z3*z4 - R4 | IV first family (43) | family=1
IV.44 | 7 | sum( H(1)*h(2) / k^4 ) | 127/32*z7 + 31/4*z2*z5 - 41/4*z3*z4 - 2*R3 - 1/2*R4 | IV first family (44) | family=1
IV.45 | 7 | sum( H(1)*h(3) / k^3 ) | -3937/256*z7 - 341/32*z2*z5 + 1687/64*z3*z4 - 7/4*z3*R1 + 3/2*R3 + 13/8*R4 | IV first family (45) | family=1
IV.46 | 7 | sum( H(1)*h(4) / k^2 ) | 889/128*z7 + 279/32*z2*z5 - 1001/64*z3*z4 + 7/4*z3*R1 - 1/2*R3 - 9/8*R4 | IV first family (46) | family=1
IV.47 | 7 | sum( H(2)*h(2) / k^3 ) | -3175/32*z7 + 341/8*z2*z5 + 81/4*z3*z4 + 2*R4 | IV first family (47) | family=1
IV.48 | 7 | sum( H(3)*h(2) / k^2 ) | -9271/64*z7 + 527/8*z2*z5 + 193/4*z3*z4 - z3*R1 + 5*R4 | IV first family (48) | family=1
IV.49 | 7 | sum( H(2)*h(3) / k^2 ) | 16637/128*z7 - 62*z2*z5 - 119/8*z3*z4 - 7/2*R4 | IV first family (49) | family=1
IV.51 | 7 | sum( H(2)*h(1) / k^4 ) | 1/2*S[H(1)*H(2) / k^4] + S[H(1)[2k]*H(2) / k^4] - S[H(1)*H(2) / k^4] | IV (51) | family=helper sigma-restored
IV.58 | 7 | sum( H(2)*h(1) / k^4 ) | z2*z5 - z3*z4 - 1/2*S[H(2) / k^5] - z2*S[H(1) / k^4] + z4*S[H(1) / k^2] + 2*S[H(1) / k^4] + S[H(1) / k^5] - 4*S[h(1) / k^4] + 2*S[H(3) / k^4] - S[H(1)*H(4) / k^2] + 3*S[H(1)*H(2) / k^4] - S[H(2)*H(2) / k^3] + S[H(2)*H(3) / k^2] - 3*S[P[ H(1) / i^2 ] / k^4] + 2*S[P[ h(1) / i^2 ] / k^4] - R4 | IV (58) | family=helper sigma-restored
IV.59 | 7 | sum( P[ H(1) / i^2 ] / k^4 ) | z4*S[H(1) / k^2] + S[H(1) / k^6] - S[H(1)*H(4) / k^2] | IV (59) | family=helper
IV.60 | 7 | sum( P[ h(1) / i^2 ] / k^4 ) | z4*S[h(1) / k^2] + S[h(1) / k^6] - S[h(1)*H(4) / k^2] | IV (60) | family=helper
IV.63 | 7 | sum( H(1)*h(3) / k^3 ) | z2*S[h(3) / k^2] + 3/2*z2*S[h(2) / k^3] - 2*ln2*S[h(3) / k^3] - 7/4*z3*R1 - S[P[ H(1)[-1] / (2i-1)^3 ] / k^3] | IV (63) | family=helper
IV.67 | 7 | sum( P[ H(1)[-1] / (2i-1)^3 ] / k^3 ) | 1/4*z2*S[h(2) / k^3] - 2*ln2*S[h(3) / k^3] + 1/4*S[h(2) / k^5] + 1/4*z3*S[h(2) / k^2] - 1/4*S[H(3)*h(2) / k^2] + 3/4*S[H(1)*h(2) / k^4] | IV (67) | family=helper
IV.68 | 7 | sum( H(1)*h(3) / k^3 ) | 5/4*z2*S[h(2) / k^3] + z2*S[h(3) / k^2] - 7/4*z3*R1 - 1/4*S[h(2) / k^5] - 1/4*z3*S[h(2) / k^2] + 1/4*S[H(3)*h(2) / k^2] - 3/4*S[H(1)*h(2) / k^4] | IV (68) | family=helper
IV.71 | 7 | sum( P[ H(1)[-1] / (2i-1)^2 ] / k^4 ) | 7/8*z3*z4 - 3/2*z2*S[h(1) / k^4] + 1/2*S[h(1) / k^6] + z3*R1 - 2*ln2*S[h(2) / k^4] + 2*R3 - 1/2*S[H(4)*h(1) / k^2] | IV (71) | family=helper
IV.73 | 7 | sum( H(1)*h(2) / k^4 ) | 3/2*z2*S[h(1) / k^4] - z3*S[h(2) / k^2] + z2*S[h(2) / k^3] + 2*ln2*S[h(2) / k^4] - S[P[ H(1)[-1] / (2i-1)^2 ] / k^4] | IV (73) | family=helper typo-variant
IV.73b | 7 | sum( H(1)*h(2) / k^4 ) | 3/2*z2*S[h(1) / k^4] - z3*S[h(2) / k^2] + z2*S[h(2) / k^3] - 2*ln2*S[h(2) / k^4] - S[P[ H(1)[-1] / (2i-1)^2 ] / k^4] | IV (73) | family=helper typo-variant
IV.74 | 7 | sum( H(1)*h(2) / k^4 ) | 127/32*z7 + 31/4*z2*z5 - 41/4*z3*z4 - 2*R3 - 1/2*R4 | IV first family (74) | family=1 duplicate
IV.75 | 7 | sum( H(1)*H(1) / (2k-1)^5 ) | 635/64*z7 - 315/32*ln2*z6 + 315/32*z6 + 31/8*ln2^2*z5 - 31/32*z2*z5 - 31/4*ln2*z5 - 93/8*z5 - 315/64*z3*z4 + 15/2*ln2*z4 - 15/8*z4 + 49/16*ln2*z3*z3 - 49/16*z3*z3 + 21/4*z2*z3 - 7*ln2*z3 + 7/2*z3 + 6*ln2*z2 - 11*z2 + 20*ln2 - 4*ln2^2 | IV second family (75) | family=2
IV.76 | 7 | sum( H(1)*H(2) / (2k-1)^4 ) | 889/128*z7 + 195/16*ln2*z6 - 195/16*z6 - 155/32*z2*z5 + 155/4*z5 + 77/32*z3*z4 - 15/2*ln2*z4 - 45/8*z4 - 63/8*ln2*z3*z3 + 63/8*z3*z3 - 35/2*z2*z3 + 14*ln2*z3 + 7/2*z3 - 20*ln2*z2 + 36*z2 - 80*ln2 + 16*ln2^2 + 2*R1 - ln2*R2 + R2 - 9/8*R4 + 1/2*R3 | IV second family (76) | family=2 typo-variant
IV.76b | 7 | sum( H(1)*H(2) / (2k-1)^4 ) | 889/128*z7 + 195/16*ln2*z6 - 195/16*z6 - 155/32*z2*z5 + 155/4*z5 + 77/32*z3*z4 - 15/2*ln2*z4 - 45/8*z4 - 63/8*ln2*z3*z3 + 63/8*z3*z3 - 35/2*z2*z3 + 14*ln2*z3 + 7/2*z3 - 20*ln2*z2 + 36*z2 - 80*ln2 + 16*ln2^2 + 2*R1 - ln2*R2 + R2 - 9/8*R4 - 1/2*R3 | IV second family (76) | family=2 typo-variant
IV.77 | 7 | sum( H(1)*H(3) / (2k-1)^3 ) | -3937/256*z7 - 135/8*ln2*z6 + 135/8*z6 + 31/32*z2*z5 - 31*z5 + 517/64*z3*z4 + 45/4*z4 + 77/8*ln2*z3*z3 - 77/8*z3*z3 + 16*z2*z3 - 12*ln2*z3 - 40*z3 + 36*ln2*z2 - 48*z2 + 160*ln2 - 48*ln2^2 - 2*R1 + 3*ln2*R2 - 3*R2 + 13/8*R4 + 3/2*R3 | IV second family (77) | family=2
IV.78 | 7 | sum( H(1)*H(4) / (2k-1)^2 ) | 127/32*z7 + 69/8*ln2*z6 - 69/8*z6 + 93/8*z2*z5 + 31/2*z5 - 231/16*z3*z4 - 2*ln2*z4 + 5*z4 - 7/2*ln2*z3*z3 + 7/2*z3*z3 - 7*z2*z3 + 52*z3 - 24*ln2*z2 + 24*z2 - 160*ln2 + 64*ln2^2 - z3*R1 - 4*ln2*R2 + 4*R2 - 1/2*R4 - 2*R3 | IV second family (78) | family=2
IV.79 | 7 | sum( H(2)*H(3) / (2k-1)^2 ) | 9525/64*z7 - 217/4*z2*z5 + 62*z5 - 39*z3*z4 - 11/2*z4 - 31*z2*z3 - 8*ln2*z3 + 30*z3 - 24*ln2*z2 + 56*z2 - 160*ln2 + z3*R1 + 16*R1 - 7*R4 | IV second family (79) | family=2
IV.80 | 7 | sum( H(2)*H(2) / (2k-1)^3 ) | -9017/64*z7 + 217/4*z2*z5 - 93*z5 + 511/16*z3*z4 + 25/2*z4 + 49*z2*z3 - 10*z3 + 24*ln2*z2 - 72*z2 + 160*ln2 - 16*R1 + 7*R4 | IV second family (80) | family=2
IV.81 | 7 | sum( H(1)*H(5) / (k^1*(2k-1)^1) ) | -6*z7 - 25/2*z2*z5 - 2*ln2^2*z5 + 4*ln2*z5 - 12*z5 + 59/4*z3*z4 - 10*z4 + 4*z2*z3 - 32*z3 + 128*ln2 - 64*ln2^2 + 2*z3*R1 + 4*ln2*R2 - 4*R2 + 2*R3 | IV third family (81) | family=3
IV.82 | 7 | sum( H(2)*H(4) / (k^1*(2k-1)^1) ) | 7/4*z7 + 7/2*ln2*z6 - 7/2*z6 - 15/2*z2*z5 - 32*z5 + 6*z3*z4 + 8*ln2*z4 - 14*z4 + 12*z2*z3 - 40*z3 + 32*ln2*z2 - 32*z2 + 128*ln2 | IV third family (82) | family=3
IV.83 | 7 | sum( H(3)*H(3) / (k^1*(2k-1)^1) ) | -4991/16*z7 + 237/2*z2*z5 - 40*z5 + 307/4*z3*z4 + 12*z4 + 2*ln2*z3*z3 - 2*z3*z3 + 16*z2*z3 + 32*ln2*z3 - 16*z3 - 32*z2 + 128*ln2 - 4*z3*R1 - 32*R1 + 14*R4 | IV third family (83) | family=3
IV.84 | 7 | sum( h(1)^2 / (2k-1)^5 ) | 127/256*z7 + 63/64*ln2*z6 - 3/128*z2*z5 + 31/32*ln2^2*z5 - 65/256*z3*z4 - 7/32*ln2*z3*z3 - 1/16*ln2*R2 - 1/32*R3 | IV fourth family (84) | family=4
IV.85 | 7 | sum( h(1)*h(2) / (2k-1)^4 ) | 635/1024*z7 + 27/32*ln2*z6 - 19/256*z2*z5 - 1/8*z3*z4 + 7/64*ln2*z3*z3 - 1/64*R4 | IV fourth family (85) | family=4
IV.87 | 7 | sum( h(1)*h(2) / (2k-1)^4 ) | ln2*S[h(2) / (2k-1)^4] + 1/4*z2*S[h(2) / (2k-1)^3] - 1/8*z2*S[h(2) / (2k-1)^2] - 3/64*z2*z5 - 1/32*z3*z4 + 1/64*S[H(4)*h(1) / k^2] | IV (87) | family=helper
IV.88 | 7 | sum( h(1)*h(3) / (2k-1)^3 ) | 5715/4096*z7 + 63/128*ln2*z6 - 283/512*z2*z5 - 43/1024*z3*z4 + 49/128*ln2*z3*z3 - 7/128*R4 | IV fourth family (88) | family=4
IV.89 | 7 | sum( h(1)*h(4) / (2k-1)^2 ) | 351/256*ln2*z6 + 29/128*z2*z5 + 49/512*z3*z4 - 7/64*ln2*z3*z3 + 1/64*R4 | IV fourth family (89) | family=4
IV.90 | 7 | sum( h(2)*h(3) / (2k-1)^2 ) | 635/2048*z7 - 15/256*z2*z5 + 105/128*z3*z4 | IV fourth family (90) | family=4
IV.91 | 7 | sum( h(2)*h(2) / (2k-1)^3 ) | -127/1024*z7 + 15/128*z2*z5 + 195/256*z3*z4 | IV fourth family (91) | family=4
IV.92 | 7 | sum( H(1)*h(1) / (2k-1)^5 ) | 1905/2048*z7 + 189/128*ln2*z6 + 63/64*z6 - 31/256*z2*z5 - 31/16*ln2^2*z5 + 31/16*ln2*z5 - 31/32*z5 - 167/512*z3*z4 - 15/8*ln2*z4 + 15/16*z4 - 35/64*ln2*z3*z3 - 7/32*z3*z3 + 3/16*z2*z3 + 7/4*ln2*z3 - 7/8*z3 - 3/2*ln2*z2 + z2 - 1/4*R1 + 1/16*ln2*R2 - 1/16*R2 + 7/64*R4 | IV fifth family (92) | family=5
IV.98 | 7 | sum( H(1)*h(2) / (2k-1)^4 ) | 1/2*z2*S[H(1) / (2k-1)^4] - 1/4*z3*S[H(1) / (2k-1)^3] + 1/4*z4*S[H(1) / (2k-1)^2] - 1/16*z4*S[1 / (k^1*(2k-1)^2)] - 1/2*ln2*S[1 / (k^4*(2k-1)^1)] + 1/4*ln2*R2 + 1/4*S[h(1) / (k^5*(2k-1)^1)] - 1/8*S[h(2) / k^5] - 1/8*S[h(1)^2 / k^5] + 3/32*z2*S[h(1)[-1] / k^4] + 1/8*ln2*S[h(2)[-1] / k^4] - 1/8*S[h(3)[-1] / k^4] - 1/8*S[h(1)[-1]*h(2)[-1] / k^4] | IV (98) | family=helper
IV.99 | 7 | sum( H(1)*h(2) / (2k-1)^4 ) | 4953/1024*z7 - 27/16*ln2*z6 + 27/16*z6 - 93/128*z2*z5 - 31/32*z5 - 435/256*z3*z4 + 75/32*z4 - 7/32*ln2*z3*z3 + 7/32*z3*z3 - 9/16*z2*z3 - 21/8*z3 + 3/2*ln2*z2 | IV fifth family (99) | family=5
IV.100 | 7 | sum( H(2)*h(1) / (2k-1)^4 ) | -8255/512*z7 - 195/32*ln2*z6 + 403/64*z2*z5 + 31/16*z5 + 519/128*z3*z4 + 15/4*ln2*z4 - 15/4*z4 + 63/16*ln2*z3*z3 - 3/8*z2*z3 - 7*ln2*z3 + 7*z3 + 9*ln2*z2 - 8*z2 + R1 + 1/2*ln2*R2 - 1/4*R4 + 1/2*R3 | IV fifth family (100) | family=5
IV.101 | 7 | sum( H(3)*h(1) / (2k-1)^3 ) | 14605/256*z7 + 135/16*ln2*z6 - 837/32*z2*z5 + 551/64*z3*z4 + 15/4*z4 - 77/16*ln2*z3*z3 + 7*ln2*z3 - 21*z3 - 18*ln2*z2 + 24*z2 - 1/8*z3*R1 - 2*R1 - 3/2*ln2*R2 + 1/8*R4 - 3/2*R3 | IV fifth family (101) | family=5 typo-variant
IV.101b | 7 | sum( H(3)*h(1) / (2k-1)^3 ) | 14605/256*z7 + 135/16*ln2*z6 - 837/32*z2*z5 - 551/64*z3*z4 + 15/4*z4 - 77/16*ln2*z3*z3 + 7*ln2*z3 - 21*z3 - 18*ln2*z2 + 24*z2 - 1/8*z3*R1 - 2*R1 - 3/2*ln2*R2 + 1/8*R4 - 3/2*R3 | IV fifth family (101) | family=5 typo-variant
IV.102 | 7 | sum( H(2)*h(2) / (2k-1)^3 ) | -4699/256*z7 + 279/64*z2*z5 + 31/16*z5 + 281/32*z3*z4 - 195/16*z4 + 9/8*z2*z3 + 63/4*z3 - 9*ln2*z2 + R1 - 1/4*R4 | IV fifth family (102) | family=5
IV.103 | 7 | sum( H(1)*h(3) / (2k-1)^3 ) | 8509/1024*z7 - 63/64*ln2*z6 + 63/64*z6 - 155/64*z2*z5 - 31/32*z5 - 553/256*z3*z4 + 75/32*z4 - 49/64*ln2*z3*z3 + 49/64*z3*z3 - 3/4*z2*z3 - 21/12*ln2*z3 + 7/32*z3*R1 + 1/4*R1 - 7/32*R4 | IV fifth family (103) | family=5
IV.104 | 7 | sum( H(2)*h(3) / (2k-1)^2 ) | -22479/512*z7 + 961/64*z2*z5 + 217/16*z5 + 117/8*z3*z4 - 75/8*z4 - 15/4*z2*z3 + 7*ln2*z3 - 7/8*z3*R1 - R1 + 9/8*R4 | IV fifth family (104) | family=5
IV.108 | 7 | 8*sum( H(1)*h(1) / k^5 ) - 2*sum( H(3)*h(1) / k^3 ) - 3*sum( H(4)*h(1) / k^2 ) + 4*sum( h(1)^2 / k^5 ) | 7/4*z3*z4 + 4*z4*S[h(1) / k^2] - 4*z3*R1 + 5*z2*S[h(1) / k^4] - 4*ln2*S[h(2) / k^4] - 4*S[h(2) / k^5] - 5*S[h(1) / k^6] - 4*z4*S[h(1) / (2k-1)^2] - 4*S[h(1) / (k^4*(2k-1)^2)] + 4*S[H(4)*h(1) / (2k-1)^2] | IV (108) | family=helper
IV.109 | 7 | sum( H(4)*h(1) / (2k-1)^2 ) | -8255/182*z7 - 69/16*ln2*z6 + 279/8*z2*z5 + 31/4*z5 + 49/16*z3*z4 + 7/4*ln2*z3*z3 - 7/2*z2*z3 + 28*z3 + 12*ln2*z2 - 32*z2 + 1/2*z3*R1 + 4*R1 + 2*ln2*R2 - R4 + 2*R3 | IV fifth family (109) | family=5
IV.110 | 7 | sum( H(3)*h(2) / (2k-1)^2 ) | 4953/256*z7 - 31/4*z2*z5 - 31/2*z5 - 197/32*z3*z4 + 165/8*z4 + 35/4*z2*z3 - 63/2*z3 + 18*ln2*z2 - 4*R1 + 7/4*R4 | IV fifth family (110) | family=5
IV.111 | 7 | sum( H(1)*h(4) / (2k-1)^2 ) | 4953/1024*z7 - 351/128*ln2*z6 + 351/128*z6 - 93/128*z2*z5 - 155/32*z5 - 75/64*z3*z4 + 15/8*ln2*z4 + 7/32*ln2*z3*z3 - 7/32*z3*z3 + 9/8*z2*z3 | IV fifth family (111) | family=5
IV.112 | 7 | sum( h(1)*h(5) / (k^1*(2k-1)^1) ) | -4191/1024*z7 + 63/64*ln2*z6 + 73/32*z2*z5 - 31/32*ln2^2*z5 + 9/8*z3*z4 + 7/32*ln2*z3*z3 - 7/32*z3*R1 + 1/16*ln2*R2 + 7/32*R4 + 1/32*R3 | IV sixth family (112) | family=6
IV.116 | 7 | sum( h(1)*h(5) / (k^1*(2k-1)^1) ) | S[h(1) / (k^1*(2k-1)^6)] + 31/64*z5*S[H(1) / (k^1*(2k-1)^1)] - 15/64*z4*S[H(2) / (k^1*(2k-1)^1)] + 7/64*z3*S[H(3) / (k^1*(2k-1)^1)] - 3/64*z2*S[H(4) / (k^1*(2k-1)^1)] + 1/16*ln2*R2 + 1/32*S[h(1) / (k^6*(2k-1)^1)] - 1/16*S[h(1)^2 / k^5] + 1/32*R3 | IV (116) | family=helper
IV.117 | 7 | sum( h(3)*h(3) / (k^1*(2k-1)^1) ) | 6223/1024*z7 - 277/128*z2*z5 + 17/256*z3*z4 - 49/32*ln2*z3*z3 + 7/16*z3*R1 - 7/32*R4 | IV sixth family (117) | family=6
IV.119 | 7 | sum( h(3)*h(3) / (k^1*(2k-1)^1) ) | 7/8*z3*S[h(3) / (k^1*(2k-1)^1)] + S[h(3) / (k^1*(2k-1)^4)] - 2*S[h(1)*h(3) / (2k-1)^3] - 2*S[h(4) / (2k-1)^3] + S[H(1)*h(3) / (2k-1)^3] + 2*S[P[ h(1) / (2i-1)^3 ] / (2k-1)^3] - S[P[ H(1)[-1] / (2i-1)^3 ] / (2k-1)^3] | IV (119) | family=helper
IV.120 | 7 | sum( h(3)*h(3) / (k^1*(2k-1)^1) ) | 7/8*z3*S[h(3) / (k^1*(2k-1)^1)] + S[h(3) / (k^1*(2k-1)^4)] - 2*S[h(4) / (2k-1)^3] + 7/4*z3*S[h(1) / (2k-1)^3] + 2*S[h(1) / (2k-1)^6] - 7/8*z3*S[H(1)[-1] / (2k-1)^3] - S[H(1)[-1] / (2k-1)^6] - S[h(3) / (k^1*(2k-1)^3)] - 4*S[h(1)*h(3) / (2k-1)^3] + 2*S[H(1)*h(3) / (2k-1)^3] | IV (120) | family=helper
IV.121 | 7 | sum( h(2)*h(4) / (k^1*(2k-1)^1) ) | 889/256*z7 - 315/128*ln2*z6 + 45/128*z2*z5 - 45/64*z3*z4 | IV sixth family (121) | family=6
IV.123 | 7 | sum( P[ h(2) / (2i-1)^4 ] / (k^1*(2k-1)^1) ) | S[h(2)*h(4) / (k^1*(2k-1)^1)] + S[h(6) / (k^1*(2k-1)^1)] - S[P[ h(4) / (2i-1)^2 ] / (k^1*(2k-1)^1)] | IV (123) | family=helper
IV.124 | 7 | sum( H(1)*h(5) / (k^1*(2k-1)^1) ) | -8255/1024*z7 - 189/16*ln2*z6 + 441/64*z6 + 775/128*z2*z5 + 31/8*ln2^2*z5 - 31/8*ln2*z5 + 223/256*z3*z4 + 21/8*ln2*z3*z3 - 35/32*z3*z3 - 7/16*z3*R1 - 1/8*ln2*R2 + 1/8*R2 + 7/32*R4 | IV seventh family (124) | family=7
IV.126 | 7 | sum( P[ h(1) / (2i-1)^5 ] / (k^1*(2k-1)^1) ) | S[h(1)*h(5) / (k^1*(2k-1)^1)] + S[h(6) / (k^1*(2k-1)^1)] - 1/2*S[H(1)*h(5) / (k^1*(2k-1)^1)] + 1/2*S[P[ H(1) / (2i-1)^5 ] / (k^1*(2k-1)^1)] - 1/2*S[P[ h(5) / (i^1*(2i-1)^1) ] / (k^1*(2k-1)^1)] - 1/2*S[P[ 1 / (i^1*(2i-1)^5) ] / (k^1*(2k-1)^1)] | IV (126) | family=helper
IV.127 | 7 | sum( H(1)*h(5) / (k^1*(2k-1)^1) ) | S[h(1) / (k^1*(2k-1)^5)] - 1/2*S[H(1) / (k^1*(2k-1)^5)] - 2*ln2*S[h(1) / (2k-1)^5] - S[h(1) / (k^1*(2k-1)^6)] + 2*S[h(1)^2 / (2k-1)^5] + S[h(6) / (k^1*(2k-1)^1)] - ln2*S[h(5) / (k^1*(2k-1)^1)] + ln2*S[H(1) / (2k-1)^5] + 1/2*S[H(1) / (k^1*(2k-1)^6)] + 1/2*S[H(1)^2 / (2k-1)^5] - ln2*S[1 / (k^1*(2k-1)^5)] - 1/2*S[1 / (k^2*(2k-1)^6)] - 1/2*S[h(5) / (k^2*(2k-1)^2)] - 2*S[H(1)*h(1) / (2k-1)^5] + 2*S[h(1)*h(5) / (k^1*(2k-1)^1)] | IV (127) | family=helper sigma-restored
IV.128 | 7 | sum( H(2)*h(4) / (k^1*(2k-1)^1) ) | 2921/32*z7 + 885/32*ln2*z6 - 495/32*z6 - 1147/32*z2*z5 + 155/32*z5 - 51/2*z3*z4 - 15/2*ln2*z4 - 63/4*ln2*z3*z3 + 63/8*z3*z3 - 9/2*z2*z3 + 7/2*z3*R1 - 2*ln2*R2 + R2 - 7/2*R4 - 2*R3 | IV seventh family (128) | family=7
IV.130 | 7 | sum( P[ h(4) / i^2 ] / (k^1*(2k-1)^1) ) | S[H(2)*h(4) / (k^1*(2k-1)^1)] - S[P[ H(2)[-1] / (2i-1)^4 ] / (k^1*(2k-1)^1)] | IV (130) | family=helper
IV.131 | 7 | sum( H(3)*h(3) / (k^1*(2k-1)^1) ) | -2413/32*z7 - 135/4*ln2*z6 + 135/8*z6 + 31/2*z2*z5 - 93/2*z5 + 489/16*z3*z4 + 75/4*z4 + 21*ln2*z3*z3 - 91/8*z3*z3 + 21*z2*z3 - 14*ln2*z3 - 3/2*z3*R1 + 2*R1 + 6*ln2*R2 - 3*R2 + 3*R4 + 6*R3 | IV seventh family (131) | family=7
IV.133 | 7 | sum( P[ h(1) / i^3 ] / (2k-1)^3 ) | S[H(3)*h(1) / (2k-1)^3] - S[P[ H(3)[-1] / (2i-1)^1 ] / (2k-1)^3] | IV (133) | family=helper
IV.134 | 7 | sum( H(4)*h(2) / (k^1*(2k-1)^1) ) | 381/4*z7 + 159/8*ln2*z6 - 45/4*z6 - 31/8*z2*z5 + 62*z5 - 223/4*z3*z4 - 45/2*z4 - 7*ln2*z3*z3 + 7/2*z3*z3 - 35*z2*z3 + 42*z3 - 24*ln2*z2 - 2*z3*R1 + 8*R1 - 8*ln2*R2 + 4*R2 - 6*R4 - 8*R3 | IV seventh family (134) | family=7
IV.136 | 7 | sum( P[ h(2) / i^4 ] / (k^1*(2k-1)^1) ) | S[H(4)*h(2) / (k^1*(2k-1)^1)] - S[P[ H(4)[-1] / (2i-1)^2 ] / (k^1*(2k-1)^1)] | IV (136) | family=helper
IV.137 | 7 | sum( H(5)*h(1) / (k^1*(2k-1)^1) ) | -127/64*z7 - 209/8*z2*z5 - 31*z5 + 455/16*z3*z4 + 14*z2*z3 - 28*z3 + 32*z2 + z3*R1 - 8*R1 + 2*ln2*R2 - 2*R2 + 7/2*R4 + 2*R3 | IV seventh family (137) | family=7
IV.139 | 7 | sum( H(5)*h(1) / (k^1*(2k-1)^1) ) | S[P[ h(1) / i^5 ] / (k^1*(2k-1)^1)] + S[P[ H(5)[-1] / (2i-1)^1 ] / (k^1*(2k-1)^1)] | IV (139) | family=helper sigma-restored
IV.140 | 7 | sum( H(5)*h(1) / (k^1*(2k-1)^1) ) | ln2*R2 - 1/2*ln2*S[H(1) / k^5] - 1/4*S[H(1)^2 / k^5] - 1/2*S[H(5) / (k^1*(2k-1)^1)] + 1/4*S[H(5) / (k^2*(2k-1)^2)] - 1/2*S[H(1) / (k^1*(2k-1)^5)] + 1/4*S[H(6) / (k^1*(2k-1)^1)] - 1/4*S[H(1) / (k^6*(2k-1)^1)] + S[h(1) / (k^1*(2k-1)^5)] + 1/2*S[h(1) / (k^6*(2k-1)^1)] - ln2*S[1 / (k^1*(2k-1)^5)] - 1/2*S[h(1) / (k^2*(2k-1)^6)] - S[h(1)^2 / k^5] + R3 - S[H(1)*H(5) / (k^1*(2k-1)^1)] | IV (140) | family=helper
IV.141 | 7 | sum( h(1)^2 / k^5 ) | 4191/64*z7 - 155/8*z2*z5 - 343/16*z3*z4 - 7/2*R4 | IV eighth family (141) | family=8
IV.146 | 7 | sum( h(1)^2 / k^5 ) | 1/2*S[h(1) / k^6] + z4*S[h(1) / k^2] - z3*R1 + z2*S[h(1) / k^4] - R4 - S[H(4)*h(1) / k^2] + S[H(3)*h(1) / k^3] | IV (146) | family=helper sigma-restored
IV.147 | 7 | sum( h(1)*h(2) / k^4 ) | -6477/128*z7 + 155/8*z2*z5 + 371/32*z3*z4 + 7/2*R4 | IV eighth family (147) | family=8
IV.149 | 7 | 1/16*sum( h(1)*h(2) / k^4 ) - 1/16*sum( h(1)^2 / k^4 ) + 1/32*sum( H(1)*h(1) / k^4 ) | 3/8*z2*S[h(4) / (k^1*(2k-1)^1)] - 1/2*z2*S[h(1)*h(4) / (k^1*(2k-1)^1)] + 1/4*S[h(1)*h(4) / k^2] - 31/64*z5*S[1 / (k^1*(2k-1)^2)] - 15/64*z4*S[H(1)[-1] / (k^1*(2k-1)^2)] + 7/64*z3*S[H(2)[-1] / (k^1*(2k-1)^2)] - 3/64*z2*S[H(3)[-1] / (k^1*(2k-1)^2)] + 3/64*z2*S[h(1) / k^4] | IV (149) | family=helper rearranged
IV.150 | 7 | sum( h(1)*h(4) / k^2 ) | 315/128*z3*z4 - 7/8*z3*R1 + 1/4*S[h(1)*h(2) / k^4] | IV (150) | family=helper
IV.151 | 7 | sum( h(1)*h(3) / k^3 ) | -1905/128*z7 + 93/16*z2*z5 + 315/64*z3*z4 | IV eighth family (151) | family=8
IV.156 | 7 | 2*sum( h(1)*h(3) / k^3 ) | 1/2*S[h(3) / k^4] + z2*S[h(3) / k^2] + S[H(1)*h(3) / k^3] - S[H(2)*h(3) / k^2] - S[h(2)*h(2) / k^3] - S[P[ H(1)[-1] / (2i-1)^3 ] / k^3] - S[P[ h(3) / i^1 ] / k^3] | IV (156) | family=helper
IV.157 | 7 | sum( h(1)*h(3) / k^3 ) | 1/4*S[h(3) / k^4] + 1/2*z2*S[h(3) / k^2] - 1/2*S[H(2)*h(3) / k^2] + 1/2*S[h(2)*h(2) / k^3] | IV (157) | family=helper
IV.158 | 7 | sum( h(2)*h(2) / k^3 ) | 5207/128*z7 - 217/8*z2*z5 + 259/32*z3*z4 - 7/2*R4 | IV eighth family (158) | family=8
IV.159 | 7 | sum( h(2)*h(3) / k^2 ) | 16637/512*z7 - 217/32*z2*z5 - 973/64*z3*z4 + 7/8*z3*R1 - 7/8*R4 | IV eighth family (159) | family=8
IV.162 | 7 | -1/4*sum( h(1)*h(3) / k^3 ) - 1/4*sum( h(2)*h(3) / k^2 ) | 3/4*z2*S[h(3) / (2k+1)^2] + 9/32*z2*S[H(3)[-1] / (2k-1)^2] - 7/32*z3*S[H(2)[-1] / (2k-1)^2] - 9/64*z2*S[h(1) / k^4] - 3/32*z2*S[h(2) / k^3] + 3/16*S[h(1)*h(2) / k^4] + 1/8*S[h(2)*h(2) / k^3] - 3/8*z2*S[h(3) / k^2] | IV (162) | family=helper sigma-restored rearranged
IV.163 | 7 | sum( h(1)*h(4) / k^2 ) | -6477/512*z7 + 155/32*z2*z5 + 343/64*z3*z4 - 7/8*z3*R1 + 7/8*R4 | IV eighth family (163) | family=8

# numerical fit
Summary.164 | 7 | sum( H(2)*h(1) / k^4 ) | -1559/1943*z2*z5 + 1469/759*z3*z4 | Summary (164) | family=1 approx tol=5e-15

# ternary sums
A.165 | 4 | sum( H(1)^3 / (k^1*(2k-1)^1) ) | -37/8*z4 - 7*ln2*z3 + 7*z3 + 6*ln2^2*z2 - 12*ln2*z2 + 8*z2 + 16*ln2 - 24*ln2^2 + 16*ln2^3 - 4*ln2^4 + R1 | Appendix A (165) | family=ternary
A.166 | 4 | sum( h(1)^3 / (k^1*(2k-1)^1) ) | 57/64*z4 + 7/8*ln2*z3 + 9/4*ln2^2*z2 - 1/8*R1 | Appendix A (166) | family=ternary
A.167 | 4 | sum( H(1)^2*h(1) / (k^1*(2k-1)^1) ) | 1/4*z4 - 17/2*ln2*z3 + 17/2*z3 + 4*ln2^2*z2 - 8*ln2*z2 + 4*z2 + R1 | Appendix A (167) | family=ternary
A.168 | 5 | sum( H(1)*h(1)^2 / k^2 ) | 155/32*z5 + 7/8*z2*z3 | Appendix A (168) | family=ternary
A.169 | 5 | sum( h(1)^3 / (2k-1)^2 ) | -713/256*z5 + 249/64*ln2*z4 + 3/32*z2*z3 + ln2^3*z2 - 1/40*ln2^5 + 3*li5 | Appendix A (169) | family=ternary
A.170 | 6 | sum( H(1)^3 / (2k-1)^3 ) | 405/128*z6 - 93/4*ln2*z5 + 93/4*z5 + 135/8*ln2^2*z4 - 135/4*ln2*z4 - 7/32*z3*z3 + 21/4*ln2*z2*z3 - 21/4*z2*z3 - 7*ln2^3*z3 + 21*ln2^2*z3 + 21*ln2*z3 - 63/2*z3 - 18*ln2^2*z2 + 30*ln2*z2 - 6*z2 + 48*ln2 - 36*ln2^2 + 8*ln2^3 - 6*R1 + 3/4*R2 | Appendix A (170) | family=ternary
A.171 | 7 | sum( h(1)^3 / k^4 ) | 93/4*z2*z5 - 945/32*z3*z4 | Appendix A (171) | family=ternary
A.172 | 7 | sum( h(2)*h(1)^2 / k^3 ) | -93/8*z2*z5 + 525/32*z3*z4 | Appendix A (172) | family=ternary
A.173 | 7 | sum( h(1)^3 / (2k-1)^4 ) | 127/256*z7 + 441/512*ln2*z6 + 3/64*z2*z5 + 93/64*ln2^2*z5 - 195/512*z3*z4 + 15/16*ln2^3*z4 - 21/64*ln2*z3*z3 - 9/32*ln2^2*z2*z3 - 3/32*ln2*R2 - 3/64*R3 | Appendix A (173) | family=ternary
A.174 | 7 | sum( h(1)*h(2)*h(2) / k^2 ) | 1113/64*ln2*z6 - 1023/128*z2*z5 - 105/32*z3*z4 + 5/2*ln2^3*z4 - 21/4*ln2^2*z2*z3 - 1/10*ln2^5*z2 + 3/2*ln2*z2*R1 + 12*z2*li5 | Appendix A (174) | family=ternary
A.175 | 7 | sum( h(3)*h(1)^2 / k^2 ) | -1113/64*ln2*z6 + 1767/128*z2*z5 - 5/2*ln2^3*z4 + 21/4*ln2^2*z2*z3 + 1/10*ln2^5*z2 - 3/2*ln2*z2*R1 - 12*z2*li5 | Appendix A (175) | family=ternary
A.176 | 7 | sum( H(2)*h(1)^2 / k^3 ) | 15113/128*z7 - 155/4*z2*z5 - 1249/32*z3*z4 + 7/2*z3*R1 - 21/4*R4 | Appendix A (176) | family=ternary

# biquadratic sums
B.177 | 5 | sum( H(1)^4 / (k^1*(2k-1)^1) ) | -305/4*z5 + 47*ln2*z4 + 6*z4 - 3*z2*z3 - 56*ln2*z3 + 40*z3 - 32/3*ln2^3*z2 + 48*ln2^3*z2 - 48*ln2*z2 + 24*z2 + 32*ln2 - 64*ln2^2 + 64*ln2^3 - 32*ln2^4 + 88/15*ln2^5 + 8*R1 + 64*li5 | Appendix B (177) | family=biquadratic
B.178 | 7 | sum( H(1)^4 / (2k-1)^3 ) | 13081/128*z7 - 405/16*ln2*z6 + 405/16*z6 - 403/16*z2*z5 + 93*ln2^2*z5 - 186*ln2*z5 + 1643/4*z5 - 1141/32*z3*z4 - 45*ln2^3*z4 + 135*ln2^2*z4 - 318*ln2*z4 - 87*z4 + 7/4*ln2*z3*z3 - 7/4*z3*z3 - 21*ln2^2*z2*z3 + 42*ln2*z2*z3 - 35*z2*z3 + 14*ln2^4*z3 - 56*ln2^3*z3 + 84*ln2^2*z3 + 252*ln2*z3 - 94*z3 + 16*ln2^3*z2 - 120*ln2^2*z2 + 72*ln2*z2 + 24*z2 + 160*ln2 - 192*ln2^2 + 96*ln2^3 - 16*ln2^4 + 16/5*ln2^5 - 44*R1 - 6*ln2*R2 + 6*R2 - 3*R3 - 13/4*R4 - 384*li5 | Appendix B (178) | family=biquadratic
)CATALOG";

Rational H(int n, long k) { return harmonic_exact({Family::H, n, 1, 0}, k); }
Rational h(int n, long k) { return harmonic_exact({Family::h, n, 1, 0}, k); }

Rational finite_sum(long from, long to, const std::function<Rational(long)>& f) {
  Rational s = 0;
  for (long i = from; i <= to; ++i) s += f(i);
  return s;
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

// Accumulates "c*atom" terms into closed-form text.
class Rhs {
 public:
  Rhs& add(const Rational& c, const std::string& atom = "") {
    if (c == 0) return *this;
    Rational a = c;
    if (a < 0) {
      text_ += text_.empty() ? "-" : " - ";
      a = -a;
    } else if (!text_.empty()) {
      text_ += " + ";
    }
    if (atom.empty()) {
      text_ += to_string(a);
    } else {
      if (a != 1) text_ += to_string(a) + "*";
      text_ += atom;
    }
    return *this;
  }
  std::string str() const { return text_.empty() ? "0" : text_; }

 private:
  std::string text_;
};

std::string record(const std::string& id, const std::string& lhs, const Rhs& rhs, const std::string& source,
                   const std::string& attrs) {
  // Weight 0 asks the parser to derive the order from the lhs.
  return id + " | 0 | " + lhs + " | " + rhs.str() + " | " + source + " | family=helper" +
         (attrs.empty() ? "" : " " + attrs);
}

std::string off(long c) { return c >= 0 ? "+" + std::to_string(c) : std::to_string(c); }

void help_records(long p, std::vector<std::string>& out) {
  const std::string at = "@" + std::to_string(p);
  const std::string P = std::to_string(p);
  const std::string src = ", parameter " + P;

  // Shift of the summation index by p, n = 3.
  out.push_back(record("IV.53" + at, "sum( H(2)[" + off(p) + "] / (k" + off(p) + ")^3 )",
                       Rhs().add(1, "S[H(2) / k^3]").add(-finite_sum(1, p, [](long k) -> Rational { return H(2, k) / (k * k * k); })),
                       "IV (53)" + src + ", n = 3", "sigma-restored"));
  out.push_back(record("IV.55" + at, "sum( H(2)[" + off(p) + "] / ((k" + off(p) + ")^1*(k" + off(2 * p) + ")^1) )",
                       Rhs()
                           .add(1, "S[H(2) / (k^1*(k" + off(p) + ")^1)]")
                           .add(-finite_sum(1, p, [p](long k) -> Rational { return H(2, k) / (k * (p + k)); })),
                       "IV (55)" + src, ""));
  out.push_back(record("IV.56" + at, "sum( H(2) / (k^1*(k" + off(p) + ")^1) )",
                       Rhs()
                           .add(q(1, p), "z3")
                           .add(-q(1, p * p) + H(1, p) / p, "z2")
                           .add(-finite_sum(1, p - 1, [](long k) -> Rational { return H(1, k) / (k * k); }) / p),
                       "IV (56)" + src, ""));
  out.push_back(record("IV.64" + at, "sum( h(2) / (k" + off(p) + ")^2 )",
                       Rhs()
                           .add(1, "S[h(2) / k^2]")
                           .add(-4 * h(2, p), "z2")
                           .add(8 * h(3, p), "ln2")
                           .add(4 * finite_sum(1, p, [](long i) -> Rational { return H(1, i - 1) / ((2 * i - 1) * (2 * i - 1) * (2 * i - 1)); }))
                           .add(finite_sum(1, p, [](long i) -> Rational { return H(2, i - 1) / ((2 * i - 1) * (2 * i - 1)); })),
                       "IV (64)" + src, ""));
  out.push_back(record("IV.69" + at, "sum( h(1) / (k" + off(p) + ")^2 )",
                       Rhs()
                           .add(q(7, 4), "z3")
                           .add(h(1, p), "z2")
                           .add(-4 * h(2, p), "ln2")
                           .add(-2 * finite_sum(1, p, [](long i) -> Rational { return H(1, i - 1) / ((2 * i - 1) * (2 * i - 1)); }) -
                                H(2, p) * h(1, p) + finite_sum(1, p, [](long i) -> Rational { return h(1, i) / (i * i); })),
                       "IV (69)" + src, ""));
  out.push_back(record("IV.96" + at, "sum( H(1) / (2k" + off(2 * p - 1) + ")^2 )",
                       Rhs()
                           .add(q(1, 4) * h(1, p - 1), "z2")
                           .add(2 * h(2, p - 1), "ln2")
                           .add(H(1, p) / ((2 * p + 1) * (2 * p + 1)) - 2 * h(3, p - 1) - 2 * h(1, p - 1) * h(2, p - 1)),
                       "IV (96)" + src, ""));
  out.push_back(record("IV.97" + at, "sum( H(1) / ((2k-1)^1*(2k" + off(2 * p - 1) + ")^1) )",
                       Rhs()
                           .add(q(2, 2 * p - 1) - h(1, p) / p, "ln2")
                           .add(-h(1, p) / (p * (2 * p - 1)) + h(2, p) / (2 * p) + h(1, p) * h(1, p) / (2 * p)),
                       "IV (97)" + src, ""));
  out.push_back(record("IV.106" + at, "sum( h(1)[" + off(p) + "] / (k^1*(k" + off(p) + ")^1) )",
                       Rhs()
                           .add(-2 * h(1, p) / p, "ln2")
                           .add(h(2, p) / p + h(1, p) * h(1, p) / p + finite_sum(1, p, [](long i) -> Rational { return h(1, i) / i; }) / p),
                       "IV (106)" + src, ""));
  // The printed lhs lacks its summation; both readings of the ln2 sign are candidates.
  const Rational tail107 = -4 * finite_sum(1, p, [](long i) -> Rational { return h(1, i) / ((2 * i - 1) * (2 * i - 1)); });
  out.push_back(record("IV.107" + at, "sum( h(1)[" + off(p) + "] / k^2 )",
                       Rhs().add(q(7, 4), "z3").add(h(1, p), "z2").add(4 * h(2, p), "ln2").add(tail107),
                       "IV (107)" + src, "sigma-restored candidate"));
  out.push_back(record("IV.107b" + at, "sum( h(1)[" + off(p) + "] / k^2 )",
                       Rhs().add(q(7, 4), "z3").add(h(1, p), "z2").add(-4 * h(2, p), "ln2").add(tail107),
                       "IV (107)" + src, "sigma-restored candidate"));
  out.push_back(record("IV.113" + at, "sum( h(1)[" + off(p) + "] / (k^1*(2k-1)^1) )",
                       Rhs().add(1, "z2").add(2 * h(1, p), "ln2").add(
                           -finite_sum(1, p, [](long k) -> Rational { return h(1, k) / (k * (2 * k - 1)); })),
                       "IV (113)" + src, ""));
  out.push_back(record("IV.115" + at, "sum( h(1)[" + off(p) + "] / (2k-1)^5 )",
                       Rhs()
                           .add(1, "S[h(1) / (2k-1)^5]")
                           .add(q(31, 64) * H(1, p) - q(15, 64) * H(2, p) + q(7, 64) * H(3, p) - q(3, 64) * H(4, p), "z5")
                           .add(q(1, 32) * finite_sum(1, p, [](long k) -> Rational { return h(1, k) / (k * k * k * k * k); })),
                       "IV (115)" + src, "sigma-restored"));
  out.push_back(record("IV.160" + at, "sum( h(3) / (2k" + off(2 * p - 1) + ")^2 )",
                       Rhs()
                           .add(1, "S[h(3) / (2k+1)^2]")
                           .add(q(9, 32) * H(3, p - 1) - q(7, 32) * H(2, p - 1), "z2")
                           .add(-q(3, 16) * finite_sum(1, p - 1, [](long i) -> Rational { return h(1, i) / (i * i * i * i); }) -
                                q(1, 8) * finite_sum(1, p - 1, [](long i) -> Rational { return h(2, i) / (i * i * i); })),
                       "IV (160)" + src, ""));
}

const char* const kNotEncodable = "inner sum runs to infinity or depends on k beyond a prefix sum";

}  // namespace

std::string_view catalog_records() { return kRecords; }

std::vector<std::string> help_function_records() {
  std::vector<std::string> out;
  for (long p = 1; p <= 2; ++p) help_records(p, out);
  return out;
}

const std::vector<CoverageEntry>& coverage() {
  static const std::vector<CoverageEntry> table = [] {
    std::vector<CoverageEntry> t;
    auto add = [&t](std::initializer_list<int> ns, const std::string& kind, const std::string& note) {
      for (int n : ns) t.push_back({n, kind, note});
    };
    add({5, 6, 8, 10, 11, 13}, "entry", "order three");
    add({15, 16, 17, 19, 20, 22, 23, 25, 26, 28, 29, 30, 32, 33, 35, 36, 37, 39, 40}, "entry", "order five");
    add({42, 43, 44, 45, 46, 47, 48, 49}, "entry", "first family reductions");
    add({51, 58}, "entry", "summation signs restored");
    add({59, 60, 63, 67, 68, 71, 73, 74}, "entry", "derivation chain");
    add({75, 76, 77, 78, 79, 80, 81, 82, 83, 84, 85, 87, 88, 89, 90, 91, 92, 98, 99, 100, 101, 102, 103, 104, 108,
         109, 110, 111, 112, 116, 117, 119, 120, 121, 123, 124, 126, 127, 128, 130, 131, 133, 134, 136, 137, 139, 140,
         141, 146, 147, 149, 150, 151, 156, 157, 158, 159, 162, 163},
        "entry", "order seven");
    add({164}, "entry", "approximation");
    add({165, 166, 167, 168, 169, 170, 171, 172, 173, 174, 175, 176}, "entry", "ternary");
    add({177, 178}, "entry", "biquadratic");
    add({53, 55, 56, 64, 69, 96, 97, 106, 107, 113, 115, 160}, "help", "instantiated at parameter 1 and 2");
    add({50, 57, 118, 122, 125, 129, 132, 135, 138, 142, 152}, "finite", "exact rational check");
    add({7, 9, 12, 14, 18, 21, 24, 27, 31, 34, 38, 41}, "template", "generic family display");
    add({93}, "template", "expression without an equation");
    add({52, 54, 61, 62, 65, 66, 70, 72, 86, 94, 95, 105, 114, 143, 144, 145, 148, 153, 154, 155, 161},
        "not-encodable", kNotEncodable);
    std::sort(t.begin(), t.end(), [](const CoverageEntry& a, const CoverageEntry& b) { return a.number < b.number; });
    return t;
  }();
  return table;
}

}  // namespace eulersums::detail
