#pragma once

// Shared fixture algebras and diagram codes for the unit tests.

namespace fixtures {

// order-3 psyquandle: triangles x -> x+1, dots x -> x+2 (mod 3)
inline const char* psy3 = R"(psyquandle 3
2 2 2 2 2 2 3 3 3 3 3 3
3 3 3 3 3 3 1 1 1 1 1 1
1 1 1 1 1 1 2 2 2 2 2 2
)";

// order-4 psyquandle: triangles swap 2 and 3, dots are first-projections
inline const char* psy4 = R"(psyquandle 4
1 1 1 1  1 1 1 1  1 1 1 1  1 1 1 1
3 3 3 3  3 3 3 3  2 2 2 2  2 2 2 2
2 2 2 2  2 2 2 2  3 3 3 3  3 3 3 3
4 4 4 4  4 4 4 4  4 4 4 4  4 4 4 4
)";

// the triangle fragment of psy4
inline const char* biq4 = R"(biquandle 4
1 1 1 1  1 1 1 1
3 3 3 3  3 3 3 3
2 2 2 2  2 2 2 2
4 4 4 4  4 4 4 4
)";

// order-8 psyquandle (singular-link computations)
inline const char* psy8a = R"(psyquandle 8
1 4 2 3 3 2 1 4   1 1 1 1 1 1 1 1   1 4 2 3 1 1 1 1   1 1 1 1 3 2 1 4
3 2 4 1 4 1 2 3   2 2 2 2 2 2 2 2   3 2 4 1 2 2 2 2   2 2 2 2 4 1 2 3
4 1 3 2 1 4 3 2   3 3 3 3 3 3 3 3   4 1 3 2 3 3 3 3   3 3 3 3 1 4 3 2
2 3 1 4 2 3 4 1   4 4 4 4 4 4 4 4   2 3 1 4 4 4 4 4   4 4 4 4 2 3 4 1
8 8 8 8 5 5 5 5   5 5 5 5 5 5 5 5   5 5 5 5 5 5 5 5   8 8 8 8 5 5 5 5
5 5 5 5 6 6 6 6   6 6 6 6 6 6 6 6   6 6 6 6 6 6 6 6   5 5 5 5 6 6 6 6
7 7 7 7 7 7 7 7   7 7 7 7 7 7 7 7   7 7 7 7 7 7 7 7   7 7 7 7 7 7 7 7
6 6 6 6 8 8 8 8   8 8 8 8 8 8 8 8   8 8 8 8 8 8 8 8   6 6 6 6 8 8 8 8
)";

// order-8 pI-adequate psyquandle (pseudolink computations)
inline const char* psy8b = R"(psyquandle 8
1 4 2 3 3 2 1 4   1 1 1 1 1 1 1 1   1 1 1 1 4 3 1 2   1 4 2 3 4 3 1 2
3 2 4 1 4 1 2 3   2 2 2 2 2 2 2 2   2 2 2 2 3 4 2 1   3 2 4 1 3 4 2 1
4 1 3 2 1 4 3 2   3 3 3 3 3 3 3 3   3 3 3 3 2 1 3 4   4 1 3 2 2 1 3 4
2 3 1 4 2 3 4 1   4 4 4 4 4 4 4 4   4 4 4 4 1 2 4 3   2 3 1 4 1 2 4 3
8 8 8 8 5 5 5 5   5 5 5 5 5 5 5 5   6 6 6 6 5 7 8 6   6 6 6 6 5 7 8 6
5 5 5 5 6 6 6 6   6 6 6 6 6 6 6 6   8 8 8 8 8 6 5 7   8 8 8 8 8 6 5 7
7 7 7 7 7 7 7 7   7 7 7 7 7 7 7 7   7 7 7 7 6 8 7 5   7 7 7 7 6 8 7 5
6 6 6 6 8 8 8 8   8 8 8 8 8 8 8 8   5 5 5 5 7 5 6 8   5 5 5 5 7 5 6 8
)";

// order-4 biquandle (link-pair computations)
inline const char* biq4l = R"(biquandle 4
3 3 3 3   3 3 4 1
2 2 2 2   2 2 2 2
1 1 1 1   4 1 1 3
4 4 4 4   1 4 3 4
)";

inline const char* trefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
inline const char* trefoil_shadow = "Pa1+ Pb2+ Pa3+ Pb1+ Pa2+ Pb3+";
inline const char* bouquet_1l1 = "Sa1+ O2+\nSb1+ U2+\n";
inline const char* hopf = "O1+ U2+\nU1+ O2+\n";
inline const char* kink = "O1+ U1+";
inline const char* vtrefoil = "O1+ O2+ U1+ U2+";

} // namespace fixtures
