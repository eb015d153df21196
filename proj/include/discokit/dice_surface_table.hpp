#pragma once

#include <array>
#include <cstdint>

namespace discokit::data {

struct IntegerTerm3 {
    int e1, e2, e3;
    std::int64_t coef;
};

/// Defining polynomial of the dice surface, integer coefficients with gcd 1, grlex order.
inline constexpr std::array<IntegerTerm3, 455> dice_surface_terms{{
    {0, 0, 0, 16},
    {2, 0, 0, -160},
    {0, 2, 0, -160},
    {0, 0, 2, -160},
    {4, 0, 0, 728},
    {2, 2, 0, 400},
    {2, 0, 2, 400},
    {0, 4, 0, 728},
    {0, 2, 2, 400},
    {0, 0, 4, 728},
    {6, 0, 0, -1992},
    {4, 2, 0, 456},
    {4, 0, 2, 456},
    {2, 4, 0, 456},
    {2, 2, 2, 14512},
    {2, 0, 4, 456},
    {0, 6, 0, -1992},
    {0, 4, 2, 456},
    {0, 2, 4, 456},
    {0, 0, 6, -1992},
    {8, 0, 0, 3649},
    {6, 2, 0, -2436},
    {6, 0, 2, -2436},
    {4, 4, 0, -10106},
    {4, 2, 2, -14972},
    {4, 0, 4, -10106},
    {2, 6, 0, -2436},
    {2, 4, 2, -14972},
    {2, 2, 4, -14972},
    {2, 0, 6, -2436},
    {0, 8, 0, 3649},
    {0, 6, 2, -2436},
    {0, 4, 4, -10106},
    {0, 2, 6, -2436},
    {0, 0, 8, 3649},
    {10, 0, 0, -4712},
    {8, 2, 0, 2232},
    {8, 0, 2, 2232},
    {6, 4, 0, 19888},
    {6, 2, 2, 47040},
    {6, 0, 4, 19888},
    {4, 6, 0, 19888},
    {4, 4, 2, -239856},
    {4, 2, 4, -239856},
    {4, 0, 6, 19888},
    {2, 8, 0, 2232},
    {2, 6, 2, 47040},
    {2, 4, 4, -239856},
    {2, 2, 6, 47040},
    {2, 0, 8, 2232},
    {0, 10, 0, -4712},
    {0, 8, 2, 2232},
    {0, 6, 4, 19888},
    {0, 4, 6, 19888},
    {0, 2, 8, 2232},
    {0, 0, 10, -4712},
    {12, 0, 0, 4396},
    {10, 2, 0, 1576},
    {10, 0, 2, 1576},
    {8, 4, 0, -11820},
    {8, 2, 2, -114712},
    {8, 0, 4, -11820},
    {6, 6, 0, -19024},
    {6, 4, 2, 279536},
    {6, 2, 4, 279536},
    {6, 0, 6, -19024},
    {4, 8, 0, -11820},
    {4, 6, 2, 279536},
    {4, 4, 4, -2237832},
    {4, 2, 6, 279536},
    {4, 0, 8, -11820},
    {2, 10, 0, 1576},
    {2, 8, 2, -114712},
    {2, 6, 4, 279536},
    {2, 4, 6, 279536},
    {2, 2, 8, -114712},
    {2, 0, 10, 1576},
    {0, 12, 0, 4396},
    {0, 10, 2, 1576},
    {0, 8, 4, -11820},
    {0, 6, 6, -19024},
    {0, 4, 8, -11820},
    {0, 2, 10, 1576},
    {0, 0, 12, 4396},
    {14, 0, 0, -2984},
    {12, 2, 0, -4888},
    {12, 0, 2, -4888},
    {10, 4, 0, -6088},
    {10, 2, 2, 118672},
    {10, 0, 4, -6088},
    {8, 6, 0, -10616},
    {8, 4, 2, -74728},
    {8, 2, 4, -74728},
    {8, 0, 6, -10616},
    {6, 8, 0, -10616},
    {6, 6, 2, 157408},
    {6, 4, 4, -465488},
    {6, 2, 6, 157408},
    {6, 0, 8, -10616},
    {4, 10, 0, -6088},
    {4, 8, 2, -74728},
    {4, 6, 4, -465488},
    {4, 4, 6, -465488},
    {4, 2, 8, -74728},
    {4, 0, 10, -6088},
    {2, 12, 0, -4888},
    {2, 10, 2, 118672},
    {2, 8, 4, -74728},
    {2, 6, 6, 157408},
    {2, 4, 8, -74728},
    {2, 2, 10, 118672},
    {2, 0, 12, -4888},
    {0, 14, 0, -2984},
    {0, 12, 2, -4888},
    {0, 10, 4, -6088},
    {0, 8, 6, -10616},
    {0, 6, 8, -10616},
    {0, 4, 10, -6088},
    {0, 2, 12, -4888},
    {0, 0, 14, -2984},
    {16, 0, 0, 1462},
    {14, 2, 0, 4480},
    {14, 0, 2, 4480},
    {12, 4, 0, 12072},
    {12, 2, 2, -61696},
    {12, 0, 4, 12072},
    {10, 6, 0, 25216},
    {10, 4, 2, -38912},
    {10, 2, 4, -38912},
    {10, 0, 6, 25216},
    {8, 8, 0, 32324},
    {8, 6, 2, -305280},
    {8, 4, 4, 1075672},
    {8, 2, 6, -305280},
    {8, 0, 8, 32324},
    {6, 10, 0, 25216},
    {6, 8, 2, -305280},
    {6, 6, 4, -660480},
    {6, 4, 6, -660480},
    {6, 2, 8, -305280},
    {6, 0, 10, 25216},
    {4, 12, 0, 12072},
    {4, 10, 2, -38912},
    {4, 8, 4, 1075672},
    {4, 6, 6, -660480},
    {4, 4, 8, 1075672},
    {4, 2, 10, -38912},
    {4, 0, 12, 12072},
    {2, 14, 0, 4480},
    {2, 12, 2, -61696},
    {2, 10, 4, -38912},
    {2, 8, 6, -305280},
    {2, 6, 8, -305280},
    {2, 4, 10, -38912},
    {2, 2, 12, -61696},
    {2, 0, 14, 4480},
    {0, 16, 0, 1462},
    {0, 14, 2, 4480},
    {0, 12, 4, 12072},
    {0, 10, 6, 25216},
    {0, 8, 8, 32324},
    {0, 6, 10, 25216},
    {0, 4, 12, 12072},
    {0, 2, 14, 4480},
    {0, 0, 16, 1462},
    {18, 0, 0, -504},
    {16, 2, 0, -2168},
    {16, 0, 2, -2168},
    {14, 4, 0, -6560},
    {14, 2, 2, 17120},
    {14, 0, 4, -6560},
    {12, 6, 0, -13472},
    {12, 4, 2, 35744},
    {12, 2, 4, 35744},
    {12, 0, 6, -13472},
    {10, 8, 0, -18256},
    {10, 6, 2, 140576},
    {10, 4, 4, -223776},
    {10, 2, 6, 140576},
    {10, 0, 8, -18256},
    {8, 10, 0, -18256},
    {8, 8, 2, -13904},
    {8, 6, 4, -246752},
    {8, 4, 6, -246752},
    {8, 2, 8, -13904},
    {8, 0, 10, -18256},
    {6, 12, 0, -13472},
    {6, 10, 2, 140576},
    {6, 8, 4, -246752},
    {6, 6, 6, 1285312},
    {6, 4, 8, -246752},
    {6, 2, 10, 140576},
    {6, 0, 12, -13472},
    {4, 14, 0, -6560},
    {4, 12, 2, 35744},
    {4, 10, 4, -223776},
    {4, 8, 6, -246752},
    {4, 6, 8, -246752},
    {4, 4, 10, -223776},
    {4, 2, 12, 35744},
    {4, 0, 14, -6560},
    {2, 16, 0, -2168},
    {2, 14, 2, 17120},
    {2, 12, 4, 35744},
    {2, 10, 6, 140576},
    {2, 8, 8, -13904},
    {2, 6, 10, 140576},
    {2, 4, 12, 35744},
    {2, 2, 14, 17120},
    {2, 0, 16, -2168},
    {0, 18, 0, -504},
    {0, 16, 2, -2168},
    {0, 14, 4, -6560},
    {0, 12, 6, -13472},
    {0, 10, 8, -18256},
    {0, 8, 10, -18256},
    {0, 6, 12, -13472},
    {0, 4, 14, -6560},
    {0, 2, 16, -2168},
    {0, 0, 18, -504},
    {20, 0, 0, 116},
    {18, 2, 0, 584},
    {18, 0, 2, 584},
    {16, 4, 0, 1572},
    {16, 2, 2, -2328},
    {16, 0, 4, 1572},
    {14, 6, 0, 2528},
    {14, 4, 2, -8768},
    {14, 2, 4, -8768},
    {14, 0, 6, 2528},
    {12, 8, 0, 2408},
    {12, 6, 2, -14208},
    {12, 4, 4, 15472},
    {12, 2, 6, -14208},
    {12, 0, 8, 2408},
    {10, 10, 0, 1968},
    {10, 8, 2, -20336},
    {10, 6, 4, 23616},
    {10, 4, 6, 23616},
    {10, 2, 8, -20336},
    {10, 0, 10, 1968},
    {8, 12, 0, 2408},
    {8, 10, 2, -20336},
    {8, 8, 4, 192216},
    {8, 6, 6, -127136},
    {8, 4, 8, 192216},
    {8, 2, 10, -20336},
    {8, 0, 12, 2408},
    {6, 14, 0, 2528},
    {6, 12, 2, -14208},
    {6, 10, 4, 23616},
    {6, 8, 6, -127136},
    {6, 6, 8, -127136},
    {6, 4, 10, 23616},
    {6, 2, 12, -14208},
    {6, 0, 14, 2528},
    {4, 16, 0, 1572},
    {4, 14, 2, -8768},
    {4, 12, 4, 15472},
    {4, 10, 6, 23616},
    {4, 8, 8, 192216},
    {4, 6, 10, 23616},
    {4, 4, 12, 15472},
    {4, 2, 14, -8768},
    {4, 0, 16, 1572},
    {2, 18, 0, 584},
    {2, 16, 2, -2328},
    {2, 14, 4, -8768},
    {2, 12, 6, -14208},
    {2, 10, 8, -20336},
    {2, 8, 10, -20336},
    {2, 6, 12, -14208},
    {2, 4, 14, -8768},
    {2, 2, 16, -2328},
    {2, 0, 18, 584},
    {0, 20, 0, 116},
    {0, 18, 2, 584},
    {0, 16, 4, 1572},
    {0, 14, 6, 2528},
    {0, 12, 8, 2408},
    {0, 10, 10, 1968},
    {0, 8, 12, 2408},
    {0, 6, 14, 2528},
    {0, 4, 16, 1572},
    {0, 2, 18, 584},
    {0, 0, 20, 116},
    {22, 0, 0, -16},
    {20, 2, 0, -80},
    {20, 0, 2, -80},
    {18, 4, 0, -144},
    {18, 2, 2, 32},
    {18, 0, 4, -144},
    {16, 6, 0, -80},
    {16, 4, 2, -16},
    {16, 2, 4, -16},
    {16, 0, 6, -80},
    {14, 8, 0, 96},
    {14, 6, 2, 384},
    {14, 4, 4, 832},
    {14, 2, 6, 384},
    {14, 0, 8, 96},
    {12, 10, 0, 224},
    {12, 8, 2, 4192},
    {12, 6, 4, -1984},
    {12, 4, 6, -1984},
    {12, 2, 8, 4192},
    {12, 0, 10, 224},
    {10, 12, 0, 224},
    {10, 10, 2, 7360},
    {10, 8, 4, -8928},
    {10, 6, 6, 26240},
    {10, 4, 8, -8928},
    {10, 2, 10, 7360},
    {10, 0, 12, 224},
    {8, 14, 0, 96},
    {8, 12, 2, 4192},
    {8, 10, 4, -8928},
    {8, 8, 6, 8224},
    {8, 6, 8, 8224},
    {8, 4, 10, -8928},
    {8, 2, 12, 4192},
    {8, 0, 14, 96},
    {6, 16, 0, -80},
    {6, 14, 2, 384},
    {6, 12, 4, -1984},
    {6, 10, 6, 26240},
    {6, 8, 8, 8224},
    {6, 6, 10, 26240},
    {6, 4, 12, -1984},
    {6, 2, 14, 384},
    {6, 0, 16, -80},
    {4, 18, 0, -144},
    {4, 16, 2, -16},
    {4, 14, 4, 832},
    {4, 12, 6, -1984},
    {4, 10, 8, -8928},
    {4, 8, 10, -8928},
    {4, 6, 12, -1984},
    {4, 4, 14, 832},
    {4, 2, 16, -16},
    {4, 0, 18, -144},
    {2, 20, 0, -80},
    {2, 18, 2, 32},
    {2, 16, 4, -16},
    {2, 14, 6, 384},
    {2, 12, 8, 4192},
    {2, 10, 10, 7360},
    {2, 8, 12, 4192},
    {2, 6, 14, 384},
    {2, 4, 16, -16},
    {2, 2, 18, 32},
    {2, 0, 20, -80},
    {0, 22, 0, -16},
    {0, 20, 2, -80},
    {0, 18, 4, -144},
    {0, 16, 6, -80},
    {0, 14, 8, 96},
    {0, 12, 10, 224},
    {0, 10, 12, 224},
    {0, 8, 14, 96},
    {0, 6, 16, -80},
    {0, 4, 18, -144},
    {0, 2, 20, -80},
    {0, 0, 22, -16},
    {24, 0, 0, 1},
    {22, 2, 0, 4},
    {22, 0, 2, 4},
    {20, 4, 0, 2},
    {20, 2, 2, 28},
    {20, 0, 4, 2},
    {18, 6, 0, -12},
    {18, 4, 2, 76},
    {18, 2, 4, 76},
    {18, 0, 6, -12},
    {16, 8, 0, -17},
    {16, 6, 2, 84},
    {16, 4, 4, 218},
    {16, 2, 6, 84},
    {16, 0, 8, -17},
    {14, 10, 0, 8},
    {14, 8, 2, -24},
    {14, 6, 4, 400},
    {14, 4, 6, 400},
    {14, 2, 8, -24},
    {14, 0, 10, 8},
    {12, 12, 0, 28},
    {12, 10, 2, -168},
    {12, 8, 4, 804},
    {12, 6, 6, 464},
    {12, 4, 8, 804},
    {12, 2, 10, -168},
    {12, 0, 12, 28},
    {10, 14, 0, 8},
    {10, 12, 2, -168},
    {10, 10, 4, 1096},
    {10, 8, 6, 88},
    {10, 6, 8, 88},
    {10, 4, 10, 1096},
    {10, 2, 12, -168},
    {10, 0, 14, 8},
    {8, 16, 0, -17},
    {8, 14, 2, -24},
    {8, 12, 4, 804},
    {8, 10, 6, 88},
    {8, 8, 8, 2650},
    {8, 6, 10, 88},
    {8, 4, 12, 804},
    {8, 2, 14, -24},
    {8, 0, 16, -17},
    {6, 18, 0, -12},
    {6, 16, 2, 84},
    {6, 14, 4, 400},
    {6, 12, 6, 464},
    {6, 10, 8, 88},
    {6, 8, 10, 88},
    {6, 6, 12, 464},
    {6, 4, 14, 400},
    {6, 2, 16, 84},
    {6, 0, 18, -12},
    {4, 20, 0, 2},
    {4, 18, 2, 76},
    {4, 16, 4, 218},
    {4, 14, 6, 400},
    {4, 12, 8, 804},
    {4, 10, 10, 1096},
    {4, 8, 12, 804},
    {4, 6, 14, 400},
    {4, 4, 16, 218},
    {4, 2, 18, 76},
    {4, 0, 20, 2},
    {2, 22, 0, 4},
    {2, 20, 2, 28},
    {2, 18, 4, 76},
    {2, 16, 6, 84},
    {2, 14, 8, -24},
    {2, 12, 10, -168},
    {2, 10, 12, -168},
    {2, 8, 14, -24},
    {2, 6, 16, 84},
    {2, 4, 18, 76},
    {2, 2, 20, 28},
    {2, 0, 22, 4},
    {0, 24, 0, 1},
    {0, 22, 2, 4},
    {0, 20, 4, 2},
    {0, 18, 6, -12},
    {0, 16, 8, -17},
    {0, 14, 10, 8},
    {0, 12, 12, 28},
    {0, 10, 14, 8},
    {0, 8, 16, -17},
    {0, 6, 18, -12},
    {0, 4, 20, 2},
    {0, 2, 22, 4},
    {0, 0, 24, 1},
}};

}  // namespace discokit::data
