#pragma once

// Versioned torsion/group dataset consumed by tmf_groups.  Torsion is data,
// not computation: only tabulated degrees are populated, everything else
// reports "unknown".  Citations point at the table reproductions shipped with
// the verify subcommand (T1...T8).  Can be overridden at runtime through the
// TMF4D_DATASET_PATH environment variable (testing only).

namespace tmf4d::data {

inline constexpr const char* tmf_dataset_json = R"json({
  "version": "1.0",
  "periodicity": 576,
  "entries": [
    {"degree": 1,   "group": "Z/2",              "generators": ["eta"],                                              "citation": "relations: pi_1 tmf = Z/2 <eta>"},
    {"degree": 3,   "group": "Z/24",             "generators": ["nu"],                                               "citation": "relations: pi_3 tmf = Z/24 <nu>"},
    {"degree": -15, "group": "Z/2[x]",           "generators": ["eta*E4/Delta"],                                     "citation": "counterexample: pi_-15 TMF"},
    {"degree": 16,  "group": "Z[x]",             "generators": ["sigma(Y8 x Y8)"],                                   "citation": "T8 d=16"},
    {"degree": 17,  "group": "Z/2 + (Z/2)[x]",   "generators": ["sigma(SU(2) x G2)", "sigma(S1 x Y8 x Y8)"],         "citation": "T8 d=17"},
    {"degree": 18,  "group": "Z/2[x]",           "generators": ["sigma(T2 x Y8 x Y8)"],                              "citation": "T8 d=18"},
    {"degree": 19,  "group": "0",                "generators": [],                                                   "citation": "T8 d=19"},
    {"degree": 20,  "group": "Z/24 + Z[x]",      "generators": ["sigma(Sp(2) x Sp(2))", "sigma(Y8 x Y12)"],          "citation": "T8 d=20"},
    {"degree": 21,  "group": "Z/2",              "generators": ["sigma(Sp(2) x Sp(2) x U(1))"],                      "citation": "T8 d=21"},
    {"degree": 22,  "group": "Z/2",              "generators": ["sigma(SU(3) x G2)"],                                "citation": "T8 d=22"},
    {"degree": 23,  "group": "0",                "generators": [],                                                   "citation": "T8 d=23"},
    {"degree": 28,  "group": "Z/2 + Z[x]",       "generators": ["sigma(G2 x G2)", "sigma(Y8 x Y8 x Y12)"],           "citation": "T8 d=28"},
    {"degree": 29,  "group": "0",                "generators": [],                                                   "citation": "T8 d=29"},
    {"degree": 30,  "group": "Z/3",              "generators": ["sigma(Sp(2) x Sp(2) x Sp(2))"],                     "citation": "T8 d=30"},
    {"degree": 31,  "group": "0",                "generators": [],                                                   "citation": "T8 d=31"},
    {"degree": 34,  "group": "Z/2 + (Z/2)[x]",   "generators": ["sigma(Sp(2) x Sp(2) x G2)", "sigma(T2 x Y32)"],     "citation": "T8 d=34"},
    {"degree": -21, "group": "0",                "generators": [],                                                   "citation": "T8 d=-21"},
    {"degree": -22, "group": "(Z/2)[x]",         "generators": ["sigma(U(1)) x T_(B2;-23)"],                         "citation": "T8 d=-22"},
    {"degree": -23, "group": "(Z/2)[x]",         "generators": ["T_(B2;-23)", "8*eta/Delta"],                        "citation": "T8 d=-23"},
    {"degree": -45, "group": "Z/24",             "generators": ["T_(B22;1)", "nu/Delta^2"],                          "citation": "T8 d=-45"}
  ],
  "toy_images": [
    {"name": "F_n",      "b2_plus": 1,  "b2_minus": 1,  "degree": 1,   "element": "eta",          "citation": "T1 row F_n"},
    {"name": "-E8",      "b2_plus": 0,  "b2_minus": 8,  "degree": -16, "element": "E4/Delta",     "citation": "T1 row -E8"},
    {"name": "CP2",      "b2_plus": 1,  "b2_minus": 0,  "degree": 3,   "element": "nu",           "citation": "T1 row CP2"},
    {"name": "CP2bar",   "b2_plus": 0,  "b2_minus": 1,  "degree": -2,  "element": "0",            "citation": "T1 row CP2bar"},
    {"name": "K3",       "b2_plus": 3,  "b2_minus": 19, "degree": -29, "element": "0",            "citation": "T1 row K3"},
    {"name": "K3bar",    "b2_plus": 19, "b2_minus": 3,  "degree": 51,  "element": "nu*Delta^2",   "citation": "T1 row K3bar"},
    {"name": "halfK3",   "b2_plus": 1,  "b2_minus": 9,  "degree": -15, "element": "eta*E4/Delta", "citation": "T1 row halfK3, E(1)"},
    {"name": "halfK3bar","b2_plus": 9,  "b2_minus": 1,  "degree": 25,  "element": "eta*Delta",    "citation": "T1 row halfK3bar"}
  ]
})json";

} // namespace tmf4d::data
