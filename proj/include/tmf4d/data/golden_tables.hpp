#pragma once

// Frozen expected values for the verification tables T1..T7 (T8 lives in
// tmf_dataset.hpp).  Citations use the tool's own table/row ids as printed by
// `verify --table N`.  Row fields:
//   expr / direct    manifold expression for the catalog constructor route
//   left/right/genus fiber-sum route factors (formula tables)
//   generator        printed polynomial-ring generator (monomial syntax)
//   match            "exact" (default): canonical form must print identically;
//                    "up_to_j": printed form is a non-canonical representative
//   alternates       further printed representatives, compared up to j

namespace tmf4d::data {

inline constexpr const char* golden_tables_json = R"json({
  "T1": {
    "title": "toy degrees d = 3 b2+ - 2 b2- and images",
    "rows": [
      {"label": "F_n", "expr": "F(0)", "degree": 1, "element": "eta", "citation": "T1 row F_n"},
      {"label": "-E8", "expr": "minusE8", "degree": -16, "element": "E4/Delta", "citation": "T1 row -E8"},
      {"label": "CP2", "expr": "CP2", "degree": 3, "element": "nu", "citation": "T1 row CP2"},
      {"label": "CP2bar", "expr": "CP2bar", "degree": -2, "element": "0", "citation": "T1 row CP2bar"},
      {"label": "K3", "expr": "K3", "degree": -29, "element": "0", "citation": "T1 row K3"},
      {"label": "K3bar", "expr": "K3bar", "degree": 51, "element": "nu*Delta^2", "citation": "T1 row K3bar"},
      {"label": "halfK3, E(1)", "expr": "halfK3", "degree": -15, "element": "eta*E4/Delta", "citation": "T1 row halfK3"},
      {"label": "halfK3bar", "expr": "rev(halfK3)", "degree": 25, "element": "eta*Delta", "citation": "T1 row halfK3bar"}
    ]
  },
  "T2": {
    "title": "hyper generators H(X) for E(2r) and reversals",
    "theory": "hyper",
    "rows": [
      {"label": "E(2)", "expr": "E(2)", "degree": 4, "generator": "2*E4^2*E6/Delta", "citation": "T2 row E(2)"},
      {"label": "E(4)", "expr": "E(4)", "degree": 8, "generator": "E4", "citation": "T2 row E(4)"},
      {"label": "E(6)", "expr": "E(6)", "degree": 12, "generator": "2*E6", "citation": "T2 row E(6)"},
      {"label": "E(20)", "expr": "E(20)", "degree": 40, "generator": "E4^2*Delta", "citation": "T2 row E(20)"},
      {"label": "E(22)", "expr": "E(22)", "degree": 44, "generator": "2*E4*E6*Delta", "citation": "T2 row E(22)"},
      {"label": "E(24)", "expr": "E(24)", "degree": 48, "generator": "12*Delta^2", "alternates": ["j^2*Delta^2"], "citation": "T2 row E(24)"},
      {"label": "rev(E(2))", "expr": "rev(E(2))", "degree": -4, "generator": "2*E4*E6/Delta", "citation": "T2 row rev(E(2))"},
      {"label": "rev(E(4))", "expr": "rev(E(4))", "degree": -8, "generator": "E4^2/Delta", "citation": "T2 row rev(E(4))"},
      {"label": "rev(E(6))", "expr": "rev(E(6))", "degree": -12, "generator": "2*E6/Delta", "citation": "T2 row rev(E(6))"}
    ]
  },
  "T3": {
    "title": "hyper generators for Z(r;2,n) and V(r;n) fiber sums",
    "theory": "hyper",
    "base": [
      {"label": "X(2,3)", "expr": "X(2,3)", "degree": -16, "generator": "E4/Delta", "citation": "T3 caption X(2,3)"},
      {"label": "Xn(3)", "expr": "Xn(3)", "degree": -16, "generator": "E4/Delta", "citation": "T3 caption Xn(3)"},
      {"label": "X(2,5)", "expr": "X(2,5)", "degree": -80, "generator": "E4^2/Delta^4", "citation": "T3 caption X(2,5)"},
      {"label": "Xn(5)", "expr": "Xn(5)", "degree": -80, "generator": "E4^2/Delta^4", "citation": "T3 caption Xn(5)"}
    ],
    "rows": [
      {"label": "Z(3;2,3)", "direct": "Z(3;2,3)", "left": "X(2,3)", "right": "EK(6)", "genus": 25, "degree": -4, "generator": "2*E4*E6/Delta", "citation": "T3 row Z(3;2,3)"},
      {"label": "V(3;3)", "direct": "V(3;3)", "left": "Xn(3)", "right": "EK(6)", "genus": 28, "degree": -4, "generator": "2*E4*E6/Delta", "citation": "T3 row V(3;3)"},
      {"label": "Z(2;2,3)", "direct": "Z(2;2,3)", "left": "X(2,3)", "right": "EK(4)", "genus": 25, "degree": -8, "generator": "E4^2/Delta", "citation": "T3 row Z(2;2,3)"},
      {"label": "V(2;3)", "direct": "V(2;3)", "left": "Xn(3)", "right": "EK(4)", "genus": 28, "degree": -8, "generator": "E4^2/Delta", "citation": "T3 row V(2;3)"},
      {"label": "Z(1;2,3)", "direct": "Z(1;2,3)", "left": "X(2,3)", "right": "EK(2)", "genus": 25, "degree": -12, "generator": "2*E6/Delta", "citation": "T3 row Z(1;2,3)"},
      {"label": "V(1;3)", "direct": "V(1;3)", "left": "Xn(3)", "right": "EK(2)", "genus": 28, "degree": -12, "generator": "2*E6/Delta", "citation": "T3 row V(1;3)"},
      {"label": "V(16;5)", "direct": "V(16;5)", "left": "Xn(5)", "right": "EK(32)", "genus": 66, "degree": -16, "generator": "E4/Delta", "citation": "T3 row V(16;5)"},
      {"label": "Z(12;2,5)", "direct": "Z(12;2,5)", "left": "X(2,5)", "right": "EK(24)", "genus": 61, "degree": -32, "generator": "E4^2/Delta^2", "citation": "T3 row Z(12;2,5)"},
      {"label": "Z(11;2,5)", "direct": "Z(11;2,5)", "left": "X(2,5)", "right": "EK(22)", "genus": 61, "degree": -36, "generator": "2*E6/Delta^2", "citation": "T3 row Z(11;2,5)"},
      {"label": "Z(10;2,5)", "direct": "Z(10;2,5)", "left": "X(2,5)", "right": "EK(20)", "genus": 61, "degree": -40, "generator": "E4/Delta^2", "citation": "T3 row Z(10;2,5)"},
      {"label": "V(10;5)", "direct": "V(10;5)", "left": "Xn(5)", "right": "EK(20)", "genus": 66, "degree": -40, "generator": "E4/Delta^2", "citation": "T3 row V(10;5)"}
    ]
  },
  "T4": {
    "title": "hyper generators for Z(k,m)_n",
    "theory": "hyper",
    "rows": [
      {"label": "Z(1,1)", "expr": "Zkm(1,1)", "degree": 8, "generator": "E4", "citation": "T4 row Z(1,1)"},
      {"label": "Z(1,3)", "expr": "Zkm(1,3)", "degree": 12, "generator": "2*E6", "citation": "T4 row Z(1,3)"},
      {"label": "Z(3,3)", "expr": "Zkm(3,3)", "degree": 16, "generator": "E4^2", "citation": "T4 row Z(3,3)"},
      {"label": "Z(1,7)", "expr": "Zkm(1,7)", "degree": 20, "generator": "2*E4*E6", "citation": "T4 row Z(1,7)"},
      {"label": "Z(3,11)", "expr": "Zkm(3,11)", "degree": 32, "generator": "E4*Delta", "citation": "T4 row Z(3,11)"}
    ]
  },
  "T5": {
    "title": "vector generators V(X) for E(2r) and Z(r;2,n)",
    "theory": "vector",
    "elliptic": [
      {"label": "E(4)", "expr": "E(4)", "degree": -8, "generator": "E4^2/Delta", "citation": "T5 row E(4)"},
      {"label": "E(6)", "expr": "E(6)", "degree": -12, "generator": "2*E6/Delta", "citation": "T5 row E(6)"},
      {"label": "E(8)", "expr": "E(8)", "degree": -16, "generator": "E4/Delta", "citation": "T5 row E(8)"},
      {"label": "E(20)", "expr": "E(20)", "degree": -40, "generator": "E4/Delta^2", "citation": "T5 row E(20)"},
      {"label": "E(24)", "expr": "E(24)", "degree": -48, "generator": "E4^3/Delta^3", "match": "up_to_j", "citation": "T5 row E(24)"},
      {"label": "E(26)", "expr": "E(26)", "degree": -52, "generator": "2*E4*E6/Delta^3", "citation": "T5 row E(26)"},
      {"label": "E(28)", "expr": "E(28)", "degree": -56, "generator": "E4^2/Delta^3", "citation": "T5 row E(28)"}
    ],
    "rows": [
      {"label": "Z(2;2,3)", "direct": "Z(2;2,3)", "left": "X(2,3)", "right": "EK(4)", "genus": 25, "n": 3, "r": 2, "degree": -268, "generator": "2*E4*E6/Delta^12", "citation": "T5 row Z(2;2,3)"},
      {"label": "Z(3;2,3)", "direct": "Z(3;2,3)", "left": "X(2,3)", "right": "EK(6)", "genus": 25, "n": 3, "r": 3, "degree": -272, "generator": "E4^2/Delta^12", "citation": "T5 row Z(3;2,3)"},
      {"label": "Z(4;2,3)", "direct": "Z(4;2,3)", "left": "X(2,3)", "right": "EK(8)", "genus": 25, "n": 3, "r": 4, "degree": -276, "generator": "2*E6/Delta^12", "citation": "T5 row Z(4;2,3)"},
      {"label": "Z(10;2,5)", "direct": "Z(10;2,5)", "left": "X(2,5)", "right": "EK(20)", "genus": 61, "n": 5, "r": 10, "degree": -1220, "generator": "2*E4^2*E6/Delta^52", "citation": "T5 row Z(10;2,5)"},
      {"label": "Z(12;2,5)", "direct": "Z(12;2,5)", "left": "X(2,5)", "right": "EK(24)", "genus": 61, "n": 5, "r": 12, "degree": -1228, "generator": "2*E4*E6/Delta^52", "citation": "T5 row Z(12;2,5)"},
      {"label": "Z(13;2,5)", "direct": "Z(13;2,5)", "left": "X(2,5)", "right": "EK(26)", "genus": 61, "n": 5, "r": 13, "degree": -1232, "generator": "E4^2/Delta^52", "citation": "T5 row Z(13;2,5)"},
      {"label": "Z(15;2,5)", "direct": "Z(15;2,5)", "left": "X(2,5)", "right": "EK(30)", "genus": 61, "n": 5, "r": 15, "degree": -1240, "generator": "E4/Delta^52", "note": "construction column prints E(28)_K; r=15 and the degree force E(30)_K", "citation": "T5 row Z(15;2,5)"}
    ]
  },
  "T6": {
    "title": "E-string generators E(X) for E(2r)",
    "theory": "estring",
    "rows": [
      {"label": "E(2)", "expr": "E(2)", "degree": 116, "generator": "2*E4*E6*Delta^4", "citation": "T6 row E(2)"},
      {"label": "E(4)", "expr": "E(4)", "degree": 232, "generator": "E4^2*Delta^9", "citation": "T6 row E(4)"},
      {"label": "E(6)", "expr": "E(6)", "degree": 348, "generator": "2*E6*Delta^14", "citation": "T6 row E(6)"},
      {"label": "E(8)", "expr": "E(8)", "degree": 464, "generator": "E4*Delta^19", "citation": "T6 row E(8)"},
      {"label": "E(10)", "expr": "E(10)", "degree": 580, "generator": "2*E4^2*E6*Delta^23", "citation": "T6 row E(10)"}
    ]
  },
  "T7": {
    "title": "E-string generators E(X) for Z(r;2,n)",
    "theory": "estring",
    "base": [
      {"label": "X(2,3)", "expr": "X(2,3)", "degree": -2972, "generator": "2*E4^2*E6/Delta^125", "citation": "T7 caption X(2,3)"},
      {"label": "X(2,5)", "expr": "X(2,5)", "degree": -14860, "generator": "2*E4*E6/Delta^620", "citation": "T7 caption X(2,5)"},
      {"label": "X(2,7)", "expr": "X(2,7)", "degree": -41916, "generator": "2*E6/Delta^1747", "citation": "T7 caption X(2,7)"},
      {"label": "X(2,9)", "expr": "X(2,9)", "degree": -90348, "generator": "2*E6/Delta^3765", "citation": "T7 caption X(2,9)"}
    ],
    "rows": [
      {"label": "Z(2;2,3)", "direct": "Z(2;2,3)", "n": 3, "r": 2, "degree": -3268, "generator": "2*E4*E6/Delta^137", "citation": "T7 row Z(2;2,3)"},
      {"label": "Z(3;2,3)", "direct": "Z(3;2,3)", "n": 3, "r": 3, "degree": -3152, "generator": "E4^2/Delta^132", "citation": "T7 row Z(3;2,3)"},
      {"label": "Z(4;2,3)", "direct": "Z(4;2,3)", "n": 3, "r": 4, "degree": -3036, "generator": "2*E6/Delta^127", "citation": "T7 row Z(4;2,3)"},
      {"label": "Z(1;2,5)", "direct": "Z(1;2,5)", "n": 5, "r": 1, "degree": -16064, "generator": "E4^2/Delta^670", "citation": "T7 row Z(1;2,5)"},
      {"label": "Z(2;2,5)", "direct": "Z(2;2,5)", "n": 5, "r": 2, "degree": -15948, "generator": "2*E6/Delta^665", "citation": "T7 row Z(2;2,5)"},
      {"label": "Z(3;2,5)", "direct": "Z(3;2,5)", "n": 5, "r": 3, "degree": -15832, "generator": "E4/Delta^660", "citation": "T7 row Z(3;2,5)"},
      {"label": "Z(1;2,7)", "direct": "Z(1;2,7)", "n": 7, "r": 1, "degree": -44264, "generator": "E4^2/Delta^1845", "citation": "T7 row Z(1;2,7)"},
      {"label": "Z(2;2,7)", "direct": "Z(2;2,7)", "n": 7, "r": 2, "degree": -44148, "generator": "2*E6/Delta^1840", "citation": "T7 row Z(2;2,7)"},
      {"label": "Z(3;2,7)", "direct": "Z(3;2,7)", "n": 7, "r": 3, "degree": -44032, "generator": "E4/Delta^1835", "citation": "T7 row Z(3;2,7)"},
      {"label": "Z(4;2,7)", "direct": "Z(4;2,7)", "n": 7, "r": 4, "degree": -43916, "generator": "2*E4^2*E6/Delta^1831", "citation": "T7 row Z(4;2,7)"},
      {"label": "Z(1;2,9)", "direct": "Z(1;2,9)", "n": 9, "r": 1, "degree": -94192, "generator": "E4/Delta^3925", "citation": "T7 row Z(1;2,9)"},
      {"label": "Z(2;2,9)", "direct": "Z(2;2,9)", "n": 9, "r": 2, "degree": -94076, "generator": "2*E4^2*E6/Delta^3921", "citation": "T7 row Z(2;2,9)"}
    ]
  }
})json";

} // namespace tmf4d::data
