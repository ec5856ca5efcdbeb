#pragma once

// Bundled defaults. Kept byte-identical to data/masses.csv and
// data/presets.csv (checked by the molecule_db tests).

#include <string_view>

namespace kgrotor {

inline constexpr std::string_view kDefaultMassTable = R"csv(# Atomic masses (u), AME-2020.
symbol,mass_amu
1H,1.007825031898
2H,2.014101777844
D,2.014101777844
12C,12
13C,13.003354835336
14N,14.003074004251
15N,15.000108898266
16O,15.994914619257
17O,16.999131755953
18O,17.999159612136
19F,18.998403162067
35Cl,34.968852694
37Cl,36.965902573
79Br,78.918337579
81Br,80.916288206
)csv";

inline constexpr std::string_view kDefaultPresets = R"csv(# Equilibrium bond lengths (Angstrom), ground electronic state.
name,iso1,iso2,bond_length_angstrom
H2,1H,1H,0.7414
HD,1H,2H,0.74142
D2,2H,2H,0.74152
N2,14N,14N,1.09768
O2,16O,16O,1.20752
F2,19F,19F,1.41193
Cl2,35Cl,35Cl,1.9879
Br2,79Br,79Br,2.2811
CO,12C,16O,1.128323
NO,14N,16O,1.15077
HF,1H,19F,0.916808
HCl,1H,35Cl,1.2746
DCl,2H,35Cl,1.27458
HBr,1H,79Br,1.41444
)csv";

}  // namespace kgrotor
