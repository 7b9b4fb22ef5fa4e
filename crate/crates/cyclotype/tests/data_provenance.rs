//! The bundled JSON is generated from the compact tables below merged with
//! the Levi enumeration of weighted diagrams. This test keeps the shipped
//! files byte-equivalent to what the transcription produces, so the data
//! cannot drift from its source.
//!
//! To regenerate after editing the tables:
//!     cargo test -p cyclotype --test data_provenance -- --ignored regen

use std::collections::BTreeMap;

use cyclotype::catalog::{
    self, exceptional_orbits, zrep_dimension, AlgebraOrbits, DiagramRow, DiagramTable, MixedFile,
    MixedRecord, NilpotentTypeRow, OrbitRecord, OrbitsFile, Table11File, Tables6File,
    SCHEMA_VERSION,
};
use cyclotype::rootsys::{build_root_system, SimpleType};

// Orbit tables. Columns: label | d | r | a | gs | es | gn | en | zrep.
// A non-empty d column opens a bush; continuation rows inherit d, r, a,
// gs, es, gn from their head. The first row of each bush is the unique
// semisimple-type member.

const E6_BUSHES: &str = "
A_1       | 2  | 1 | A_5  | A_1  | (2)      | A_5  | 0         | 1
2A_1      | 2  | 2 | A_3  | 2A_1 | (2;2)    | A_3  | 0         | SO_7⊕1
A_2       | 4  | 1 | 2A_2 | A_2  | (3)      | 2A_2 | 0         | 1
A_2+A_1   |    |   |      |      |          |      | (2,1;1^3) | 1
A_2+2A_1  |    |   |      |      |          |      | (2,1;2,1) | SO_3
2A_2      | 4  | 2 | A_2  | 2A_2 | (3;3)    | A_2  | 0         | G_2⊕1
A_3       | 6  | 1 | A_3  | A_3  | (4)      | 2A_1 | 0         | 1
A_3+A_1   |    |   |      |      |          |      | (2;1^2)   | 1
D_4(a_1)  | 6  | 2 | 0    | D_4  | (5,3)    | 0    | 0         | 2
A_4       | 8  | 1 | A_1  | A_4  | (5)      | A_1  | 0         | 1
A_4+A_1   |    |   |      |      |          |      | (2)       | 1
D_4       | 10 | 1 | 2A_2 | B_3  | (7)      | A_1  | 0         | 1
D_5(a_1)  |    |   |      |      |          |      | (2)       | 1
A_5       | 10 | 1 | A_2  | A_5  | (6)      | A_1  | 0         | 1
E_6(a_3)  | 10 | 2 | 0    | F_4  | F_4(a_2) | 0    | 0         | 2
D_5       | 14 | 1 | 0    | B_4  | (9)      | 0    | 0         | 1
E_6(a_1)  | 16 | 1 | 0    | E_6  | E_6(a_1) | 0    | 0         | 1
E_6       | 22 | 1 | 0    | F_4  | F_4      | 0    | 0         | 1
";

const E6_NILPOTENT: &str = "
3A_1     | 3 | D_4
2A_2+A_1 | 5 | E_6
";

const E7_BUSHES: &str = "
A_1          | 2  | 1 | D_6      | A_1      | (2)      | D_6          | 0           | 1
2A_1         | 2  | 2 | D_4+A_1  | 2A_1     | (2;2)    | D_4+A_1      | 0           | SO_9⊕1
[3A_1]''     | 2  | 3 | D_4      | [3A_1]'' | (2;2;2)  | D_4          | 0           | F_4⊕1
A_2          | 4  | 1 | [A_5]''  | A_2      | (3)      | [A_5]''      | 0           | 1
A_2+A_1      |    |   |          |          |          |              | (2,1^4)     | 1
A_2+2A_1     |    |   |          |          |          |              | (2^2,1^2)   | SO_3
A_2+3A_1     |    |   |          |          |          |              | (2^3)       | G_2
2A_2         | 4  | 2 | A_2      | 2A_2     | (3;3)    | A_2          | 0           | G_2⊕SO_3
A_3          | 6  | 1 | D_4+A_1  | A_3      | (4)      | [A_3+A_1]''  | 0           | 1
[A_3+A_1]'   |    |   |          |          |          |              | (2,1^2;1^2) | 1
[A_3+A_1]''  |    |   |          |          |          |              | (1^4;2)     | 1
A_3+2A_1     |    |   |          |          |          |              | (2,1^2;2)   | 1
D_4(a_1)     | 6  | 2 | [3A_1]'' | D_4      | (5,3)    | [3A_1]''     | 0           | 2
D_4(a_1)+A_1 |    |   |          |          |          |              | (2;1^2;1^2) | 2
A_3+A_2      |    |   |          |          |          |              | (2;2;1^2)   | T_1⊂SO_3
A_3+A_2+A_1  |    |   |          |          |          |              | (2;2;2)     | S^2SO_3/1
A_4          | 8  | 1 | A_2      | A_4      | (5)      | A_2          | 0           | 1
A_4+A_1      |    |   |          |          |          |              | (2,1)       | 1
A_4+A_2      |    |   |          |          |          |              | (3)         | SO_3
D_4          | 10 | 1 | [A_5]''  | D_4      | (7,1)    | [3A_1]''     | 0           | 1
D_4+A_1      |    |   |          |          |          |              | (2;1^2;1^2) | 1
D_5(a_1)     |    |   |          |          |          |              | (2;2;1^2)   | 1
D_5(a_1)+A_1 |    |   |          |          |          |              | (2;2;2)     | 1
[A_5]'       | 10 | 1 | A_2+3A_1 | [A_5]'   | (6)      | A_1          | 0           | 1
[A_5]''      | 10 | 1 | D_4      | [A_5]''  | (6)      | A_2          | 0           | 1
A_5+A_1      |    |   |          |          |          |              | (2,1)       | 1
D_6(a_2)     | 10 | 2 | A_2      | D_6      | (7,5)    | A_1          | 0           | 2
E_6(a_3)     | 10 | 2 | [3A_1]'' | F_4      | F_4(a_2) | A_1          | 0           | 2
E_7(a_5)     | 10 | 3 | 0        | E_7      | E_7(a_5) | 0            | 0           | 3
A_6          | 12 | 1 | 0        | A_6      | (7)      | 0            | 0           | SO_3
D_5          | 14 | 1 | [3A_1]'' | B_4      | (9)      | 2A_1         | 0           | 1
D_5+A_1      |    |   |          |          |          |              | (2;1^2)     | 1
D_6(a_1)     |    |   |          |          |          |              | (1^2;2)     | 1
E_7(a_4)     |    |   |          |          |          |              | (2;2)       | 1
E_6(a_1)     | 16 | 1 | 0        | E_6      | E_6(a_1) | 0            | 0           | 1
D_6          | 18 | 1 | A_2      | D_6      | (11,1)   | A_1          | 0           | 1
E_7(a_3)     |    |   |          |          |          |              | (2)         | 1
E_6          | 22 | 1 | [3A_1]'' | F_4      | F_4      | A_1          | 0           | 1
E_7(a_2)     |    |   |          |          |          |              | (2)         | 1
E_7(a_1)     | 26 | 1 | 0        | E_7      | E_7(a_1) | 0            | 0           | 1
E_7          | 34 | 1 | 0        | E_7      | E_7      | 0            | 0           | 1
";

const E7_NILPOTENT: &str = "
[3A_1]'  | 3 | D_4
4A_1     | 3 | D_4+A_1
2A_2+A_1 | 5 | E_6
";

const E8_BUSHES: &str = "
A_1          | 2  | 1 | E_7     | A_1      | (2)      | E_7     | 0          | 1
2A_1         | 2  | 2 | D_6     | 2A_1     | (2;2)    | D_6     | 0          | SO_13⊕1
A_2          | 4  | 1 | E_6     | A_2      | (3)      | E_6     | 0          | 1
A_2+A_1      |    |   |         |          |          |         | A_1        | 1
A_2+2A_1     |    |   |         |          |          |         | 2A_1       | SO_3
A_2+3A_1     |    |   |         |          |          |         | 3A_1       | G_2
2A_2         | 4  | 2 | 2A_2    | 2A_2     | (3;3)    | 2A_2    | 0          | G_2⊕G_2
A_3          | 6  | 1 | D_6     | A_3      | (4)      | D_5     | 0          | 1
A_3+A_1      |    |   |         |          |          |         | (2^2,1^6)  | 1
A_3+2A_1     |    |   |         |          |          |         | (2^4,1^2)  | 1
D_4(a_1)     | 6  | 2 | D_4     | D_4      | (5,3)    | D_4     | 0          | 2
D_4(a_1)+A_1 |    |   |         |          |          |         | (2^2,1^4)  | 2
A_3+A_2      |    |   |         |          |          |         | (2^4)      | T_1⊂SO_3
A_3+A_2+A_1  |    |   |         |          |          |         | (3,2^2,1)  | S^2SO_3/1
D_4(a_1)+A_2 |    |   |         |          |          |         | (3^2,1^2)  | Ad(SL_3)
A_4          | 8  | 1 | A_4     | A_4      | (5)      | A_4     | 0          | 1
A_4+A_1      |    |   |         |          |          |         | (2,1^3)    | 1
A_4+2A_1     |    |   |         |          |          |         | (2^2,1)    | 1
A_4+A_2      |    |   |         |          |          |         | (3,1^2)    | SO_3
A_4+A_2+A_1  |    |   |         |          |          |         | (3,2)      | SO_3
D_4          | 10 | 1 | E_6     | B_3      | (7)      | B_4     | 0          | 1
D_4+A_1      |    |   |         |          |          |         | (2^2,1^5)  | 1
D_5(a_1)     |    |   |         |          |          |         | (3,1^6)    | 1
D_5(a_1)+A_1 |    |   |         |          |          |         | (3,2^2,1^2)| 1
D_4+A_2      |    |   |         |          |          |         | (3^2,1^3)  | 1
D_5(a_1)+A_2 |    |   |         |          |          |         | (3^3)      | 1
A_5          | 10 | 1 | D_4+A_2 | A_5      | (6)      | A_2+A_1 | 0          | 1
A_5+A_1      |    |   |         |          |          |         | (1^3;2)    | 1
E_6(a_3)     | 10 | 2 | D_4     | F_4      | F_4(a_2) | G_2     | 0          | 2
E_6(a_3)+A_1 |    |   |         |          |          |         | A_1        | 2
D_6(a_2)     | 10 | 2 | 2A_2    | D_6      | (7,5)    | 2A_1    | 0          | 2
E_7(a_5)     | 10 | 3 | A_2     | E_7      | E_7(a_5) | A_1     | 0          | 3
E_8(a_7)     | 10 | 4 | 0       | E_8      | E_8(a_7) | 0       | 0          | 4
A_6          | 12 | 1 | A_1     | A_6      | (7)      | A_1     | 0          | SO_3
A_6+A_1      |    |   |         |          |          |         | (2)        | SO_3
D_5          | 14 | 1 | D_4     | B_4      | (9)      | B_3     | 0          | 1
D_5+A_1      |    |   |         |          |          |         | (2^2,1^3)  | 1
D_6(a_1)     |    |   |         |          |          |         | (3,1^4)    | 1
D_5+A_2      |    |   |         |          |          |         | (3^2,1)    | 1
D_7(a_2)     |    |   |         |          |          |         | (5,1^2)    | 1
E_7(a_4)     |    |   |         |          |          |         | (3,2^2)    | 1
E_6(a_1)     | 16 | 1 | A_2     | E_6      | E_6(a_1) | A_2     | 0          | 1
E_6(a_1)+A_1 |    |   |         |          |          |         | (2,1)      | 1
E_8(b_6)     |    |   |         |          |          |         | (3)        | 1
D_6          | 18 | 1 | A_4     | B_5      | (11)     | B_2     | 0          | 1
E_7(a_3)     |    |   |         |          |          |         | (2^2,1)    | 1
D_7(a_1)     |    |   |         |          |          |         | (3,1^2)    | 1
E_8(a_6)     | 18 | 2 | 0       | E_8      | E_8(a_6) | 0       | 0          | 2
E_6          | 22 | 1 | D_4     | F_4      | F_4      | G_2     | 0          | 1
E_6+A_1      |    |   |         |          |          |         | A_1        | 1
E_7(a_2)     |    |   |         |          |          |         | Ã_1        | 1
E_8(b_5)     |    |   |         |          |          |         | G_2(a_1)   | 1
D_7          | 22 | 1 | 2A_2    | B_6      | (13)     | A_1     | 0          | 1
E_8(a_5)     | 22 | 2 | 0       | E_8      | E_8(a_5) | 0       | 0          | 2
E_7(a_1)     | 26 | 1 | A_1     | E_7      | E_7(a_1) | A_1     | 0          | 1
E_8(b_4)     |    |   |         |          |          |         | (2)        | 1
E_8(a_4)     | 28 | 1 | 0       | E_8      | E_8(a_4) | 0       | 0          | 1
E_7          | 34 | 1 | A_2     | E_7      | E_7      | A_1     | 0          | 1
E_8(a_3)     |    |   |         |          |          |         | (2)        | 1
E_8(a_2)     | 38 | 1 | 0       | E_8      | E_8(a_2) | 0       | 0          | 1
E_8(a_1)     | 46 | 1 | 0       | E_8      | E_8(a_1) | 0       | 0          | 1
E_8          | 58 | 1 | 0       | E_8      | E_8      | 0       | 0          | 1
";

const E8_NILPOTENT: &str = "
3A_1      | 3  | D_4
4A_1      | 3  | D_4+A_1
2A_2+A_1  | 5  | E_6
2A_2+2A_1 | 5  | E_6+A_1
2A_3      | 7  | D_7
A_4+A_3   | 9  | E_8
A_7       | 15 | E_8
";

const F4_BUSHES: &str = "
A_1      | 2  | 1 | C_3 | A_1  | (2)      | C_3  | 0     | 1
Ã_1      | 2  | 2 | B_2 | 2A_1 | (2;2)    | 2A_1 | 0     | SO_6⊕1
A_2      | 4  | 1 | Ã_2 | A_2  | (3)      | Ã_2  | 0     | 1
A_2+Ã_1  |    |   |     |      |          |      | (2,1) | SO_3
Ã_2      | 4  | 1 | A_2 | Ã_2  | (3)      | A_2  | 0     | G_2
B_2      | 6  | 1 | B_2 | B_2  | (5)      | 2A_1 | 0     | 1
C_3(a_1) |    |   |     |      |          |      | (2;1^2) | 1
F_4(a_3) | 6  | 2 | 0   | D_4  | (5,3)    | 0    | 0     | 2
B_3      | 10 | 1 | Ã_2 | B_3  | (7)      | 0    | 0     | 1
C_3      | 10 | 1 | A_2 | C_3  | (6)      | A_1  | 0     | 1
F_4(a_2) | 10 | 2 | 0   | F_4  | F_4(a_2) | 0    | 0     | 2
F_4(a_1) | 14 | 1 | 0   | B_4  | (9)      | 0    | 0     | 1
F_4      | 22 | 1 | 0   | F_4  | F_4      | 0    | 0     | 1
";

const F4_NILPOTENT: &str = "
A_1+Ã_1 | 3 | C_3
Ã_2+A_1 | 5 | F_4
";

const G2_BUSHES: &str = "
A_1      | 2  | 1 | Ã_1 | A_1 | (2) | Ã_1 | 0 | 1
G_2(a_1) | 4  | 1 | 0   | A_2 | (3) | 0   | 0 | 1
G_2      | 10 | 1 | 0   | G_2 | G_2 | 0   | 0 | 1
";

const G2_NILPOTENT: &str = "
Ã_1 | 3 | G_2
";

// Mixed-orbit rows: label | dim z(e+F) | a | nilpotent part of e+F in a.
// The a column inherits downward within a bush block.

const E6_MIXED: &str = "
A_2+A_1  | 14 | 2A_2 | (1^3;2,1)
A_2+2A_1 | 10 |      | (2,1;2,1)
A_3+A_1  | 12 | A_3  | (2,1^2)
A_4+A_1  | 6  | A_1  | (2)
D_5(a_1) | 10 | 2A_2 | (2,1;2,1)
";

const E7_MIXED: &str = "
A_2+A_1      | 27 | [A_5]''  | (2,1^4)
A_2+2A_1     | 21 |          | (2^2,1^2)
A_2+3A_1     | 19 |          | (2^3)
[A_3+A_1]''  | 31 | D_4+A_1  | (1^8;2)
[A_3+A_1]'   | 23 |          | (2^2,1^4;1^2)
A_3+2A_1     | 21 |          | (2^2,1^4;2)
D_4(a_1)+A_1 | 11 | [3A_1]'' | (1^2;1^2;2)
A_3+A_2      | 9  |          | (1^2;2;2)
A_3+A_2+A_1  | 7  |          | (2;2;2)
D_4+A_1      | 27 | [A_5]''  | (2,1^4)
D_5(a_1)     | 21 |          | (2^2,1^2)
D_5(a_1)+A_1 | 19 |          | (2^3)
A_4+A_1      | 9  | A_2      | (2,1)
A_4+A_2      | 7  |          | (3)
A_5+A_1      | 21 | D_4      | (2^2,1^4)
D_5+A_1      | 11 | [3A_1]'' | (1^2;1^2;2)
D_6(a_1)     | 9  |          | (1^2;2;2)
E_7(a_4)     | 7  |          | (2;2;2)
E_7(a_3)     | 9  | A_2      | (2,1)
E_7(a_2)     | 7  | [3A_1]'' | (2;2;2)
";

const E8_MIXED: &str = "
A_2+A_1      | 58 | E_6     | A_1
A_2+2A_1     | 48 |         | 2A_1
A_2+3A_1     | 40 |         | 3A_1
A_3+A_1      | 50 | D_6     | (2^2,1^8)
A_3+2A_1     | 40 |         | (2^4,1^4)
D_4(a_1)+A_1 | 22 | D_4     | (2^2,1^4)
A_3+A_2      | 20 |         | (2^4)
A_3+A_2+A_1  | 16 |         | (3,2^2,1)
D_4(a_1)+A_2 | 14 |         | (3^2,1^2)
A_4+A_1      | 20 | A_4     | (2,1^3)
A_4+2A_1     | 16 |         | (2^2,1)
A_4+A_2      | 14 |         | (3,1^2)
A_4+A_2+A_1  | 12 |         | (3,2)
D_4+A_1      | 58 | E_6     | A_1
D_5(a_1)     | 48 |         | 2A_1
D_5(a_1)+A_1 | 40 |         | 3A_1
D_4+A_2      | 38 |         | A_2
D_5(a_1)+A_2 | 30 |         | 2A_1+A_2
A_5+A_1      | 28 | D_4+A_2 | (2^2,1^4;1^3)
E_6(a_3)+A_1 | 22 | D_4     | (2^2,1^4)
A_6+A_1      | 8  | A_1     | (2)
D_5+A_1      | 22 | D_4     | (2^2,1^4)
D_6(a_1)     | 20 |         | (2^4)
E_7(a_4)     | 16 |         | (3,2^2,1)
D_5+A_2      | 14 |         | (3^2,1^2)
D_7(a_2)     | 12 |         | (4^2)
E_6(a_1)+A_1 | 10 | A_2     | (2,1)
E_8(b_6)     | 8  |         | (3)
E_7(a_3)     | 20 | A_4     | (2,1^3)
D_7(a_1)     | 16 |         | (2^2,1)
E_6+A_1      | 22 | D_4     | (2^2,1^4)
E_7(a_2)     | 16 |         | (3,2^2,1)
E_8(b_5)     | 14 |         | (3^2,1^2)
E_8(b_4)     | 8  | A_1     | (2)
E_8(a_3)     | 10 | A_2     | (2,1)
";

const F4_MIXED: &str = "
A_2+Ã_1  | 6 | Ã_2 | (2,1)
C_3(a_1) | 8 | B_2 | (2^2,1)
";

// Regular-element diagram tables. Columns: m | labels | fixed ; torus | dim h^w.
// Untwisted labels are (s_0, s_1, ..., s_r) in Bourbaki order; the twisted
// diagrams use the printed left-to-right order (docs/numbering.md).

const T6_E6: &str = "
2  | 0,0,1,0,0,0,0 | A_1+A_5 ; 0         | 2
3  | 0,0,0,0,1,0,0 | A_2+A_2+A_2 ; 0     | 0
4  | 1,0,0,0,1,0,0 | A_1+A_2+A_2 ; 1     | 2
4  | 1,1,0,0,0,1,0 | A_1+A_3 ; 2         | 2
8  | 1,1,1,0,1,0,1 | A_1+A_1 ; 4         | 1
8  | 0,1,1,1,0,1,1 | A_1+A_1 ; 4         | 1
6  | 1,1,0,0,1,0,1 | A_1+A_1+A_1 ; 3     | 0
9  | 1,1,1,1,0,1,1 | A_1 ; 5             | 0
12 | 1,1,1,1,1,1,1 | - ; 6               | 0
";

const T6_E7: &str = "
2  | 0,0,1,0,0,0,0,0 | A_7 ; 0             | 0
3  | 0,0,0,0,0,1,0,0 | A_2+A_5 ; 0         | 1
7  | 0,1,0,0,1,0,0,1 | A_1+A_1+A_1+A_2 ; 2 | 1
9  | 0,1,0,0,1,0,1,1 | A_1+A_1+A_1+A_1 ; 3 | 1
9  | 1,1,1,0,0,1,0,1 | A_1+A_2 ; 4         | 1
6  | 1,0,0,0,1,0,0,1 | A_1+A_2+A_2 ; 2     | 0
14 | 1,1,1,1,0,1,1,1 | A_1 ; 6             | 0
18 | 1,1,1,1,1,1,1,1 | - ; 7               | 0
";

const T6_E8: &str = "
2  | 0,1,0,0,0,0,0,0,0 | D_8 ; 0                 | 0
3  | 0,0,1,0,0,0,0,0,0 | A_8 ; 0                 | 0
4  | 0,0,0,0,0,0,1,0,0 | A_3+D_5 ; 0             | 0
5  | 0,0,0,0,0,1,0,0,0 | A_4+A_4 ; 0             | 0
8  | 0,0,0,0,1,0,0,0,1 | A_1+A_1+A_2+A_3 ; 1     | 0
6  | 1,0,0,0,0,1,0,0,0 | A_3+A_4 ; 1             | 0
10 | 1,0,0,0,1,0,0,1,0 | A_1+A_1+A_2+A_2 ; 2     | 0
12 | 1,1,0,0,1,0,0,1,0 | A_1+A_1+A_1+A_2 ; 3     | 0
15 | 1,1,0,0,1,0,1,0,1 | A_1+A_1+A_1+A_1 ; 4     | 0
20 | 1,1,1,1,0,1,0,1,1 | A_1+A_1 ; 6             | 0
24 | 1,1,1,1,0,1,1,1,1 | A_1 ; 7                 | 0
30 | 1,1,1,1,1,1,1,1,1 | - ; 8                   | 0
";

const T6_F4: &str = "
2  | 0,1,0,0,0 | A_1+C_3 ; 0     | 0
3  | 0,0,1,0,0 | A_2+A_2 ; 0     | 0
4  | 1,0,1,0,0 | A_1+A_2 ; 1     | 0
6  | 1,0,1,0,1 | A_1+A_1 ; 2     | 0
8  | 1,1,1,0,1 | A_1 ; 3         | 0
12 | 1,1,1,1,1 | - ; 4           | 0
";

const T6_G2: &str = "
2  | 0,0,1 | A_1+A_1 ; 0 | 0
3  | 1,0,1 | A_1 ; 1     | 0
6  | 1,1,1 | - ; 2       | 0
";

const T6_E6_TWISTED: &str = "
2  | 0,0,0,0,1 | C_4 ; 0         | 0
4  | 0,0,0,1,0 | A_1+A_3 ; 0     | 0
8  | 1,0,0,1,1 | A_2 ; 2         | 1
8  | 0,1,0,1,0 | A_1+A_1+A_1 ; 1 | 1
6  | 1,0,0,1,0 | A_1+A_2 ; 1     | 0
12 | 1,1,0,1,1 | A_1 ; 3         | 0
18 | 1,1,1,1,1 | - ; 4           | 0
";

const T6_D4_TWISTED: &str = "
3  | 0,0,1 | A_2 ; 0 | 0
6  | 1,0,1 | A_1 ; 1 | 0
12 | 1,1,1 | - ; 2   | 0
";

fn cells(line: &str) -> Vec<String> {
    line.split('|').map(|c| c.trim().to_string()).collect()
}

fn build_algebra(t: SimpleType, bushes: &str, nilpotent: &str) -> AlgebraOrbits {
    let rs = build_root_system(t).unwrap();
    let derived: BTreeMap<String, (Vec<i64>, i64, bool)> = exceptional_orbits(&rs)
        .into_iter()
        .map(|o| (o.label.clone(), (o.characteristic, o.depth, o.distinguished)))
        .collect();

    let mut orbits = Vec::new();
    let mut head: Option<OrbitRecord> = None;
    for line in bushes.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let c = cells(line);
        assert_eq!(c.len(), 9, "orbit row needs 9 cells: {line}");
        let label = c[0].clone();
        let (chr, depth, dist) = derived
            .get(&label)
            .unwrap_or_else(|| panic!("{t}: no derived orbit labeled {label}"))
            .clone();
        let is_head = !c[1].is_empty();
        let (d, r, a, gs, es, gn, bush) = if is_head {
            (
                c[1].parse::<i64>().unwrap(),
                c[2].parse::<usize>().unwrap(),
                c[3].clone(),
                c[4].clone(),
                c[5].clone(),
                c[6].clone(),
                label.clone(),
            )
        } else {
            let h = head.as_ref().expect("continuation row before any head");
            (
                h.d,
                h.r,
                h.a.clone().unwrap(),
                h.gs.clone().unwrap(),
                h.es.clone().unwrap(),
                h.gn.clone().unwrap(),
                h.bush.clone().unwrap(),
            )
        };
        assert_eq!(d, depth, "{t}/{label}: tabulated d differs from the diagram depth");
        let zrep = c[8].clone();
        let zrep_dim = zrep_dimension(&zrep)
            .unwrap_or_else(|| panic!("{t}/{label}: unparsable zrep {zrep}"));
        let note = match zrep.as_str() {
            "T_1⊂SO_3" => Some("one-dimensional torus acting on a 3-dimensional space".to_string()),
            "S^2SO_3/1" => Some(
                "symmetric square of the SO_3 vector representation minus a trivial summand; \
                 5-dimensional"
                    .to_string(),
            ),
            "Ad(SL_3)" => Some("adjoint representation; 8-dimensional".to_string()),
            _ => None,
        };
        let rec = OrbitRecord {
            label: label.clone(),
            characteristic: chr,
            d,
            r,
            kind: if is_head { "semisimple" } else { "mixed" }.to_string(),
            regular: is_head && a == "0",
            distinguished: dist,
            a: Some(a),
            gs: Some(gs),
            es: Some(es),
            gn: Some(gn),
            en: Some(c[7].clone()),
            zrep: Some(zrep),
            zrep_dim: Some(zrep_dim),
            bush: Some(bush),
            note,
        };
        if is_head {
            head = Some(rec.clone());
        }
        orbits.push(rec);
    }
    for line in nilpotent.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let c = cells(line);
        assert_eq!(c.len(), 3, "nilpotent row needs 3 cells: {line}");
        let label = c[0].clone();
        let (chr, depth, dist) = derived
            .get(&label)
            .unwrap_or_else(|| panic!("{t}: no derived orbit labeled {label}"))
            .clone();
        let d = c[1].parse::<i64>().unwrap();
        assert_eq!(d, depth, "{t}/{label}: tabulated d differs from the diagram depth");
        orbits.push(OrbitRecord {
            label,
            characteristic: chr,
            d,
            r: 0,
            kind: "nilpotent".to_string(),
            regular: false,
            distinguished: dist,
            a: None,
            gs: None,
            es: None,
            gn: None,
            en: None,
            zrep: None,
            zrep_dim: None,
            bush: None,
            note: None,
        });
    }
    assert_eq!(orbits.len(), derived.len(), "{t}: table covers every orbit");
    AlgebraOrbits { algebra: compact(t), orbits }
}

fn build_mixed(t: SimpleType, src: &str) -> Vec<MixedRecord> {
    let mut out = Vec::new();
    let mut last_a: Option<String> = None;
    for line in src.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let c = cells(line);
        assert_eq!(c.len(), 4, "mixed row needs 4 cells: {line}");
        let a = if c[2].is_empty() {
            last_a.clone().expect("mixed continuation before any a")
        } else {
            c[2].clone()
        };
        last_a = Some(a.clone());
        out.push(MixedRecord {
            algebra: compact(t),
            label: c[0].clone(),
            dim_z: c[1].parse().unwrap(),
            a,
            nilpart: c[3].clone(),
        });
    }
    out
}

fn build_table11(t: SimpleType, src: &str) -> Vec<NilpotentTypeRow> {
    src.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let c = cells(line);
            NilpotentTypeRow {
                algebra: compact(t),
                label: c[0].clone(),
                d: c[1].parse().unwrap(),
                image: c[2].clone(),
            }
        })
        .collect()
}

fn build_diagram_table(id: &str, base: &str, twist: usize, src: &str) -> DiagramTable {
    let rows = src
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let c = cells(line);
            assert_eq!(c.len(), 4, "diagram row needs 4 cells: {line}");
            let labels: Vec<i64> = c[1].split(',').map(|x| x.trim().parse().unwrap()).collect();
            let (fixed_str, torus_str) = c[2].split_once(';').expect("fixed ; torus");
            let fixed: Vec<String> = match fixed_str.trim() {
                "-" => vec![],
                s => s.split('+').map(|x| x.trim().to_string()).collect(),
            };
            DiagramRow {
                m: c[0].parse().unwrap(),
                labels,
                fixed,
                torus: torus_str.trim().parse().unwrap(),
                dim_hw: c[3].parse().unwrap(),
            }
        })
        .collect();
    DiagramTable {
        id: id.to_string(),
        base: base.to_string(),
        twist,
        rows,
    }
}

fn compact(t: SimpleType) -> String {
    t.to_string().replace('_', "")
}

fn build_all() -> (OrbitsFile, Tables6File, Table11File, MixedFile) {
    let orbits = OrbitsFile {
        schema_version: SCHEMA_VERSION,
        algebras: vec![
            build_algebra(SimpleType::E6, E6_BUSHES, E6_NILPOTENT),
            build_algebra(SimpleType::E7, E7_BUSHES, E7_NILPOTENT),
            build_algebra(SimpleType::E8, E8_BUSHES, E8_NILPOTENT),
            build_algebra(SimpleType::F4, F4_BUSHES, F4_NILPOTENT),
            build_algebra(SimpleType::G2, G2_BUSHES, G2_NILPOTENT),
        ],
    };
    let tables6 = Tables6File {
        schema_version: SCHEMA_VERSION,
        diagrams: vec![
            build_diagram_table("E6^(1)", "E6", 1, T6_E6),
            build_diagram_table("E7^(1)", "E7", 1, T6_E7),
            build_diagram_table("E8^(1)", "E8", 1, T6_E8),
            build_diagram_table("F4^(1)", "F4", 1, T6_F4),
            build_diagram_table("G2^(1)", "G2", 1, T6_G2),
            build_diagram_table("E6^(2)", "E6", 2, T6_E6_TWISTED),
            build_diagram_table("D4^(3)", "D4", 3, T6_D4_TWISTED),
        ],
    };
    let table11 = Table11File {
        schema_version: SCHEMA_VERSION,
        rows: [
            build_table11(SimpleType::E6, E6_NILPOTENT),
            build_table11(SimpleType::E7, E7_NILPOTENT),
            build_table11(SimpleType::E8, E8_NILPOTENT),
            build_table11(SimpleType::F4, F4_NILPOTENT),
            build_table11(SimpleType::G2, G2_NILPOTENT),
        ]
        .concat(),
    };
    let mixed = MixedFile {
        schema_version: SCHEMA_VERSION,
        rows: [
            build_mixed(SimpleType::E6, E6_MIXED),
            build_mixed(SimpleType::E7, E7_MIXED),
            build_mixed(SimpleType::F4, F4_MIXED),
            build_mixed(SimpleType::E8, E8_MIXED),
        ]
        .concat(),
    };
    (orbits, tables6, table11, mixed)
}







fn data_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

#[test]
fn bundled_data_matches_transcription() {
    let (orbits, tables6, table11, mixed) = build_all();
    let read = |name: &str| -> serde_json::Value {
        let path = data_dir().join(name);
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
        serde_json::from_str(&text).unwrap()
    };
    assert_eq!(
        serde_json::to_value(&orbits).unwrap(),
        read("orbits_exceptional.json")
    );
    assert_eq!(serde_json::to_value(&tables6).unwrap(), read("tables6.json"));
    assert_eq!(serde_json::to_value(&table11).unwrap(), read("table11.json"));
    assert_eq!(serde_json::to_value(&mixed).unwrap(), read("tables55_56.json"));
}

#[test]
fn built_catalog_passes_every_check() {
    let (orbits, tables6, table11, mixed) = build_all();
    let cat = catalog::Catalog::from_json(
        &serde_json::to_string(&orbits).unwrap(),
        &serde_json::to_string(&tables6).unwrap(),
        &serde_json::to_string(&table11).unwrap(),
        &serde_json::to_string(&mixed).unwrap(),
    )
    .unwrap();
    let report = catalog::verify(&cat).unwrap();
    assert!(report.all_passed(), "verification failures:\n{report}");
}

#[test]
#[ignore = "writes the bundled data files; run explicitly after editing tables"]
fn regen() {
    let (orbits, tables6, table11, mixed) = build_all();
    let dir = data_dir();
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, v: serde_json::Value| {
        let mut text = serde_json::to_string_pretty(&v).unwrap();
        text.push('\n');
        std::fs::write(dir.join(name), text).unwrap();
    };
    write("orbits_exceptional.json", serde_json::to_value(&orbits).unwrap());
    write("tables6.json", serde_json::to_value(&tables6).unwrap());
    write("table11.json", serde_json::to_value(&table11).unwrap());
    write("tables55_56.json", serde_json::to_value(&mixed).unwrap());
}
