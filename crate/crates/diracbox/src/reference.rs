//! Published reference values for the first six distinct cubic-box levels at
//! `L/L_C = 0.1, 1, 10`: quantum numbers, spatial degeneracy, wavenumber
//! phases in units of pi and scaled total energies (six significant figures).

#[derive(Debug, Clone, Copy)]
pub struct Table1Row {
    pub qn: [u32; 3],
    pub degeneracy: u32,
    pub lambda: f64,
    pub k_over_pi: [f64; 3],
    pub epsilon: f64,
}

pub const TABLE1: [Table1Row; 18] = [
    Table1Row { qn: [1, 1, 1], degeneracy: 1, lambda: 0.1, k_over_pi: [0.674129, 0.674129, 0.674129], epsilon: 36.6957 },
    Table1Row { qn: [1, 1, 1], degeneracy: 1, lambda: 1.0, k_over_pi: [0.730735, 0.730735, 0.730735], epsilon: 4.10004 },
    Table1Row { qn: [1, 1, 1], degeneracy: 1, lambda: 10.0, k_over_pi: [0.914156, 0.914156, 0.914156], epsilon: 1.11689 },
    Table1Row { qn: [1, 1, 2], degeneracy: 3, lambda: 0.1, k_over_pi: [0.761157, 0.761157, 1.5664], epsilon: 59.718 },
    Table1Row { qn: [1, 1, 2], degeneracy: 3, lambda: 1.0, k_over_pi: [0.789821, 0.789821, 1.61153], epsilon: 6.24063 },
    Table1Row { qn: [1, 1, 2], degeneracy: 3, lambda: 10.0, k_over_pi: [0.917935, 0.917935, 1.8383], epsilon: 1.22469 },
    Table1Row { qn: [1, 2, 2], degeneracy: 3, lambda: 0.1, k_over_pi: [0.800534, 1.62894, 1.62894], epsilon: 76.6236 },
    Table1Row { qn: [1, 2, 2], degeneracy: 3, lambda: 1.0, k_over_pi: [0.820262, 1.66176, 1.66176], epsilon: 7.88349 },
    Table1Row { qn: [1, 2, 2], degeneracy: 3, lambda: 10.0, k_over_pi: [0.921162, 1.84449, 1.84449], epsilon: 1.32488 },
    Table1Row { qn: [1, 1, 3], degeneracy: 3, lambda: 0.1, k_over_pi: [0.819801, 0.819801, 2.53383], epsilon: 87.5453 },
    Table1Row { qn: [1, 1, 3], degeneracy: 3, lambda: 1.0, k_over_pi: [0.835499, 0.835499, 2.56592], epsilon: 8.93086 },
    Table1Row { qn: [1, 1, 3], degeneracy: 3, lambda: 10.0, k_over_pi: [0.923098, 0.923098, 2.77709], epsilon: 1.38902 },
    Table1Row { qn: [2, 2, 2], degeneracy: 1, lambda: 0.1, k_over_pi: [1.66969, 1.66969, 1.66969], epsilon: 90.8601 },
    Table1Row { qn: [2, 2, 2], degeneracy: 1, lambda: 1.0, k_over_pi: [1.69565, 1.69565, 1.69565], epsilon: 9.28075 },
    Table1Row { qn: [2, 2, 2], degeneracy: 1, lambda: 10.0, k_over_pi: [1.84989, 1.84989, 1.84989], epsilon: 1.41889 },
    Table1Row { qn: [1, 2, 3], degeneracy: 6, lambda: 0.1, k_over_pi: [0.838015, 1.69214, 2.57123], epsilon: 100.225 },
    Table1Row { qn: [1, 2, 3], degeneracy: 6, lambda: 1.0, k_over_pi: [0.850724, 1.71438, 2.59869], epsilon: 10.1883 },
    Table1Row { qn: [1, 2, 3], degeneracy: 6, lambda: 10.0, k_over_pi: [0.92567, 1.85317, 2.7841], epsilon: 1.47937 },
];
