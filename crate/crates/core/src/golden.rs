//! Reference values for the Möbius–Escher–Penrose hypergraph, transcribed
//! from the reference tables. Used by `--assert-paper` and the test suites.
//!
//! State numbers are 1-based and follow the canonical row order of
//! [`TravisMatrix`](crate::states::TravisMatrix), which coincides with the
//! reference numbering.

/// Reference two-valued states, vertices `a_1..a_18` left to right.
pub const STATES: [[u8; 18]; 12] = [
    [1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1],
    [0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1],
    [0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
];

/// Reference partition logic: vertex ↦ indices of the states that are 1 on it.
pub const PARTITION: [(u32, &[usize]); 18] = [
    (1, &[1, 2, 3]),
    (2, &[4, 5, 6, 7]),
    (3, &[8, 9, 10, 11, 12]),
    (4, &[1, 4, 5, 6]),
    (5, &[2, 3, 7]),
    (6, &[1, 4, 5, 8, 9, 10]),
    (7, &[6, 11, 12]),
    (8, &[1, 2, 8, 9]),
    (9, &[3, 4, 5, 7, 10]),
    (10, &[2, 8, 9, 11]),
    (11, &[1, 6, 12]),
    (12, &[2, 3, 4, 8, 10, 11]),
    (13, &[5, 7, 9]),
    (14, &[3, 10, 11, 12]),
    (15, &[1, 2, 4, 6, 8]),
    (16, &[3, 7, 10, 12]),
    (17, &[5, 9, 11]),
    (18, &[4, 6, 7, 8, 10, 12]),
];

/// Reference hull equalities `c·w + a = 0` over the nine-pair path
/// `A1A3, A3A5, A5A7, A7A9, A9A11, A11A13, A13A15, A15A17, A17A1`.
pub const EQUALITIES: [([i64; 9], i64); 2] = [([0, 1, 0, 0, 1, 0, 0, 1, 0], 1), ([1, 0, 0, 1, 0, 0, 1, 0, 0], 1)];

/// Reference hull inequalities, numbered as printed, each rewritten as
/// `c·w + a ≥ 0` over the nine-pair path.
pub const INEQUALITIES: [(usize, [i64; 9], i64); 28] = [
    (1, [2, -2, -1, 2, -2, 1, 0, 0, -1], 1),
    (2, [-2, 2, -1, -2, 2, -1, 0, 0, 1], 1),
    (3, [2, -2, 1, 0, -2, 1, 0, 0, -1], 1),
    (4, [-2, 0, 1, -2, 2, -1, 0, 0, 1], 1),
    (5, [0, 2, -1, 0, 2, 1, 0, 0, 1], 3),
    (6, [0, 2, -1, 2, 0, 1, 0, 0, 1], 3),
    (7, [2, 0, -1, 2, 0, 1, 0, 0, 1], 3),
    (8, [2, -2, 1, 0, 0, -1, 0, 0, -1], 1),
    (9, [-2, 2, -1, 0, 0, -1, 0, 0, 1], 1),
    (10, [0, 0, 1, -2, 2, -1, 0, 0, -1], 1),
    (11, [0, 0, -1, 2, -2, 1, 0, 0, -1], 1),
    (12, [0, -2, 1, 0, 0, -1, 0, 0, 1], 1),
    (13, [-2, 0, 1, 0, 0, -1, 0, 0, 1], 1),
    (14, [0, 0, 1, 0, -2, 1, 0, 0, -1], 1),
    (15, [0, 0, 1, -2, 0, 1, 0, 0, -1], 1),
    (16, [0, 0, 1, 0, 0, 1, 0, 0, 1], 1),
    (17, [0, 0, 1, 0, 0, -1, 0, 0, -1], 1),
    (18, [0, 0, -1, 0, 0, -1, 0, 0, 1], 1),
    (19, [0, 0, -1, 0, 0, 1, 0, 0, -1], 1),
    (20, [0, 1, 0, -1, 1, 0, 0, 0, 0], 1),
    (21, [1, -1, 0, 1, 0, 0, 0, 0, 0], 1),
    (22, [0, -1, 0, 0, -1, 0, 0, 0, 0], 0),
    (23, [-1, 0, 0, 0, -1, 0, 0, 0, 0], 0),
    (24, [-1, 0, 0, -1, 0, 0, 0, 0, 0], 0),
    (25, [0, 1, 0, 0, 0, 0, 0, 0, 0], 1),
    (26, [1, 0, 0, 0, 0, 0, 0, 0, 0], 1),
    (27, [0, 0, 0, 1, 0, 0, 0, 0, 0], 1),
    (28, [0, 0, 0, 0, 1, 0, 0, 0, 0], 1),
];

/// One row of the reference violation table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ViolationRow {
    pub inequality: usize,
    pub eigenvalue: f64,
    pub eigenvector: [f64; 3],
}

const fn row(inequality: usize, eigenvalue: f64, eigenvector: [f64; 3]) -> ViolationRow {
    ViolationRow {
        inequality,
        eigenvalue,
        eigenvector,
    }
}

/// Reference extremal eigenvalues and eigenvectors of the inequality operators.
pub const VIOLATIONS: [ViolationRow; 15] = [
    row(1, -3.0, [0.981557, 0.173328, -0.0806446]),
    row(5, -3.89807, [0.491309, -0.837518, -0.239123]),
    row(6, -3.89807, [0.95734, -0.162235, -0.239123]),
    row(7, -2.26894, [0.195441, -0.683898, -0.702913]),
    row(12, -1.89807, [0.970966, 0.00672715, 0.239123]),
    row(13, -1.89807, [0.619169, 0.747964, 0.239123]),
    row(14, -1.89807, [0.479657, 0.844245, -0.239123]),
    row(15, -2.12744, [0.553247, -0.811751, 0.187022]),
    row(16, -1.36373, [0.0343782, 0.426292, -0.903932]),
    row(17, -1.36373, [0.351991, -0.242918, -0.903932]),
    row(18, -1.36373, [0.0343782, 0.426292, -0.903932]),
    row(19, -1.36373, [0.386369, 0.183374, 0.903932]),
    row(20, -1.64944, [0.428768, -0.903415, 0.0]),
    row(21, -1.64944, [0.996764, -0.0803837, 0.0]),
    row(23, -0.64944, [0.567996, 0.823031, 0.0]),
];

/// Reference class representatives of the proper 3-colorings, `a_1..a_18`.
pub const COLORING_CLASSES: [[u8; 18]; 3] = [
    [1, 2, 3, 1, 2, 1, 3, 1, 2, 3, 1, 3, 2, 3, 1, 2, 3, 2],
    [1, 2, 3, 2, 1, 2, 3, 1, 2, 1, 3, 1, 2, 3, 1, 3, 2, 3],
    [1, 2, 3, 2, 1, 3, 2, 3, 1, 3, 2, 1, 3, 1, 2, 1, 3, 2],
];

pub const STATE_COUNT: usize = 12;
pub const COLORING_COUNT: usize = 18;
pub const HULL_DIMENSION: usize = 7;
pub const NON_EXTENDABLE_STATES: [usize; 3] = [4, 8, 10];
pub const TIFS_PAIRS: [(u32, u32); 3] = [(2, 10), (4, 14), (8, 16)];
pub const PSEUDOCONTEXTS: ([u32; 3], [u32; 3]) = ([5, 11, 17], [1, 7, 13]);
pub const PSEUDOCONTEXT_CLASSICAL_BOUND: u32 = 1;
pub const PSEUDOCONTEXT_EIGENVALUE: f64 = 1.43016;

/// Tolerance for values printed with six significant digits.
pub const PRINTED_TOLERANCE: f64 = 1e-4;
/// Required `|⟨computed, printed⟩|` for printed eigenvectors.
pub const EIGENVECTOR_OVERLAP: f64 = 0.999;
