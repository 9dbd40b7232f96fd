//! Literal rational coefficients of the published identities, stored as
//! `(numerator, denominator)` pairs so each entry can be diffed by eye against
//! its source formula.

/// A rational literal `p/q`.
pub type Frac = (i64, i64);

/// Dilations `t` of `M(q^t)` spanning the Eisenstein part of `M₄(Γ₀(28))`.
pub const EISENSTEIN_DILATIONS: [u64; 6] = [1, 2, 4, 7, 14, 28];

/// Coefficients of `(a·L(q^a) − b·L(q^b))²` on the basis
/// `M(q^t)` (t = 1, 2, 4, 7, 14, 28) followed by `C_1..C_9`.
pub struct SquaredCombination {
    pub a: u64,
    pub b: u64,
    pub eisenstein: [Frac; 6],
    pub cusp: [Frac; 9],
}

pub const SQUARED_COMBINATIONS: [SquaredCombination; 5] = [
    SquaredCombination {
        a: 1,
        b: 28,
        eisenstein: [(118, 125), (-21, 125), (-112, 125), (-343, 125), (-1029, 125), (92512, 125)],
        cusp: [
            (-13452, 25),
            (-86004, 25),
            (252, 1),
            (40188, 25),
            (407232, 25),
            (68544, 5),
            (-52416, 25),
            (2327808, 25),
            (2731008, 25),
        ],
    },
    SquaredCombination {
        a: 4,
        b: 7,
        eisenstein: [(-7, 125), (-21, 125), (1888, 125), (5782, 125), (-1029, 125), (-5488, 125)],
        cusp: [
            (-8364, 175),
            (-5004, 25),
            (324, 1),
            (10716, 175),
            (-24768, 25),
            (28224, 5),
            (-138816, 25),
            (676608, 25),
            (273408, 25),
        ],
    },
    SquaredCombination {
        a: 1,
        b: 14,
        eisenstein: [(111, 125), (-56, 125), (0, 1), (-686, 125), (21756, 125), (0, 1)],
        cusp: [
            (0, 1),
            (-4608, 25),
            (672, 25),
            (10272, 25),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ],
    },
    SquaredCombination {
        a: 2,
        b: 7,
        eisenstein: [(-14, 125), (444, 125), (0, 1), (5439, 125), (-2744, 125), (0, 1)],
        cusp: [
            (0, 1),
            (-4608, 25),
            (10272, 25),
            (672, 25),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ],
    },
    SquaredCombination {
        a: 1,
        b: 7,
        eisenstein: [(18, 25), (0, 1), (0, 1), (882, 25), (0, 1), (0, 1)],
        // (576/5)(C_1 + 4 C_2)
        cusp: [
            (576, 5),
            (2304, 5),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ],
    },
];

/// Closed form of `W_{a,b}(n)`:
/// `Σ α_d σ₃(n/d) + Σ (1/24 − β_d·n) σ(n/d) + Σ_j γ_j c_j(n)`.
pub struct ConvolutionFormula {
    pub a: u64,
    pub b: u64,
    /// `(d, α_d)`
    pub sigma3: &'static [(u64, Frac)],
    /// `(d, β_d)`; the constant `1/24` is shared by every term.
    pub sigma1: &'static [(u64, Frac)],
    /// `γ_1..γ_9`
    pub cusp: [Frac; 9],
}

const SIGMA3_LEVEL_28: [(u64, Frac); 6] = [
    (1, (1, 2400)),
    (2, (1, 800)),
    (4, (1, 150)),
    (7, (49, 2400)),
    (14, (49, 800)),
    (28, (49, 150)),
];

const SIGMA3_LEVEL_14: [(u64, Frac); 4] =
    [(1, (1, 600)), (2, (1, 150)), (7, (49, 600)), (14, (49, 150))];

pub const CONVOLUTION_FORMULAS: [ConvolutionFormula; 5] = [
    ConvolutionFormula {
        a: 1,
        b: 28,
        sigma3: &SIGMA3_LEVEL_28,
        sigma1: &[(1, (1, 112)), (28, (1, 4))],
        cusp: [
            (1121, 67200),
            (2389, 22400),
            (-1, 128),
            (-3349, 67200),
            (-101, 200),
            (-17, 40),
            (13, 200),
            (-433, 150),
            (-254, 75),
        ],
    },
    ConvolutionFormula {
        a: 4,
        b: 7,
        sigma3: &SIGMA3_LEVEL_28,
        sigma1: &[(4, (1, 28)), (7, (1, 16))],
        cusp: [
            (697, 470400),
            (139, 22400),
            (-9, 896),
            (-893, 470400),
            (43, 1400),
            (-7, 40),
            (241, 1400),
            (-881, 1050),
            (-178, 525),
        ],
    },
    ConvolutionFormula {
        a: 1,
        b: 14,
        sigma3: &SIGMA3_LEVEL_14,
        sigma1: &[(1, (1, 56)), (14, (1, 4))],
        cusp: [
            (0, 1),
            (2, 175),
            (-1, 600),
            (-107, 4200),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ],
    },
    ConvolutionFormula {
        a: 2,
        b: 7,
        sigma3: &SIGMA3_LEVEL_14,
        sigma1: &[(2, (1, 28)), (7, (1, 8))],
        cusp: [
            (0, 1),
            (2, 175),
            (-107, 4200),
            (-1, 600),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ],
    },
    ConvolutionFormula {
        a: 1,
        b: 7,
        sigma3: &[(1, (1, 120)), (7, (49, 120))],
        sigma1: &[(1, (1, 28)), (7, (1, 4))],
        cusp: [
            (-1, 70),
            (-2, 35),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ],
    },
];

/// `σ₃` part shared by both closed forms of `R₇(n)`.
pub const R7_SIGMA3: [(u64, Frac); 6] = [
    (1, (8, 25)),
    (2, (-16, 25)),
    (4, (128, 25)),
    (7, (392, 25)),
    (14, (-784, 25)),
    (28, (6272, 25)),
];

/// Cusp coefficients of the simplified closed form of `R₇(n)`.
pub const R7_CUSP: [Frac; 9] = [
    (-928, 175),
    (-768, 25),
    (32, 5),
    (2272, 175),
    (2304, 25),
    (768, 5),
    (-1152, 25),
    (24576, 25),
    (24576, 25),
];

/// Cusp coefficients of `R₇(n)` before eliminating `c_j(n/4)`.
pub const R7_CUSP_UNREDUCED: [Frac; 9] = [
    (-6816, 1225),
    (-5696, 175),
    (32, 7),
    (16224, 1225),
    (21248, 175),
    (768, 5),
    (-10624, 175),
    (166912, 175),
    (166912, 175),
];

/// Multiplier of `c_1(n/4) + 4 c_2(n/4)` in the unreduced form.
pub const R7_QUARTER_TAIL: Frac = (-512, 35);

/// `C_1(q⁴) + 4 C_2(q⁴)` on the basis `C_1..C_9`.
pub const CUSP_SHIFT_BY_FOUR: [Frac; 9] = [
    (-1, 56),
    (-1, 8),
    (-1, 8),
    (1, 56),
    (2, 1),
    (0, 1),
    (-1, 1),
    (-2, 1),
    (-2, 1),
];

/// Cusp part of the level-7 convolution formula written with `τ_{4,7}`:
/// `W_{1,7}` contains `−(1/70) τ_{4,7}(n)`.
pub const LEMIRE_TAU: Frac = (-1, 70);

/// Cusp part of the level-14 formula written with the three level-14 forms:
/// `τ_{4,7}(n)`, `τ_{4,7}(n/2)`, `τ_{4,14,1}(n)`, `τ_{4,14,2}(n)`.
pub const ROYER_TAU: [Frac; 4] = [(-3, 350), (-6, 175), (-1, 84), (-1, 200)];
