#![allow(dead_code)]

pub mod props;

use stm::affine::AffineContext;
use stm::catalog::catalog;
use stm::linalg::{coordinates, parse_q, Matrix, Q};
use stm::pipeline::{affine_context, homology_stage, BasisMode, HomologyStage, RunConfig};

pub fn paper_config() -> RunConfig {
    RunConfig { basis: BasisMode::Paper, ..RunConfig::default() }
}

pub struct PaperSurface {
    pub homology: HomologyStage,
    pub context: AffineContext,
}

impl PaperSurface {
    pub fn new(name: &str) -> PaperSurface {
        let o = catalog(name).unwrap();
        let homology = homology_stage(&o, Some(name), &paper_config()).unwrap();
        let context = affine_context(&homology);
        PaperSurface { homology, context }
    }

    pub fn full(&self, s: &str) -> Vec<Q> {
        combo(&self.homology.bases.full_names, s)
    }

    pub fn zero(&self, s: &str) -> Vec<Q> {
        combo(&self.homology.bases.zero_names, s)
    }
}

/// `"1 0 -1/2; 0 1 3"` as a matrix.
pub fn mat(s: &str) -> Matrix {
    Matrix::from_rows(
        s.split(';')
            .map(|row| row.split_whitespace().map(|x| parse_q(x).unwrap_or_else(|| panic!("bad entry {x}"))).collect())
            .collect(),
    )
}

/// Square block matrix from equally sized blocks; `"0"` is a zero block.
pub fn blocks(rows: &[&[&str]]) -> Matrix {
    let size = rows
        .iter()
        .flat_map(|r| r.iter())
        .find(|b| b.trim() != "0")
        .map(|b| mat(b).rows())
        .expect("one nonzero block");
    let n = size * rows.len();
    let mut out = vec![vec![Q::from_integer(0.into()); n]; n];
    for (bi, row) in rows.iter().enumerate() {
        for (bj, b) in row.iter().enumerate() {
            if b.trim() == "0" {
                continue;
            }
            let m = mat(b);
            for i in 0..size {
                for j in 0..size {
                    out[bi * size + i][bj * size + j] = m[(i, j)].clone();
                }
            }
        }
    }
    Matrix::from_rows(out)
}

/// A linear combination such as `"8σ1 -2σ2 -1/2ζ3 + η4"` in coordinates of the named basis.
pub fn combo(names: &[String], s: &str) -> Vec<Q> {
    let mut out = vec![Q::from_integer(0.into()); names.len()];
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            i += 1;
        }
        let coeff: String = chars[start..i].iter().collect();
        let coeff = if coeff.is_empty() { Q::from_integer(1.into()) } else { parse_q(&coeff).expect("coefficient") };
        let name_start = i;
        i += 1;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let name: String = chars[name_start..i].iter().collect();
        let k = names.iter().position(|n| *n == name).unwrap_or_else(|| panic!("no basis element {name}"));
        out[k] += coeff * Q::from_integer(sign.into());
    }
    out
}

/// Matrix of `m` restricted to the invariant span of `basis`, in that basis.
pub fn restricted(m: &Matrix, basis: &[Vec<Q>]) -> Option<Matrix> {
    let cols = basis.iter().map(|b| coordinates(&m.mul_vec(b), basis)).collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(&cols, basis.len()))
}

/// The matrix a full-basis action induces on the zero-holonomy basis.
pub fn induced_zero(s: &PaperSurface, full: &Matrix) -> Matrix {
    let b = &s.homology.bases;
    let cols: Vec<_> = b
        .zero
        .iter()
        .map(|c| {
            let y = full.mul_vec(&s.context.express_full(c).unwrap());
            s.context.express_zero(&stm::linalg::combine(&y, &b.full, c.len())).unwrap()
        })
        .collect();
    Matrix::from_columns(&cols, b.zero.len())
}

/// Matrix whose column for each basis curve is its printed image.
pub fn image_matrix(s: &PaperSurface, images: &[(&str, &str)]) -> Matrix {
    let names = &s.homology.bases.full_names;
    let cols: Vec<_> = names.iter().map(|n| s.full(images.iter().find(|(src, _)| src == n).expect("image").1)).collect();
    Matrix::from_columns(&cols, names.len())
}

pub fn commute(a: &Matrix, b: &Matrix) -> bool {
    a * b == b * a
}

/// Rank of a list of square matrices viewed as vectors.
pub fn matrix_rank(ms: &[Matrix]) -> usize {
    stm::linalg::rank_of(&ms.iter().map(|m| m.as_slice().to_vec()).collect::<Vec<_>>())
}

/// `X g X⁻¹`.
pub fn conj(x: &Matrix, g: &Matrix) -> Matrix {
    &(x * g) * &x.inverse().expect("invertible conjugator")
}

pub mod octahedron {
    use super::*;

    pub fn omega() -> Matrix {
        blocks(&[
            &["0", "1 1 1 0; 1 0 1 1; 1 1 0 1; 0 1 1 1"],
            &["-1 -1 -1 0; -1 0 -1 -1; -1 -1 0 -1; 0 -1 -1 -1", "0"],
        ])
    }

    pub fn rho() -> [Matrix; 2] {
        [
            blocks(&[&["1 0 0 0; 0 0 1 0; 0 0 0 1; 0 1 0 0", "0"], &["0", "0 1 0 0; 0 0 1 0; 1 0 0 0; 0 0 0 1"]]),
            blocks(&[&["0 0 0 1; 1 0 0 0; 0 0 1 0; 0 1 0 0", "0"], &["0", "0 1 0 0; 0 0 0 1; 0 0 1 0; 1 0 0 0"]]),
        ]
    }

    /// `α(T³)` on `Σ1, Σ4, Σ7, Z2, Z3, Z6`.
    pub fn alpha_t3() -> Matrix {
        blocks(&[&["1 0 0; 0 1 0; 0 0 1", "0 0 1; 1 0 0; 0 1 0"], &["0", "1 0 0; 0 1 0; 0 0 1"]])
    }

    /// `α(S⁻¹T)` exactly as printed next to `α(T³)`; it is singular.
    pub fn alpha_sinv_t_printed() -> Matrix {
        blocks(&[&["-1 -1 -1; 0 0 1; 1 0 0", "1 0 1; 0 0 0; 0 0 -1"], &["0 0 1; 1 0 0; -1 0 -1", "0"]])
    }

    /// `α(S⁻¹T)` as determined by the printed images of the `σ` and `ζ` curves.
    pub fn alpha_sinv_t() -> Matrix {
        blocks(&[&["-1 -1 -1; 0 0 1; 1 0 0", "1 1 1; 0 -1 0; 0 0 -1"], &["0 0 1; 1 0 0; -1 -1 -1", "0"]])
    }

    pub const T3_IMAGES: [(&str, &str); 8] = [
        ("σ1", "σ1"),
        ("σ4", "σ4"),
        ("σ7", "σ7"),
        ("σ10", "σ10"),
        ("ζ1", "σ1+σ4+σ7+ζ1"),
        ("ζ2", "σ1+σ7+σ10+ζ2"),
        ("ζ3", "σ1+σ4+σ10+ζ3"),
        ("ζ6", "σ4+σ7+σ10+ζ6"),
    ];

    pub const SINV_T_IMAGES: [(&str, &str); 8] = [
        ("σ1", "σ7-ζ3"),
        ("σ4", "σ10-ζ1"),
        ("σ7", "σ4-ζ2"),
        ("σ10", "σ1-ζ6"),
        ("ζ1", "σ1"),
        ("ζ2", "σ10"),
        ("ζ3", "σ4"),
        ("ζ6", "σ7"),
    ];
}

pub mod cube {
    use super::*;

    const A: &str = "1 0 0 0 0 0; 0 1 0 0 0 0; 0 0 1 0 0 1; 0 0 0 0 1 0; 0 0 0 0 0 1; 0 0 0 0 0 0";
    const B: &str = "1 0 0 1 0 0; 1 1 0 0 0 0; 0 1 1 0 0 0; 0 0 0 1 0 1; 0 1 0 0 0 1; 1 0 0 0 0 1";
    const C: &str = "-1 0 0 -1 -1 0; -1 -1 0 0 -1 0; 0 -1 -1 0 -1 0; 0 0 -1 -1 -1 0; 0 0 -1 -1 0 -1; 0 -1 -1 0 0 -1";

    /// `[[0, -A, -B], [Aᵀ, 0, -C], [Bᵀ, Cᵀ, 0]]`.
    pub fn omega() -> Matrix {
        let (a, b, c) = (mat(A), mat(B), mat(C));
        let neg = |m: &Matrix| m.scale(&Q::from_integer((-1).into()));
        let s = |m: Matrix| {
            m.to_rows().iter().map(|r| r.iter().map(stm::linalg::fmt_q).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(";")
        };
        let (na, nb, nc) = (s(neg(&a)), s(neg(&b)), s(neg(&c)));
        let (at, bt, ct) = (s(a.transpose()), s(b.transpose()), s(c.transpose()));
        blocks(&[&["0", &na, &nb], &[&at, "0", &nc], &[&bt, &ct, "0"]])
    }

    pub fn rho_pi1() -> Matrix {
        blocks(&[
            &[
                "0 0 1 -2 4 -1; 0 1 0 0 -1 0; 1 0 0 2 -5 1; 0 0 0 0 -1 1; 0 0 0 0 -1 0; 0 0 0 1 -1 0",
                "0 -2 -2 0 0 0; 0 0 0 0 0 0; 0 2 2 0 0 0; 0 0 0 0 0 0; 0 0 0 0 0 0; 0 0 0 0 0 0",
                "0",
            ],
            &[
                "0 0 0 -3/2 3 -1/2; 0 0 0 1/2 -2 -1/2; 0 0 0 0 -1 0; 0 0 0 0 -1 0; 0 0 0 -1/2 1 1/2; 0 0 0 3/2 -4 1/2",
                "0 -2 -1 0 0 1; 0 1 0 0 0 0; 0 0 1 0 0 0; 0 1 0 0 1 0; 0 -1 0 1 0 0; 1 2 1 0 0 0",
                "0",
            ],
            &[
                "0 0 0 1/2 -1 1/2; 0 0 0 -1 3 0; 0 0 0 -1/2 2 -1/2; 0 0 0 1 -2 0; 0 0 0 1/2 0 1/2; 0 0 0 -1/2 1 -1/2",
                "0 1 1 0 0 0; 0 -1 -1 0 0 0; 0 -1 -1 0 0 0; 0 1 1 0 0 0; 0 0 0 0 0 0; 0 0 0 0 0 0",
                "0 1 0 0 0 0; 1 0 0 0 0 0; 0 0 0 1 0 0; 0 0 1 0 0 0; 0 0 0 0 0 1; 0 0 0 0 1 0",
            ],
        ])
    }

    pub const E1: &str = "2σ1-2σ3+ζ1-ζ2-ζ3-ζ4-2ζ8+2η2+2η3+η6+η8";
    pub const E2: &str = "-η1-η2-η3-η4-η6-η8";
    pub const V1: &str = "8σ1-2σ2-10σ3-4σ5-4σ8+7ζ1-3ζ2-2ζ3-2ζ4+ζ5-9ζ8+3η2+8η3-7η4-η6+3η8";
    pub const PI3_V1: &str = "-2σ1-2σ2+2σ5+2σ8-ζ1-ζ2+ζ5+ζ8-2η1-4η3+4η6+2η8";
    pub const L2: [&str; 2] = ["η1-η2+η3-η4", "-η1-η3+η6+η8"];
    pub const H1: [&str; 3] = ["η1-η2-η3+η4-η6+η8", "η1+η2-η3-η4+η6-η8", "-η1+η2+η3-η4-η6+η8"];
    pub const H2: [&str; 3] = [
        "σ1-σ3",
        "σ1-σ3+ζ1-ζ2+ζ5-ζ8+η2-η4",
        "4σ1-4σ3+3ζ1-ζ2+ζ5-3ζ8-η1+2η2+η3-2η4-η6+η8",
    ];
    pub const P1: [&str; 3] = [
        "σ1-σ2-σ5+σ8",
        "-σ1+σ2-σ5+σ8-ζ1+ζ2-ζ5+ζ8-η2+η4",
        "12σ1-4σ2-12σ3-2σ5-2σ8-4σ9+9ζ1-5ζ2-2ζ3-2ζ4+3ζ5-11ζ8-3η1+8η2+5η3-6η4-η6+3η8",
    ];
    pub const P2: [&str; 3] = ["-ζ1+ζ2-ζ3+ζ4", "2σ1-2σ3+2ζ1-ζ3-ζ4+ζ5-ζ8-η1+η2+η3-η4", "-ζ3+ζ4-ζ5+ζ8"];

    pub fn rho_l() -> [Matrix; 3] {
        [mat("-1 1; 0 1"), mat("1 0; 0 1"), mat("0 -1; 1 -1")]
    }

    pub fn rho_h1() -> [Matrix; 3] {
        [mat("-1 1 0; 0 1 0; 0 1 -1"), mat("0 1 -1; 1 0 -1; 0 0 -1"), mat("1 0 -1; 0 0 -1; 0 1 -1")]
    }

    pub fn rho_h2() -> [Matrix; 3] {
        [mat("-1 0 0; 0 1 0; 0 0 -1"), mat("0 1 0; 1 0 0; 0 0 -1"), mat("1/2 -1/2 2; 1/2 -1/2 -2; 1/4 1/4 0")]
    }

    pub fn rho_p1() -> [Matrix; 3] {
        [mat("0 -1 2; 0 1 0; 1/2 1/2 0"), mat("0 1 0; 1 0 0; 0 0 -1"), mat("0 -1 2; 0 1 0; -1/2 1/2 -1")]
    }

    pub fn rho_p2() -> [Matrix; 3] {
        [mat("1 0 0; 0 0 1; 0 1 0"), mat("-1 0 0; 0 -1 0; 0 0 1"), mat("0 0 1; 1 0 0; 0 1 0")]
    }

    pub fn h_intertwiner() -> Matrix {
        mat("1 0 -1; 1 2 1; 2 0 2")
    }

    pub fn p_intertwiner() -> Matrix {
        mat("1 1 2; 0 2 0; -1 1 2")
    }
}

pub mod mutetrahedron {
    use super::*;

    /// The printed intersection matrix, whose rows and columns run over `ζ` before `σ`.
    pub fn omega_printed() -> Matrix {
        blocks(&[
            &["0", "-1 0 -1 -1 0; -1 -1 0 -1 0; -1 -1 -1 0 0; 0 -1 -1 -1 -1; 0 0 0 -1 -1"],
            &["1 1 1 0 0; 0 1 1 1 0; 1 0 1 1 0; 1 1 0 1 1; 0 0 0 1 1", "0"],
        ])
    }

    /// Permutation matrix taking `(σ, ζ)` coordinates to `(ζ, σ)` coordinates.
    pub fn swap_halves() -> Matrix {
        let mut rows = vec![vec![0i64; 10]; 10];
        for i in 0..5 {
            rows[i][i + 5] = 1;
            rows[i + 5][i] = 1;
        }
        Matrix::from_int_rows(&rows)
    }

    const RHO1_S: &str = "0 0 1 0 1; 0 0 0 1 0; 1 0 0 0 -1; 0 1 0 0 0; 0 0 0 0 1";
    const RHO1_Z: &str = "0 0 1 0 -1; 0 0 0 1 0; 1 0 0 0 1; 0 1 0 0 0; 0 0 0 0 1";
    const RHO2_S: &str = "0 0 1 0 1; 0 1 0 0 0; 0 0 -1 0 0; 0 0 0 1 0; 1 0 1 0 0";
    const RHO2_Z: &str = "0 0 -1 0 1; 0 0 0 1 0; 0 0 1 0 0; 0 1 0 0 0; 1 0 1 0 0";
    const RHO3: &str = "1 1 0 1 0; 0 0 0 -1 0; -1 0 0 0 1; 0 -1 0 0 0; 1 1 1 1 0";

    pub fn rho() -> [Matrix; 3] {
        [
            blocks(&[&[RHO1_S, "0"], &["0", RHO1_Z]]),
            blocks(&[&[RHO2_S, "0"], &["0", RHO2_Z]]),
            blocks(&[&[RHO3, "0"], &["0", RHO3]]),
        ]
    }

    pub fn rho3_sigma_block() -> Matrix {
        mat(RHO3)
    }

    /// `α(S⁻¹T)` on `Σ1, Σ3, Σ4, Σ6, Z1, Z3, Z4, Z6`.
    pub fn alpha_a() -> Matrix {
        blocks(&[
            &["0", "0 0 -1 0; -1 -1 -1 -1; 0 0 1 1; 1 0 1 0"],
            &["0 0 -1 0; 0 1 0 0; 1 0 1 0; 0 0 0 1", "1 0 1 1; 0 0 -1 0; -1 -1 -1 -1; 0 1 1 1"],
        ])
    }

    /// `α(TST⁻¹)`.
    pub fn alpha_b() -> Matrix {
        blocks(&[
            &["1 0 1 0; 0 1 0 0; 0 0 -1 0; 0 0 0 1", "-1 0 -1 0; 0 -1 -1 -1; 1 -1 1 2; 0 0 1 0"],
            &["0", "0 0 -1 -1; 1 1 1 1; 0 0 1 0; -1 0 -1 0"],
        ])
    }

    pub const TST_IMAGES: [(&str, &str); 10] = [
        ("σ1", "σ1"),
        ("σ3", "σ3"),
        ("σ4", "σ1-σ4+σ8"),
        ("σ6", "σ6"),
        ("σ8", "σ8"),
        ("ζ1", "-2σ1+1/2σ3+1/2σ4-1/2σ6-3/2σ8+1/2ζ1+1/2ζ3-1/2ζ6+1/2ζ8"),
        ("ζ3", "-σ1-1/2σ3-3/2σ4-1/2σ6+1/2σ8+1/2ζ1+1/2ζ3+1/2ζ6-1/2ζ8"),
        ("ζ4", "-2σ1-1/2σ3+1/2σ4+1/2σ6-3/2σ8-1/2ζ1+1/2ζ3+ζ4-1/2ζ6+1/2ζ8"),
        ("ζ6", "-σ1-1/2σ3+3/2σ4-1/2σ6-5/2σ8-1/2ζ1+1/2ζ3+1/2ζ6+1/2ζ8"),
        ("ζ8", "-σ1+1/2σ3-1/2σ4-1/2σ6-3/2σ8+1/2ζ1-1/2ζ3+1/2ζ6+1/2ζ8"),
    ];

    /// The printed simultaneous eigenspaces `V(λ1, λ2, λ3)`.
    pub const EIGENSPACES: [([i64; 3], [&str; 2]); 5] = [
        ([-1, -1, 1], ["-σ1+σ4", "-ζ3+ζ6"]),
        ([-1, 1, 1], ["-σ3+σ6", "-ζ1+ζ4"]),
        ([1, -1, -1], ["-σ4+σ8", "-ζ1+ζ8"]),
        ([1, 1, -1], ["-σ1+σ3+σ6-σ8", "ζ3-ζ4+ζ6-ζ8"]),
        ([1, 1, 1], ["-σ1-σ8", "-ζ4-ζ8"]),
    ];

    /// Conjugating words of the printed Lie-algebra basis, in `A = α(S⁻¹T)` and `B = α(TST⁻¹)`.
    pub const CONJUGATORS: [&str; 12] =
        ["", "A", "AA", "BAA", "ABAA", "AABAA", "BAABAA", "ABAABAA", "AABAABAA", "BAABAABAABABA", "BAABAAA", "AABABA"];
}

/// Product of a word over named matrices, leftmost factor first; the empty word is the identity.
pub fn word_product(word: &str, named: &[(char, &Matrix)], dim: usize) -> Matrix {
    word.chars().fold(Matrix::identity(dim), |acc, c| {
        let m = named.iter().find(|(n, _)| *n == c).unwrap_or_else(|| panic!("no matrix {c}")).1;
        &acc * m
    })
}
