//! The explicit divisible classes: 31 in Π′ and 19 mixing Sym² and Π′.

use sympfin::SympSpace;

use crate::error::Result;
use crate::h2::{q, qr, SymPoly, Q};
use crate::model::{a3, tau_index, tau_of, H4Vector};

pub type Tau = [u8; 4];

/// All τ in the subgroup generated by `gens`.
pub fn subgroup(gens: &[Tau]) -> Vec<Tau> {
    let space = a3();
    let g: Vec<Vec<u8>> = gens.iter().map(|t| t.to_vec()).collect();
    space.span_points(&g).into_iter().map(|i| to_tau(&tau_of(i))).collect()
}

fn to_tau(v: &[u8]) -> Tau {
    [v[0], v[1], v[2], v[3]]
}

pub fn add(a: &Tau, b: &Tau) -> Tau {
    [(a[0] + b[0]) % 3, (a[1] + b[1]) % 3, (a[2] + b[2]) % 3, (a[3] + b[3]) % 3]
}

/// Whether the plane spanned by `gens` is isotropic for `space`.
pub fn is_isotropic(space: &SympSpace, gens: &[Tau; 2]) -> bool {
    space.omega(&gens[0], &gens[1]) == 0
}

/// One family: a plane Λ and the translations τ′.
#[derive(Clone, Debug)]
pub struct TranslateFamily {
    pub label: &'static str,
    pub lambda: [Tau; 2],
    pub shifts: Vec<Tau>,
}

/// The nine families of translated plane differences.
pub fn xxxi_families() -> Vec<TranslateFamily> {
    let e12 = subgroup(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
    let e34 = subgroup(&[[0, 0, 1, 0], [0, 0, 0, 1]]);
    let nonzero = |v: Vec<Tau>| v.into_iter().filter(|t| *t != [0, 0, 0, 0]).collect::<Vec<_>>();
    vec![
        TranslateFamily { label: "i", lambda: [[1, 0, 0, 0], [0, 1, 0, 0]], shifts: nonzero(e34) },
        TranslateFamily {
            label: "ii",
            lambda: [[0, 0, 1, 0], [0, 0, 0, 1]],
            shifts: nonzero(e12).into_iter().filter(|t| *t != [1, 0, 0, 0]).collect(),
        },
        TranslateFamily {
            label: "iii",
            lambda: [[1, 0, 0, 1], [0, 1, 2, 1]],
            shifts: vec![[0, 1, 1, 2], [1, 0, 0, 2], [1, 1, 1, 1], [2, 2, 2, 2]],
        },
        TranslateFamily {
            label: "iv",
            lambda: [[1, 0, 0, 0], [0, 1, 0, 1]],
            shifts: vec![[0, 0, 0, 1], [2, 0, 1, 2], [1, 0, 2, 0], [1, 0, 2, 1]],
        },
        TranslateFamily { label: "v", lambda: [[1, 0, 0, 0], [0, 1, 1, 1]], shifts: vec![[0, 0, 1, 1], [1, 0, 0, 1]] },
        TranslateFamily { label: "vi", lambda: [[1, 0, 1, 1], [0, 1, 0, 1]], shifts: vec![[0, 1, 0, 2], [1, 0, 2, 2]] },
        TranslateFamily { label: "vii", lambda: [[1, 0, 1, 0], [0, 1, 0, 1]], shifts: vec![[0, 1, 0, 2], [1, 0, 2, 0]] },
        TranslateFamily { label: "viii", lambda: [[1, 0, 0, 0], [0, 1, 0, 2]], shifts: vec![[1, 0, 1, 0]] },
        TranslateFamily { label: "ix", lambda: [[1, 0, 1, 1], [0, 1, 2, 2]], shifts: vec![[1, 1, 0, 2]] },
    ]
}

/// A class of Π given by integer coefficients on the 81 `Z_τ`.
#[derive(Clone, Debug)]
pub struct PiClass {
    pub label: String,
    pub coeffs: Vec<i64>,
}

impl PiClass {
    pub fn to_vector(&self) -> H4Vector {
        let mut v = H4Vector::zero();
        for (i, &c) in self.coeffs.iter().enumerate() {
            v.pi_coords[i] = q(c);
        }
        v
    }
}

/// `Σ_{τ∈Λ}(Z_τ − Z_{τ+τ′})`.
pub fn translate_difference(label: String, lambda: &[Tau], shift: &Tau) -> PiClass {
    let mut coeffs = vec![0i64; 81];
    for t in subgroup(lambda) {
        coeffs[tau_index(&t)] += 1;
        coeffs[tau_index(&add(&t, shift))] -= 1;
    }
    PiClass { label, coeffs }
}

/// The 31 classes, in family order.
pub fn xxxi_classes() -> Vec<PiClass> {
    xxxi_families()
        .iter()
        .flat_map(|f| {
            f.shifts.iter().enumerate().map(move |(k, s)| translate_difference(format!("XXXI({})#{}", f.label, k + 1), &f.lambda, s))
        })
        .collect()
}

/// A Sym² polynomial plus `Σ_{τ∈Λ}(Z_τ − Z₀)`.
#[derive(Clone, Debug)]
pub struct MixedClass {
    pub label: String,
    pub poly: &'static str,
    pub lambda: [Tau; 2],
}

impl MixedClass {
    pub fn to_vector(&self) -> Result<H4Vector> {
        let mut v = H4Vector::sym(&SymPoly::parse(self.poly)?);
        let members = subgroup(&self.lambda);
        for t in &members {
            v.pi_coords[tau_index(t)] += Q::from_integer(1.into());
        }
        v.pi_coords[0] -= q(members.len() as i64);
        Ok(v)
    }

    pub fn third(&self) -> Result<H4Vector> {
        Ok(self.to_vector()?.scaled(&qr(1, 3)))
    }
}

/// The 19 mixed classes.
pub fn xix_classes() -> Vec<MixedClass> {
    let rows: [(&str, &'static str, [Tau; 2]); 19] = [
        ("i", "u2^2", [[0, 0, 0, 1], [0, 0, 1, 0]]),
        ("ii", "v2^2+v2u2+u2^2", [[0, 0, 0, 1], [0, 1, 1, 0]]),
        ("iii", "w2^2+w2u2+u2^2", [[0, 0, 1, 0], [0, 1, 0, 1]]),
        ("iv", "w2^2-w2u2+u2^2", [[0, 0, 1, 0], [0, 1, 0, 2]]),
        ("v", "w2^2-w2v2+w2u2+v2^2+v2u2+u2^2", [[0, 0, 1, 2], [0, 1, 0, 1]]),
        ("vi", "w1^2+w1u2+u2^2", [[0, 0, 0, 1], [1, 0, 2, 0]]),
        ("vii", "w1^2-w1u2+u2^2", [[0, 0, 0, 1], [1, 0, 1, 0]]),
        ("viii", "v1^2+v1u2+u2^2", [[0, 0, 1, 0], [1, 0, 0, 1]]),
        ("ix", "v1^2-v1u2+u2^2", [[0, 0, 1, 0], [1, 0, 0, 2]]),
        ("x", "v1^2+v1w1-v1u2+w1^2+w1u2+u2^2", [[0, 0, 1, 2], [1, 0, 0, 2]]),
        (
            "xi",
            "v1^2+v1w1-v1w2-v1v2+v1u2+w1^2+w1w2+w1v2-w1u2+w2^2-w2v2+w2u2+v2^2+v2u2+u2^2",
            [[0, 0, 1, 2], [1, 1, 0, 1]],
        ),
        (
            "xii",
            "v1^2-v1w1+v1w2-v1v2+v1u2+w1^2+w1w2-w1v2+w1u2+w2^2+w2v2-w2u2+v2^2+v2u2+u2^2",
            [[0, 0, 1, 1], [1, 2, 0, 1]],
        ),
        ("xiii", "u1^2", [[0, 1, 0, 0], [1, 0, 0, 0]]),
        ("xiv", "u1^2-u1v2+v2^2", [[0, 1, 0, 0], [1, 0, 0, 1]]),
        ("xv", "u1^2+u1v2+v2^2", [[0, 1, 0, 0], [1, 0, 0, 2]]),
        ("xvi", "u1^2+u1w1+w1^2", [[0, 1, 0, 2], [1, 0, 0, 0]]),
        ("xvii", "u1^2+u1w1-u1v2+w1^2+w1v2+v2^2", [[0, 1, 0, 2], [1, 0, 0, 1]]),
        ("xviii", "u1^2-u1w1+u1w2-u1u2+w1^2+w1w2-w1u2+w2^2+w2u2+u2^2", [[0, 1, 0, 1], [1, 0, 1, 0]]),
        ("xix", "u1^2+u1v1-u1w1+v1^2+v1w1+w1^2", [[0, 1, 2, 1], [1, 0, 0, 0]]),
    ];
    rows.into_iter().map(|(l, poly, lambda)| MixedClass { label: format!("XIX({l})"), poly, lambda }).collect()
}
