//! Plane counts, the ideals (M), (N), D of k[V], and the combined
//! representation Sym²(Λ²V) ⊕ k[V].

use crate::error::{Result, SympError};
use crate::rep::{sp_span_closure, span_closure, wedge_square, CombinedVector, GroupAlgebraElement, LinearAction, Module};
use crate::space::{Plane, SympSpace};
use crate::span::Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneCounts {
    pub lines: u64,
    pub planes: u64,
    pub isotropic: u64,
    pub nonisotropic: u64,
}

impl PlaneCounts {
    /// Closed formulas in dimension `n` over F_q.
    pub fn formula(q: u64, n: u32) -> Self {
        let lines = (q.pow(n) - 1) / (q - 1);
        let planes = (q.pow(n) - 1) * (q.pow(n - 1) - 1) / ((q * q - 1) * (q - 1));
        let isotropic = (q.pow(n) - 1) * (q.pow(n - 2) - 1) / ((q * q - 1) * (q - 1));
        let nonisotropic = q.pow(n - 2) * (q.pow(n) - 1) / (q * q - 1);
        Self { lines, planes, isotropic, nonisotropic }
    }
}

/// Counts planes by enumeration and checks them against the closed formulas.
pub fn plane_counts(space: &SympSpace) -> Result<PlaneCounts> {
    let q = space.q() as u64;
    let formula = PlaneCounts::formula(q, space.dim as u32);
    let planes = space.planes();
    let gl2 = (q * q - 1) * (q * q - q);
    let by_pairs = space.independent_pairs() / gl2;
    let iso = planes.iter().filter(|p| p.isotropic).count() as u64;
    let counted = PlaneCounts {
        lines: space.lines().len() as u64,
        planes: planes.len() as u64,
        isotropic: iso,
        nonisotropic: planes.len() as u64 - iso,
    };
    let checks = [
        ("lines", formula.lines, counted.lines),
        ("planes", formula.planes, counted.planes),
        ("planes from pairs", formula.planes, by_pairs),
        ("isotropic planes", formula.isotropic, counted.isotropic),
        ("non-isotropic planes", formula.nonisotropic, counted.nonisotropic),
    ];
    for (what, f, e) in checks {
        if f != e {
            return Err(SympError::CountMismatch { what, formula: f, enumerated: e });
        }
    }
    Ok(counted)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealDims {
    pub dim_m: usize,
    pub dim_n: usize,
    pub dim_d: usize,
    /// Every plane sum, isotropic or not, lies in (N).
    pub m_equals_n: bool,
    /// The difference span and the ideal product 𝔪·(N) agree.
    pub d_constructions_agree: bool,
}

/// The ideals of k[V] attached to one symplectic space.
#[derive(Clone, Debug)]
pub struct Ideals {
    pub planes: Vec<Plane>,
    pub n: Span,
    pub m: Span,
    pub d: Span,
    pub d_product: Span,
}

impl Ideals {
    pub fn compute(space: &SympSpace) -> Self {
        let f = space.field;
        let len = space.point_count();
        let planes = space.planes();
        let sums: Vec<(bool, GroupAlgebraElement)> =
            planes.iter().map(|p| (p.isotropic, GroupAlgebraElement::sum_over(space, &p.points))).collect();
        let points: Vec<Vec<u8>> = (0..len).map(|v| space.point(v)).collect();
        let mut n = Span::new(f, len);
        let mut d = Span::new(f, len);
        for (_, s) in sums.iter().filter(|(iso, _)| !iso) {
            for t in points.iter().map(|v| s.translate(space, v)) {
                d.insert(t.sub(s, f).0);
                n.insert(t.0);
            }
        }
        let mut m = n.clone();
        for (_, s) in sums.iter().filter(|(iso, _)| *iso) {
            m.insert(s.0.clone());
        }
        // 𝔪 is generated by X_e - 1 for the basis vectors e.
        let mut d_product = Span::new(f, len);
        for g in n.basis() {
            let g = GroupAlgebraElement(g.clone());
            for k in 0..space.dim {
                d_product.insert(g.translate(space, &space.basis_vector(k)).sub(&g, f).0);
            }
        }
        Self { planes, n, m, d, d_product }
    }

    pub fn dims(&self) -> IdealDims {
        IdealDims {
            dim_m: self.m.dim(),
            dim_n: self.n.dim(),
            dim_d: self.d.dim(),
            m_equals_n: self.m.same_as(&self.n),
            d_constructions_agree: self.d.same_as(&self.d_product),
        }
    }
}

pub fn ideal_dims(space: &SympSpace) -> IdealDims {
    Ideals::compute(space).dims()
}

/// Whether `X = Σ X_i` lies in `d`.
pub fn contains_total(space: &SympSpace, d: &Span) -> bool {
    d.contains(&GroupAlgebraElement::total(space).0)
}

pub fn x_in_d_check(space: &SympSpace) -> bool {
    contains_total(space, &Ideals::compute(space).d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CombinedDims {
    pub dim_o: usize,
    pub dim_u: usize,
    pub ker_pr1: usize,
    pub ker_pr2: usize,
    /// pr₁(O) = U.
    pub pr1_is_u: bool,
    /// pr₂(O) = (N).
    pub pr2_is_n: bool,
}

/// The seed `x = (v∧w)²` and `y = Σ_{i ∈ ⟨v,w⟩} X_i` for a pair with ω(v,w) = 1.
pub fn hyperbolic_seed(space: &SympSpace, v: &[u8], w: &[u8]) -> CombinedVector {
    assert_eq!(space.omega(v, w), 1, "hyperbolic pair");
    CombinedVector {
        sym_part: wedge_square(space, v, w),
        alg_part: GroupAlgebraElement::sum_over(space, &space.span_points(&[v.to_vec(), w.to_vec()])),
    }
}

/// O and U for the hyperbolic pair `(e_a, e_b)`, with (N) supplied for the projection check.
pub fn combined_dims_for_pair(space: &SympSpace, n: &Span, a: usize, b: usize) -> Result<CombinedDims> {
    let seed = hyperbolic_seed(space, &space.basis_vector(a), &space.basis_vector(b));
    let gens = space.transvections();
    let u = sp_span_closure(space, &[seed.sym_part.clone()], &gens, Module::Sym2)?;
    let seeds: Vec<Vec<u8>> = (0..space.point_count())
        .map(|v| CombinedVector { sym_part: seed.sym_part.clone(), alg_part: seed.alg_part.translate(space, &space.point(v)) }.flatten())
        .collect();
    let o = sp_span_closure(space, &seeds, &gens, Module::Combined)?;
    let s = seed.sym_part.len();
    let pr1 = Span::from_vectors(space.field, s, &o.basis().iter().map(|r| r[..s].to_vec()).collect::<Vec<_>>());
    let pr2 = Span::from_vectors(space.field, n.len(), &o.basis().iter().map(|r| r[s..].to_vec()).collect::<Vec<_>>());
    Ok(CombinedDims {
        dim_o: o.dim(),
        dim_u: u.dim(),
        ker_pr1: o.dim() - pr1.dim(),
        ker_pr2: o.dim() - pr2.dim(),
        pr1_is_u: pr1.same_as(&u),
        pr2_is_n: pr2.same_as(n),
    })
}

pub fn combined_dims(space: &SympSpace) -> Result<CombinedDims> {
    let ideals = Ideals::compute(space);
    combined_dims_for_pair(space, &ideals.n, 0, space.dim / 2)
}

/// Size of the orbit of a plane under the group generated by the transvections.
pub fn plane_orbit_size(space: &SympSpace, start: &Plane) -> usize {
    let gens = space.transvections();
    let mut seen = std::collections::BTreeSet::from([start.clone()]);
    let mut stack = vec![start.clone()];
    while let Some(p) = stack.pop() {
        for g in &gens {
            let img = p.image(space, g);
            if seen.insert(img.clone()) {
                stack.push(img);
            }
        }
    }
    seen.len()
}

/// Translations by the basis vectors, acting on k[V].
pub fn translation_actions(space: &SympSpace) -> Vec<LinearAction> {
    (0..space.dim).map(|k| LinearAction::translation(space, &space.basis_vector(k), Module::GroupAlgebra)).collect()
}

/// (N) as the translation closure of the non-isotropic plane sums.
pub fn ideal_by_closure(space: &SympSpace, isotropic_too: bool) -> Result<Span> {
    let seeds: Vec<Vec<u8>> = space
        .planes()
        .iter()
        .filter(|p| isotropic_too || !p.isotropic)
        .map(|p| GroupAlgebraElement::sum_over(space, &p.points).0)
        .collect();
    span_closure(space.field, space.point_count(), &seeds, &translation_actions(space))
}
