//! One function per named report.

use std::cell::OnceCell;

use fock::hilb::{a2_gram_blocks, gen, goettsche_betti, hilb_basis_a2, st, star};
use fock::kummer::{kummer_pairing, theta_blocks, theta_image_table};
use fock::ops::pairing;
use fock::Q;
use intlat::EquivariantInvariants;
use kummer4::model::MODEL_RANK;
use kummer4::H4Model;
use quotientbb::gram::{discriminant, is_odd, z2_forms_agree};
use quotientbb::topology::checked_balance;
use quotientbb::{AllDegrees, FixedLocus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use sympfin::gxi::{expected_small_orbit, gxi_orbits, triples};
use sympfin::{combined_dims, ideal_dims, plane_counts, PlaneCounts, SympSpace};
use torusring::{betti, pairing_gram, TorusClass, DIM};

use crate::check::{Check, Report};
use crate::error::Result;
use crate::samples;

/// Shared state: the seed and the lazily assembled H⁴ model.
pub struct Context {
    pub seed: u64,
    model: OnceCell<H4Model>,
    degree_invariants: OnceCell<kummer4::DegreeInvariants>,
}

impl Context {
    pub fn new(seed: u64) -> Self {
        Self { seed, model: OnceCell::new(), degree_invariants: OnceCell::new() }
    }

    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }

    pub fn model(&self) -> Result<&H4Model> {
        if self.model.get().is_none() {
            let _ = self.model.set(H4Model::build()?);
        }
        Ok(self.model.get().expect("just set"))
    }

    pub fn degree_invariants(&self) -> Result<&kummer4::DegreeInvariants> {
        if self.degree_invariants.get().is_none() {
            let inv = kummer4::involution_invariants(self.model()?)?;
            let _ = self.degree_invariants.set(inv);
        }
        Ok(self.degree_invariants.get().expect("just set"))
    }
}

fn triple(e: &EquivariantInvariants) -> [usize; 3] {
    [e.l2, e.l1_minus, e.l1_plus]
}

pub fn torus_ring(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("torus-ring");
    let reference = "cohomology ring of the 2-torus";
    r.push(Check::equal("betti", [1, 4, 6, 4, 1], betti(), reference));
    let g = pairing_gram();
    let signed_permutation = (0..DIM).all(|i| g[i].iter().filter(|&&v| v != 0).count() == 1 && g[i].iter().all(|v| v.abs() <= 1))
        && (0..DIM).all(|j| g.iter().filter(|row| row[j] != 0).count() == 1);
    r.push(Check::holds("poincare-pairing-signed-permutation", signed_permutation, reference));
    r.push(Check::equal("top-class-integral", 1, TorusClass::point().integrate(), reference));
    r.push(Check::equal("supercommutativity-failures", 0, samples::supercommutativity_failures(), "graded commutativity"));
    r.push(Check::equal("associativity-sample-failures", 0, samples::associativity_failures(&mut ctx.rng(1)), "associativity"));
    Ok(r)
}

pub fn hilb2_basis(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("hilb2-basis");
    let reference = "integral basis of H*(A^[2])";
    r.push(Check::equal("betti", [1, 4, 13, 32, 44, 32, 13, 4, 1], goettsche_betti(2), "Betti numbers of A^[2]"));
    let basis = hilb_basis_a2();
    r.push(Check::equal("basis-size", 144, basis.len(), reference));
    let blocks = a2_gram_blocks(&basis);
    let bad: Vec<u32> = blocks.iter().filter(|b| !b.unimodular()).map(|b| b.degree).collect();
    r.push(Check::equal("non-unimodular-blocks", Vec::<u32>::new(), bad, reference));
    let q2: Vec<String> = (1..=4).map(|i| pairing(&st(&[(2, gen(i))]), &st(&[(2, star(i))])).to_string()).collect();
    r.push(Check::equal("q2-dual-pairings", vec!["2"; 4], q2, "pairing of q2(a_i) with q2(a_i*)"));
    r.push(Check::equal("adjointness-sample-failures", 0, samples::adjointness_failures(&mut ctx.rng(2)), "adjoint of creation operators"));
    Ok(r)
}

pub fn hilb3_theta(_ctx: &Context) -> Result<Report> {
    let mut r = Report::new("hilb3-theta");
    let reference = "pullback to the generalized Kummer fourfold";
    let table = theta_image_table();
    let count = |d: u32| table.iter().filter(|e| e.degree == d).count();
    let betti_k2 = [1, 0, count(2), count(3), MODEL_RANK, count(5), count(6), 0, 1];
    r.push(Check::equal("kummer-betti", [1, 0, 7, 8, 108, 8, 7, 0, 1], betti_k2, "Betti numbers of K2(A)"));
    for b in theta_blocks(&table) {
        if b.degree == 4 {
            r.push(Check::equal("degree-4-image-discriminant", "31381059609", b.det.to_string(), reference));
        } else {
            r.push(Check::holds(format!("degree-{}-unimodular", b.degree), b.unimodular(), reference));
        }
    }
    let one = TorusClass::one;
    let half = Q::new(1, 2);
    let mut deg3 = Vec::new();
    let mut deg5 = Vec::new();
    for i in 1..=4 {
        for j in (1..=4).filter(|&j| j != i) {
            let a = st(&[(1, star(i)), (1, one()), (1, one())]).scale(half);
            let b = st(&[(1, TorusClass::product_of(&[i, j])), (1, star(j)), (1, one())]);
            deg3.push(kummer_pairing(&a, &b)?.to_string());
        }
        let a = st(&[(2, gen(i)), (1, one())]).scale(half);
        let b = st(&[(2, star(i)), (1, one())]);
        deg5.push(kummer_pairing(&a, &b)?.to_string());
    }
    let odd_reference = "dual bases of odd cohomology of K2(A)";
    r.push(Check::equal("odd-pairing-q1-q1q1", vec!["1"; 12], deg3, odd_reference));
    r.push(Check::equal("odd-pairing-q2-q2", vec!["-1"; 4], deg5, odd_reference));
    Ok(r)
}

fn plane_count_row(p: &PlaneCounts) -> serde_json::Value {
    json!({ "lines": p.lines, "planes": p.planes, "isotropic": p.isotropic, "nonisotropic": p.nonisotropic })
}

pub fn symplectic_tables(ctx: &Context, primes: &[u8]) -> Result<Report> {
    let mut r = Report::new("symplectic-tables");
    let reference = "ideals of the group algebra of a symplectic F_q^4";
    for &q in primes {
        let expected = match q {
            2 => (11, 5, 11, 6),
            3 => (50, 31, 51, 20),
            _ => (355, 270, 375, 20),
        };
        let space = SympSpace::standard(q, 4)?;
        let counts = plane_counts(&space)?;
        r.push(Check::equal(
            format!("q{q}/plane-counts"),
            plane_count_row(&PlaneCounts::formula(q as u64, 4)),
            plane_count_row(&counts),
            "orbit counts of lines and planes",
        ));
        let ideals = ideal_dims(&space);
        let combined = combined_dims(&space)?;
        r.push(Check::equal(
            format!("q{q}/dimensions"),
            json!({ "dim_N": expected.0, "dim_D": expected.1, "dim_O": expected.2, "dim_U": expected.3 }),
            json!({ "dim_N": ideals.dim_n, "dim_D": ideals.dim_d, "dim_O": combined.dim_o, "dim_U": combined.dim_u }),
            reference,
        ));
        r.push(Check::holds(format!("q{q}/M-equals-N"), ideals.m_equals_n, reference));
        r.push(Check::holds(format!("q{q}/D-constructions-agree"), ideals.d_constructions_agree, reference));
        r.push(Check::holds(format!("q{q}/projections"), combined.pr1_is_u && combined.pr2_is_n, reference));
        if q == 3 {
            r.push(Check::equal("q3/kernels", json!({"ker_pr1": 31, "ker_pr2": 1}), json!({"ker_pr1": combined.ker_pr1, "ker_pr2": combined.ker_pr2}), reference));
        }
        let failures = samples::transvection_failures(&mut ctx.rng(10 + q as u64), q);
        r.push(Check::equal(format!("q{q}/transvection-sample-failures"), 0, failures, "symplectic transvections"));
    }
    Ok(r)
}

pub fn gxi_orbits_report(_ctx: &Context) -> Result<Report> {
    let mut r = Report::new("gxi-orbits");
    let reference = "orbits of a subgroup of Sp on planes of F_2^4";
    let orbits = gxi_orbits();
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    r.push(Check::equal("planes", 35, triples().len(), reference));
    r.push(Check::equal("orbit-sizes", [5, 30], sizes, reference));
    let small = orbits.iter().find(|o| o.len() == 5).map(|o| o.iter().cloned().collect::<std::collections::BTreeSet<_>>());
    r.push(Check::holds("small-orbit-as-listed", small == Some(expected_small_orbit()), reference));
    Ok(r)
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn h4_lattice(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("h4-lattice");
    let reference = "integral basis of H^4 of the Kummer fourfold";
    let model = ctx.model()?;
    let c = kummer4::certify(model)?;
    let p = |b: u32, k: u32| (intlat::int(b as i64).pow(k)).to_string();
    r.push(Check::equal("discr-sym", format!("{}", intlat::int(2).pow(14) * intlat::int(3).pow(38)), c.discr_sym.to_string(), reference));
    r.push(Check::equal("discr-pi-prime", p(3, 84), c.discr_pi_prime.to_string(), reference));
    r.push(Check::equal("discr-sym-sat", p(3, 22), c.discr_sym_sat.to_string(), reference));
    r.push(Check::equal("discr-pi-sat", p(3, 22), c.discr_pi_sat.to_string(), reference));
    r.push(Check::equal("det-full", "1", c.det_full.to_string(), reference));
    r.push(Check::holds("full-integral", c.full_is_integral, reference));
    let mut sym_q = vec!["2"; 7];
    sym_q.extend(["3"; 8]);
    r.push(Check::equal("quotient-sym", sym_q, strings(&c.sym_quotient), reference));
    r.push(Check::equal("quotient-pi", vec!["3"; 31], strings(&c.pi_quotient), reference));
    let mut full_q = vec!["3"; 19];
    full_q.push("27");
    r.push(Check::equal("quotient-full", full_q, strings(&c.full_quotient), reference));
    r.push(Check::holds("saturations-as-glued", c.sym_over_is_sat && c.pi_over_is_sat, reference));
    r.push(Check::holds("saturation-idempotent", c.sat_idempotent, reference));
    r.push(Check::holds("complement-of-sym-is-pi", c.complement_discr_matches, reference));

    let id = kummer4::class_identities(model)?;
    let ids = "identities between Chern, W and Y_p classes";
    r.push(Check::holds("w-formula", id.w_formula, ids));
    r.push(Check::holds("c2-third-of-sum", id.c2_is_third_of_sum, ids));
    r.push(Check::holds("c2-from-yp", id.c2_from_yp, ids));
    r.push(Check::equal("pairings-with-e2", json!({"W": "243", "Y_p": "-9", "Z0": "-12", "e2": "324"}),
        json!({"W": id.w_dot_e2.to_string(), "Y_p": id.yp_dot_e2.to_string(), "Z0": id.z0_dot_e2.to_string(), "e2": id.e4.to_string()}), ids));
    r.push(Check::equal("sym-pi-intersection", json!({"dimension": 1, "generator": "3c2"}),
        json!({"dimension": id.sym_pi_dimension, "generator": format!("{}c2", id.sym_pi_generator_multiple)}), ids));
    r.push(Check::equal("c2-content", "1", id.c2_content.to_string(), ids));

    let x = kummer4::fock_crosscheck()?;
    let xref = "lattice and operator computations of quadruple products";
    r.push(Check::equal("quadruples-checked", 210, x.quadruples_checked, xref));
    r.push(Check::equal("quadruple-mismatches", 0, x.mismatches.len(), xref));
    r.push(Check::equal("operator-side-values", json!({"e4": "324", "u1u2e2": "-18", "We2": "243"}),
        json!({"e4": x.e4.to_string(), "u1u2e2": x.u1u2_e2.to_string(), "We2": x.w_e2.to_string()}), xref));
    r.push(Check::holds("c2-operator-word", x.c2_agrees, xref));
    r.push(Check::holds("yp-operator-word", x.yp_agrees, xref));

    r.push(Check::equal("smith-sample-failures", 0, samples::smith_failures(&mut ctx.rng(20)), "Smith normal form"));
    r.push(Check::equal("saturation-sample-failures", 0, samples::saturation_failures(&mut ctx.rng(21)), "saturation"));
    r.push(Check::equal("discriminant-index-sample-failures", 0, samples::discriminant_index_failures(&mut ctx.rng(22)), "index and discriminant"));
    Ok(r)
}

pub fn appendix(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("appendix");
    let reference = "explicit classes divisible by 3";
    let a = kummer4::appendix_verify(ctx.model()?)?;
    r.push(Check::equal("translate-classes", 31, a.xxxi_count, reference));
    r.push(Check::equal("translate-rank-mod-3", 31, a.xxxi_rank_mod3, reference));
    r.push(Check::holds("translate-span-is-D", a.xxxi_span_is_d, reference));
    r.push(Check::equal("mixed-classes", 19, a.xix_count, reference));
    r.push(Check::equal("mixed-quotient", vec!["3"; 19], strings(&a.xix_quotient), reference));
    r.push(Check::equal("not-divisible", Vec::<String>::new(), a.not_divisible.clone(), reference));
    r.push(Check::equal("isotropic-planes", Vec::<String>::new(), a.isotropic.clone(), reference));
    r.push(Check::holds("line-control-rejected", !a.line_control_divisible, reference));
    r.summary.push(format!("isotropic under the standard form: {}", a.isotropic_standard_form.join(", ")));
    r.summary.push(format!("isotropic plane control divisible: {}", a.isotropic_control_divisible));
    Ok(r)
}

pub fn invariants(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("invariants");
    let reference = "Z[Z/2] decomposition under the involution";
    let inv = ctx.degree_invariants()?;
    r.push(Check::equal("degree-2", [0, 0, 7], triple(&inv.h2), reference));
    r.push(Check::equal("degree-3", [0, 8, 0], triple(&inv.h3), reference));
    r.push(Check::equal("degree-4", [40, 0, 28], triple(&inv.h4), reference));
    let all = AllDegrees::from_kummer(inv);
    let b = quotientbb::h4_normality_balance(&all, &FixedLocus::default());
    r.push(Check::equal("balance", [60, 60], [b.lhs, b.rhs], "balance between invariants and the fixed locus"));
    Ok(r)
}

pub fn bb_kprime(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("bb-kprime");
    let reference = "Beauville-Bogomolov form of the quotient";
    let solution = quotientbb::solve_fujiki(&quotientbb::kprime_gram_symbolic())?;
    r.push(Check::equal("scale", "1/2", solution.t.to_string(), reference));
    r.push(Check::equal("c", "8", solution.c.to_string(), "Fujiki constant of the quotient"));
    r.push(Check::equal("gram", quotientbb::expected_gram(), solution.gram.clone(), reference));
    r.push(Check::holds("odd", is_odd(&solution.gram), reference));
    r.push(Check::equal("discriminant", 6561, discriminant(&solution.gram), reference));
    r.push(Check::holds("z2-forms-agree", z2_forms_agree(solution.c), reference));
    let d = quotientbb::ddelta_select()?;
    r.push(Check::equal("ddelta", json!({"selected": 36, "value": 144}), json!({"selected": d.selected, "value": d.value}), "parity of the exceptional divisor count"));
    let inv = ctx.degree_invariants()?;
    let all = AllDegrees::from_kummer(inv);
    let fixed = FixedLocus::default();
    let betti = quotientbb::kprime_betti(&all, &fixed);
    r.push(Check::equal("betti", json!({"b2": 8, "b3": 0, "b4": 90, "euler": 108}), betti, "Betti numbers of the quotient"));
    r.push(Check::holds("balance", checked_balance(&all, &fixed).is_ok(), reference));
    let perturbed = FixedLocus { isolated_points: 35, ..fixed };
    r.push(Check::holds("balance-fails-with-35-points", checked_balance(&all, &perturbed).is_err(), reference));
    let cert = quotientbb::certify(inv, &fixed)?;
    r.push(Check::holds("certification", cert.passes(), reference));
    r.summary.push(format!("c = {}", solution.c));
    let rows: Vec<String> = solution.gram[6..].iter().map(|row| format!("{},{}", row[6], row[7])).collect();
    r.summary.push(format!("final block: {}", rows.join("/")));
    r.summary.push(format!("certificate: {}", serde_json::to_string(&cert).expect("serializable")));
    Ok(r)
}
