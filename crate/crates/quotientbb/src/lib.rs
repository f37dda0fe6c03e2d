//! The Beauville–Bogomolov lattice, Fujiki constant and Betti numbers of the
//! quotient K′ of K₂(A) by the symplectic involution.

pub mod error;
pub mod gram;
pub mod topology;

use serde::Serialize;

pub use error::QuotientError;
pub use gram::{expected_gram, kprime_gram_symbolic, solve_fujiki, FujikiSolution, SymbolicGram};
pub use topology::{ddelta_select, h4_normality_balance, kprime_betti, AllDegrees, Balance, Betti, DdeltaSelection, FixedLocus};

/// The certification record of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub c_fujiki: i64,
    pub gram: Vec<Vec<i64>>,
    pub is_odd: bool,
    pub betti: Betti,
    pub balance: Balance,
    pub ddelta: i64,
}

impl Certification {
    pub fn passes(&self) -> bool {
        self.c_fujiki == 8
            && self.gram == expected_gram()
            && self.is_odd
            && self.betti == Betti { b2: 8, b3: 0, b4: 90, euler: 108 }
            && self.balance.holds()
            && self.ddelta == 36
    }
}

pub fn certify(inv: &kummer4::DegreeInvariants, fixed: &FixedLocus) -> error::Result<Certification> {
    let solution = solve_fujiki(&kprime_gram_symbolic())?;
    let all = AllDegrees::from_kummer(inv);
    let c = solution.c;
    Ok(Certification {
        c_fujiki: if c.is_integer() { c.to_integer() } else { 0 },
        is_odd: gram::is_odd(&solution.gram),
        gram: solution.gram,
        betti: kprime_betti(&all, fixed),
        balance: h4_normality_balance(&all, fixed),
        ddelta: ddelta_select()?.selected,
    })
}
