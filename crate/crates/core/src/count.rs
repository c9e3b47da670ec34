//! Field-operation counters.
//!
//! Complexity claims are checked against measurement, not against formulas
//! alone: every multiplication and addition on the protocol path goes through
//! an [`OpCount`], and counts are tagged by the protocol phase that incurred
//! them. Initialization is tallied separately from per-round work because it
//! amortizes over the lifetime of a key.

use core::ops::{Add, AddAssign};

use crate::field::FieldElement;

/// Running tally of field multiplications and additions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCount {
    pub muls: u64,
    pub adds: u64,
}

impl OpCount {
    /// Multiply two elements, counting one field multiplication.
    #[inline]
    pub fn mul(&mut self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.muls += 1;
        a * b
    }

    /// Add two elements, counting one field addition.
    #[inline]
    pub fn add(&mut self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.adds += 1;
        a + b
    }

    /// Subtract two elements; counted as an addition.
    #[inline]
    pub fn sub(&mut self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.adds += 1;
        a - b
    }

    pub fn total(&self) -> u64 {
        self.muls + self.adds
    }
}

impl Add for OpCount {
    type Output = OpCount;

    fn add(self, rhs: OpCount) -> OpCount {
        OpCount {
            muls: self.muls + rhs.muls,
            adds: self.adds + rhs.adds,
        }
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, rhs: OpCount) {
        self.muls += rhs.muls;
        self.adds += rhs.adds;
    }
}

/// Protocol phase a count is attributed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Phase {
    /// One-time key setup (parity sampling and its product with the
    /// coefficient matrix); excluded from per-round cost.
    Init,
    /// Building the power vectors (or multivariate input vectors) for a round.
    Encode,
    /// The delegated matrix-vector product (server-side work, including any
    /// recomputation a node performs on behalf of a failed peer).
    Serve,
    /// Parity-check comparison of a response.
    Verify,
    /// Contraction of an accepted response to the polynomial value.
    Decode,
}

impl Phase {
    pub const ALL: [Phase; 5] = [
        Phase::Init,
        Phase::Encode,
        Phase::Serve,
        Phase::Verify,
        Phase::Decode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Init => "init",
            Phase::Encode => "encode",
            Phase::Serve => "serve",
            Phase::Verify => "verify",
            Phase::Decode => "decode",
        }
    }

    fn index(self) -> usize {
        match self {
            Phase::Init => 0,
            Phase::Encode => 1,
            Phase::Serve => 2,
            Phase::Verify => 3,
            Phase::Decode => 4,
        }
    }
}

/// Per-phase tallies for one participant.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PhaseCounts {
    slots: [OpCount; 5],
}

impl PhaseCounts {
    pub fn of(&self, phase: Phase) -> OpCount {
        self.slots[phase.index()]
    }

    pub fn phase_mut(&mut self, phase: Phase) -> &mut OpCount {
        &mut self.slots[phase.index()]
    }

    /// Sum over all phases.
    pub fn total(&self) -> OpCount {
        self.slots.iter().fold(OpCount::default(), |acc, c| acc + *c)
    }

    /// Per-round cost: everything except the amortized initialization.
    pub fn per_round(&self) -> OpCount {
        let total = self.total();
        let init = self.of(Phase::Init);
        OpCount {
            muls: total.muls - init.muls,
            adds: total.adds - init.adds,
        }
    }

    pub fn merge(&mut self, other: &PhaseCounts) {
        for (dst, src) in self.slots.iter_mut().zip(other.slots.iter()) {
            *dst += *src;
        }
    }

    /// Componentwise difference; `other` must be an earlier snapshot of the
    /// same monotone tally.
    pub fn since(&self, other: &PhaseCounts) -> PhaseCounts {
        let mut out = PhaseCounts::default();
        for (i, slot) in out.slots.iter_mut().enumerate() {
            slot.muls = self.slots[i].muls - other.slots[i].muls;
            slot.adds = self.slots[i].adds - other.slots[i].adds;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    #[test]
    fn counted_ops_match_plain_ops() {
        let ctx = FieldContext::new(7).unwrap();
        let mut count = OpCount::default();
        let a = ctx.element(5);
        let b = ctx.element(4);
        assert_eq!(count.add(a, b), a + b);
        assert_eq!(count.mul(a, b), a * b);
        assert_eq!(count, OpCount { muls: 1, adds: 1 });
    }

    #[test]
    fn totals_conserve_phase_sums() {
        let ctx = FieldContext::new(7).unwrap();
        let a = ctx.element(3);
        let mut phases = PhaseCounts::default();
        phases.phase_mut(Phase::Init).mul(a, a);
        phases.phase_mut(Phase::Serve).mul(a, a);
        phases.phase_mut(Phase::Serve).add(a, a);
        phases.phase_mut(Phase::Decode).add(a, a);
        let total = phases.total();
        assert_eq!(total.muls, 2);
        assert_eq!(total.adds, 2);
        let per_round = phases.per_round();
        assert_eq!(per_round.muls, 1);
        assert_eq!(per_round.adds, 2);
    }
}
